#include <gtest/gtest.h>

#include "joinlang/core.hpp"
#include "joinlang/kernel.hpp"
#include "joinlang/nbe.hpp"
#include "joinlang/surface.hpp"
#include "support/oracle.hpp"

using namespace joinlang;

namespace {

Nbe const& bare() {
  static const Nbe nbe([](std::string const&) -> Val { return nullptr; });
  return nbe;
}

struct Open {
  std::vector<std::string> locals;
  Env env;

  explicit Open(std::vector<std::string> names) : locals(std::move(names)) {
    for (std::size_t i = 0; i < locals.size(); ++i) env = env.extend(vlocal(i));
  }
  TermPtr term(std::string_view src) const {
    return resolve_term(*parse_term(src), locals, [](std::string const&) { return false; });
  }
  Val eval(std::string_view src) const { return bare().eval(env, term(src)); }
  TermPtr nf(std::string_view src) const { return bare().quote(locals.size(), eval(src)); }
  bool conv(std::string_view a, std::string_view b) const { return bare().conv(locals.size(), eval(a), eval(b)); }
};

char const* const add_src = "(λ m n → natind (λ _ → Nat) m (λ _ r → succ r) n)";

}  // namespace

TEST(Eval, Beta) {
  Open o({});
  EXPECT_EQ(o.nf("(λ x → x) star")->kind, Kind::Star);
}

TEST(Eval, AddTwoTwo) {
  Open o({});
  EXPECT_EQ(print_term(*o.nf(std::string(add_src) + " 2 2")), "succ (succ (succ (succ zero)))");
}

TEST(Eval, PointRule) {
  Open o({"V", "E", "P", "p", "e", "v"});
  EXPECT_TRUE(alpha_equal(*o.nf("gind V E P p e (gpt V E v)"), *o.term("p v")));
  EXPECT_TRUE(o.conv("gind V E P p e (gpt V E v)", "p v"));
}

TEST(Eval, JOnReflComputes) {
  Open o({"A", "a", "C", "d"});
  EXPECT_TRUE(alpha_equal(*o.nf("J A a C d a refl"), *o.term("d")));
}

TEST(Eval, JOnEdgeIsStuck) {
  Open o({"V", "E", "i", "j", "r", "C", "d"});
  TermPtr nf = o.nf("J (GQuot V E) (gpt V E i) C d (gpt V E j) (gedg V E i j r)");
  EXPECT_EQ(nf->kind, Kind::J);
  Val v = o.eval("J (GQuot V E) (gpt V E i) C d (gpt V E j) (gedg V E i j r)");
  EXPECT_EQ(v->head.tag, Head::Tag::stuck);
}

TEST(Eval, EliminatorsOnCanonicalForms) {
  Open o({"P", "a", "b", "s"});
  EXPECT_TRUE(alpha_equal(*o.nf("boolind P a b true"), *o.term("a")));
  EXPECT_TRUE(alpha_equal(*o.nf("boolind P a b false"), *o.term("b")));
  EXPECT_TRUE(alpha_equal(*o.nf("unitind P s star"), *o.term("s")));
  EXPECT_TRUE(alpha_equal(*o.nf("fst (a, b)"), *o.term("a")));
  EXPECT_TRUE(alpha_equal(*o.nf("snd (a, b)"), *o.term("b")));
  EXPECT_TRUE(alpha_equal(*o.nf("let x := a in (x, x)"), *o.term("(a, a)")));
}

TEST(Quote, Star) { EXPECT_EQ(bare().quote(0, vleaf(Kind::Star))->kind, Kind::Star); }

TEST(Quote, NeutralApplicationIndexArithmetic) {
  // level 0 seen from depth 3 is index 2
  Val v = bare().apply(vlocal(0), vleaf(Kind::Star));
  EXPECT_TRUE(alpha_equal(*bare().quote(3, v), *app(var(2), leaf(Kind::Star))));
  Val w = bare().apply(vlocal(2), vlocal(1));
  EXPECT_TRUE(alpha_equal(*bare().quote(3, w), *app(var(0), var(1))));
}

TEST(Quote, UnderBinders) {
  Open o({"f"});
  EXPECT_EQ(print_term(*o.nf("λ x y → (λ z → f z x) y"), {"f"}), "λ x y → f y x");
}

TEST(Conv, EtaForFunctions) {
  Open o({"f"});
  EXPECT_TRUE(o.conv("λ x → f x", "f"));
  EXPECT_TRUE(o.conv("f", "λ x → f x"));
  EXPECT_FALSE(o.conv("λ x → f star", "f"));
}

TEST(Conv, EtaForPairs) {
  Open o({"p"});
  EXPECT_TRUE(o.conv("(fst p, snd p)", "p"));
  EXPECT_TRUE(o.conv("p", "(fst p, snd p)"));
  EXPECT_FALSE(o.conv("(snd p, fst p)", "p"));
}

TEST(Conv, DistinctNumerals) {
  Open o({});
  EXPECT_FALSE(o.conv("3", "4"));
  EXPECT_TRUE(o.conv(std::string(add_src) + " 1 3", "4"));
}

TEST(Conv, UniverseSubtyping) {
  Open o({});
  EXPECT_TRUE(bare().subtype(0, o.eval("U0"), o.eval("U1")));
  EXPECT_FALSE(bare().subtype(0, o.eval("U1"), o.eval("U0")));
  EXPECT_TRUE(bare().subtype(0, o.eval("Nat → U0"), o.eval("Nat → U2")));
  EXPECT_FALSE(bare().subtype(0, o.eval("U0 → Nat"), o.eval("U1 → Nat")));
  EXPECT_TRUE(bare().subtype(0, o.eval("Σ(_ : Nat). U0"), o.eval("Σ(_ : Nat). U1")));
}

TEST(Oracle, ReferenceNormalizerBasics) {
  using namespace oracle;
  P two = succ(succ(zero()));
  P add = lam(lam(natind(nat_motive(), oracle::var(1), lam(lam(succ(oracle::var(0))), 2), oracle::var(0)), 1), 2);
  P r = oracle::normalize(app(app(add, two), two));
  EXPECT_EQ(print_term(*to_core(r)), "succ (succ (succ (succ zero)))");
}

TEST(Oracle, NbeAgreesWithSubstitution) {
  GlobalTable table;
  Checker checker(table);
  oracle::Generator g(1234567);
  int checked = 0;
  for (int i = 0; i < 1500; ++i) {
    std::size_t arity = g.pick(3) == 0 ? 1 : 0;
    oracle::P t = g.gen(arity, {}, 0);
    TermPtr core = oracle::to_core(t);
    ASSERT_NO_THROW(checker.check(Context(table), core, bare().eval({}, oracle::arrow_type(arity))))
        << print_term(*core);
    TermPtr expected = oracle::to_core(oracle::normalize(t));
    TermPtr actual = bare().normalize({}, core);
    ASSERT_TRUE(alpha_equal(*expected, *actual)) << print_term(*core) << "\n oracle: " << print_term(*expected)
                                                 << "\n nbe: " << print_term(*actual);
    ++checked;
  }
  EXPECT_GE(checked, 1000);
}

TEST(Quote, QuoteEvalIdempotent) {
  oracle::Generator g(777);
  for (int i = 0; i < 1000; ++i) {
    TermPtr core = oracle::to_core(g.gen(g.pick(3), {}, 0));
    TermPtr once = bare().normalize({}, core);
    TermPtr twice = bare().normalize({}, once);
    ASSERT_TRUE(alpha_equal(*once, *twice)) << print_term(*core);
  }
}
