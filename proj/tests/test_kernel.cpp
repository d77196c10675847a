#include <gtest/gtest.h>

#include "joinlang/diagnostic.hpp"
#include "joinlang/kernel.hpp"
#include "joinlang/surface.hpp"

using namespace joinlang;

namespace {

struct Fixture {
  GlobalTable table;

  void load(std::string_view src) {
    auto m = parse_module(src);
    for (auto const& d : m.decls)
      check_decl(table, resolve([this](std::string const& n) { return table.contains(n); }, d, table.names()), "t.jt");
  }

  std::string rejection(std::string_view src) {
    try {
      load(src);
    } catch (Error const& e) {
      return e.diagnostic().rule;
    }
    return "accepted";
  }

  TermPtr term(std::string_view src, std::vector<std::string> const& locals = {}) {
    return resolve_term(*parse_term(src), locals, [this](std::string const& n) { return table.contains(n); });
  }

  std::string infer_type(std::string_view src) {
    Checker c(table);
    Context ctx(table);
    auto r = c.infer(ctx, term(src));
    return c.show(ctx, r.type);
  }
};

char const* const funext0 =
    "postulate funext0 : Π(A : U0)(B : A → U0)(f g : Π(a : A). B a). (Π(a : A). Id (B a) (f a) (g a)) → Id (Π(a : A). B a) f g\n";

}  // namespace

TEST(Infer, UniverseRule) {
  Fixture f;
  EXPECT_EQ(f.infer_type("U0"), "U1");
  EXPECT_EQ(f.infer_type("U1"), "U2");
  EXPECT_EQ(f.rejection("define bad : U0 := U0"), "universe-too-big");
  EXPECT_EQ(f.rejection("define bad : U1 := U2"), "universe-too-big");
}

TEST(Infer, LambdaNeedsCheckingMode) {
  Fixture f;
  try {
    f.infer_type("λ x → x");
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.diagnostic().rule, "cannot-infer");
  }
}

TEST(Infer, JOnReflNormalizes) {
  Fixture f;
  f.load("define jr : Nat := J Nat 0 (λ b _ → Nat) 5 0 refl");
  EXPECT_EQ(print_term(*f.table.nbe().normalize({}, f.table.find("jr")->body)), "succ (succ (succ (succ (succ zero))))");
}

TEST(Check, LambdaAgainstPiOfUniverse) {
  Fixture f;
  EXPECT_EQ(f.rejection("define bad : Π(A : U0). A := λ x → x"), "type-mismatch");
  EXPECT_EQ(f.rejection("define ok (A : U0) : A → A := λ x → x"), "accepted");
}

TEST(Check, Cumulativity) {
  Fixture f;
  EXPECT_EQ(f.rejection("define u : U1 := U0\ndefine v : Nat → U1 := λ _ → Nat\ndefine w : U1 := Nat → U0"), "accepted");
  EXPECT_EQ(f.rejection("define bad : U0 := Nat → U0"), "universe-too-big");
  Checker c(f.table);
  Context ctx(f.table);
  EXPECT_NO_THROW(c.check(ctx, f.term("U0"), vuniv(2)));
}

TEST(Check, PairWithDependentIdentity) {
  Fixture f;
  EXPECT_EQ(f.rejection("define p : Σ(x : Unit). Id Unit x star := (star, refl)"), "accepted");
  EXPECT_EQ(f.rejection("define q : Σ(x : Bool). Id Bool x true := (false, refl)"), "type-mismatch");
}

TEST(Check, HoleRejected) {
  Fixture f;
  EXPECT_EQ(f.rejection("define h : Nat := succ _"), "unsolved-hole");
}

TEST(Check, EliminatorRules) {
  Fixture f;
  EXPECT_EQ(f.rejection("define a (A : U0) (x : A) : Id A x x := J A x (λ b → b) refl x refl"), "J-motive");
  EXPECT_EQ(f.rejection("define a (A : U0) (x y : A) (p : Id A x y) : Id A y x := J A x (λ b _ → Id A b x) p y p"),
            "J-base");
  EXPECT_EQ(f.rejection("define a (n : Nat) : Nat := natind (λ _ → Nat) true (λ _ r → r) n"), "natind-base");
  EXPECT_EQ(f.rejection("define a (n : Nat) : Nat := natind (λ _ → Nat) zero (λ r → r) n"), "natind-step");
  EXPECT_EQ(f.rejection("define a (b : Bool) : Nat := boolind Nat 1 2 b"), "boolind-motive");
  EXPECT_EQ(f.rejection("define a (e : Empty) : Nat := abort Nat e"), "abort-motive");
}

TEST(Graph, EdgelessQuotient) {
  Fixture f;
  EXPECT_EQ(f.rejection("define G : U0 := GQuot Bool (λ _ _ → Empty)\n"
                        "define el : G → Unit := λ x → gind Bool (λ _ _ → Empty) (λ _ → Unit) (λ _ → star) "
                        "(λ i j e → abort (λ _ → Id Unit (J G (gpt Bool (λ _ _ → Empty) i) (λ y _ → Unit) star "
                        "(gpt Bool (λ _ _ → Empty) j) (gedg Bool (λ _ _ → Empty) i j e)) star) e) x"),
            "accepted");
}

TEST(Graph, LargeMotiveOverSmallQuotient) {
  Fixture f;
  EXPECT_EQ(f.rejection("define G : U0 := GQuot Bool (λ _ _ → Empty)\n"
                        "define code : G → U0 := λ x → gind Bool (λ _ _ → Empty) (λ _ → U0) (λ b → boolind (λ _ → U0) Nat Unit b) "
                        "(λ i j e → abort (λ _ → Id U0 (J G (gpt Bool (λ _ _ → Empty) i) (λ y _ → U0) "
                        "(boolind (λ _ → U0) Nat Unit i) (gpt Bool (λ _ _ → Empty) j) (gedg Bool (λ _ _ → Empty) i j e)) "
                        "(boolind (λ _ → U0) Nat Unit j)) e) x\n"
                        "define c : code (gpt Bool (λ _ _ → Empty) true) := 3"),
            "accepted");
}

TEST(Graph, EdgeMethodAndEndpoints) {
  Fixture f;
  EXPECT_EQ(f.rejection("define bad (V : U0) (E : V → V → U0) : GQuot V E → Nat := λ x → gind V E (λ _ → Nat) (λ _ → 0) (λ i j r → refl) x"),
            "gind-edge-method");
  EXPECT_EQ(f.rejection("define e (V : U0) (E : V → V → U0) (i j : V) (r : E i j) : Id (GQuot V E) (gpt V E j) (gpt V E i) := gedg V E i j r"),
            "gedg-endpoint");
  EXPECT_EQ(f.rejection("define q : U0 := GQuot Nat Nat"), "gquot-edges");
}

TEST(Assumptions, PostulateListsItself) {
  Fixture f;
  f.load(funext0);
  EXPECT_EQ(assumptions_of(f.table, "funext0"), std::vector<std::string>{"funext0"});
  f.load("define idfn (A : U0) : A → A := λ x → x\n"
         "define use (A : U0) (f g : A → A) (h : Π(a : A). Id A (f a) (g a)) : Id (A → A) f g := funext0 A (λ _ → A) f g h\n"
         "define use2 (A : U0) (f g : A → A) (h : Π(a : A). Id A (f a) (g a)) : Id (A → A) f g := use A f g h\n");
  EXPECT_TRUE(assumptions_of(f.table, "idfn").empty());
  EXPECT_EQ(assumptions_of(f.table, "use2"), std::vector<std::string>{"funext0"});
  try {
    assumptions_of(f.table, "nope");
    FAIL();
  } catch (Error const& e) {
    EXPECT_EQ(e.diagnostic().rule, "unknown-name");
  }
}

TEST(Kernel, EdgeRulePrimitive) {
  Fixture f;
  auto d = f.table.find("gind_edg");
  ASSERT_TRUE(d);
  EXPECT_TRUE(d->primitive);
  EXPECT_EQ(d->kind, DeclKind::postulate);
  EXPECT_EQ(assumptions_of(f.table, "gind_edg"), std::vector<std::string>{"gind_edg"});
}

TEST(Kernel, SubjectReduction) {
  Fixture f;
  f.load("define add (m n : Nat) : Nat := natind (λ _ → Nat) m (λ _ r → succ r) n\n"
         "define twice (f : Nat → Nat) : Nat → Nat := λ x → f (f x)\n"
         "define v : Nat := twice (add 3) 1\n"
         "define sym (A : U0) (x y : A) (p : Id A x y) : Id A y x := J A x (λ b _ → Id A b x) refl y p\n"
         "define pr : Σ(n : Nat). Id Nat n (add 2 2) := (4, refl)\n");
  Checker c(f.table);
  for (auto const& d : f.table.all()) {
    if (!d->body) continue;
    TermPtr nf = f.table.nbe().normalize({}, d->body);
    EXPECT_NO_THROW(c.check(Context(f.table), nf, d->type_value)) << d->name;
  }
}
