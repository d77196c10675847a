#include "joinlang/kernel.hpp"

#include <algorithm>

namespace joinlang {

// ---------------------------------------------------------------- globals

namespace {

constexpr char const* primitive_source = R"(
postulate gind_edg
  (V : U1) (E : V → V → U1) (P : GQuot V E → U1)
  (p : Π(v : V). P (gpt V E v))
  (e : Π(i j : V)(r : E i j).
         Id (P (gpt V E j)) (J (GQuot V E) (gpt V E i) (λ y q → P y) (p i) (gpt V E j) (gedg V E i j r)) (p j))
  (i j : V) (r : E i j) :
  Id (Id (P (gpt V E j)) (J (GQuot V E) (gpt V E i) (λ y q → P y) (p i) (gpt V E j) (gedg V E i j r)) (p j))
     (J (GQuot V E) (gpt V E i)
        (λ y q → Id (P y) (J (GQuot V E) (gpt V E i) (λ y₁ q₁ → P y₁) (gind V E P p e (gpt V E i)) y q)
                        (gind V E P p e y))
        refl (gpt V E j) (gedg V E i j r))
     (e i j r)
)";

}  // namespace

std::vector<std::string> const& primitive_names() {
  static const std::vector<std::string> names = {"gind_edg"};
  return names;
}

GlobalTable::GlobalTable()
    : nbe_([this](std::string const& n) -> Val {
        auto d = find(n);
        return d ? d->body_value : nullptr;
      }) {
  SurfaceModule m = parse_module(primitive_source);
  for (auto const& sd : m.decls) {
    CoreDecl cd = resolve([this](std::string const& n) { return contains(n); }, sd);
    DeclPtr d = check_decl(*this, cd, "<kernel>");
    auto prim = std::make_shared<Declaration>(*d);
    prim->primitive = true;
    decls_.back() = prim;
  }
}

DeclPtr GlobalTable::find(std::string const& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : decls_[it->second];
}

void GlobalTable::append(DeclPtr d) {
  if (contains(d->name)) fail("duplicate-definition", d->span, "'" + d->name + "' is already defined");
  index_.emplace(d->name, decls_.size());
  decls_.push_back(std::move(d));
}

std::vector<std::string> GlobalTable::names() const {
  std::vector<std::string> out;
  for (auto const& d : decls_) out.push_back(d->name);
  return out;
}

// ---------------------------------------------------------------- context

std::string Context::unique_name(std::string const& hint) const {
  std::string base = hint.empty() || hint == "_" ? "x" : hint;
  auto taken = [&](std::string const& n) {
    return std::find(names_.begin(), names_.end(), n) != names_.end() || globals_->contains(n);
  };
  if (!taken(base)) return base;
  for (std::size_t k = 1;; ++k) {
    std::string c = base + "_" + std::to_string(k);
    if (!taken(c)) return c;
  }
}

Context Context::extend(std::string const& name, Val type) const {
  Context c = *this;
  c.names_.push_back(unique_name(name));
  c.env_ = env_.extend(vlocal(depth()));
  c.types_.push_back(std::move(type));
  return c;
}

Context Context::define(std::string const& name, Val type, Val value) const {
  Context c = *this;
  c.names_.push_back(unique_name(name));
  c.env_ = env_.extend(std::move(value));
  c.types_.push_back(std::move(type));
  return c;
}

// ---------------------------------------------------------------- rule templates

namespace {

/// A closed type schema with named parameters, instantiated by evaluation in
/// an environment holding the parameter values.
struct Template {
  TermPtr term;
  std::size_t arity;

  Template(std::vector<std::string> params, std::string_view source) : arity(params.size()) {
    SurfacePtr s = parse_term(source);
    term = resolve_term(*s, params, [](std::string const&) { return false; });
  }

  Val operator()(Nbe const& nbe, std::vector<Val> const& args) const {
    Env env;
    for (auto const& a : args) env = env.extend(a);
    return nbe.eval(env, term);
  }
};

Template const& t_id_motive() {
  static const Template t({"A", "a"}, "Π(b : A). Id A a b → U2");
  return t;
}
Template const& t_family(char const* dom) {
  static const Template nat({}, "Nat → U2");
  static const Template boolean({}, "Bool → U2");
  static const Template empty({}, "Empty → U2");
  static const Template unit({}, "Unit → U2");
  std::string_view d(dom);
  return d == "Nat" ? nat : d == "Bool" ? boolean : d == "Empty" ? empty : unit;
}
Template const& t_nat_step() {
  static const Template t({"P"}, "Π(k : Nat). P k → P (succ k)");
  return t;
}
Template const& t_edge_family() {
  static const Template t({"V", "l"}, "V → V → l");
  return t;
}
Template const& t_gquot_motive() {
  static const Template t({"V", "E"}, "GQuot V E → U2");
  return t;
}
Template const& t_point_method() {
  static const Template t({"V", "E", "P"}, "Π(v : V). P (gpt V E v)");
  return t;
}
Template const& t_edge_method() {
  static const Template t({"V", "E", "P", "p"},
                          "Π(i j : V)(r : E i j). Id (P (gpt V E j)) "
                          "(J (GQuot V E) (gpt V E i) (λ y q → P y) (p i) (gpt V E j) (gedg V E i j r)) (p j)");
  return t;
}

}  // namespace

// ---------------------------------------------------------------- checker

std::string Checker::show(Context const& ctx, Val const& v) const {
  return print_term(*nbe_.quote(ctx.depth(), v), ctx.names());
}

TermPtr Checker::check_rule(Context const& ctx, TermPtr const& t, Val const& expected, char const* rule) const {
  try {
    return check(ctx, t, expected);
  } catch (Error& e) {
    auto& d = e.diagnostic();
    if (d.rule == "type-mismatch" || d.rule == "universe-too-big") d.rule = rule;
    throw;
  }
}

std::size_t Checker::infer_level(Context const& ctx, TermPtr const& t) const {
  Inferred r = infer(ctx, t);
  r.type = nbe_.force(r.type);
  if (r.type->kind != Kind::Univ)
    fail("not-a-type", t->span, "expected a type", "a universe", show(ctx, r.type));
  return r.type->level;
}

void Checker::check_graph(Context const& ctx, TermPtr const& V, TermPtr const& E, Span span) const {
  std::size_t level = infer_level(ctx, V);
  Val Vv = eval(ctx, V);
  check_rule(ctx, E, t_edge_family()(nbe_, {Vv, vuniv(max_level)}), "gquot-edges");
  try {
    check(ctx, E, t_edge_family()(nbe_, {Vv, vuniv(level)}));
  } catch (Error const&) {
    fail("gquot-level", span, "edge family lives above the universe of the vertex type",
         "edges in U" + std::to_string(level), print_term(*E, ctx.names()));
  }
}

Inferred Checker::infer(Context const& ctx, TermPtr const& t) const {
  auto const& k = t->kids;
  auto ev = [&](std::size_t i) { return eval(ctx, k[i]); };
  switch (t->kind) {
    case Kind::Var:
      if (t->index >= ctx.depth()) throw std::logic_error("ill-scoped variable reached the kernel");
      return {t, ctx.type_of(t->index)};
    case Kind::Global: {
      DeclPtr d = globals_.find(t->name);
      if (!d) fail("unbound-identifier", t->span, "unknown global '" + t->name + "'");
      return {t, d->type_value};
    }
    case Kind::Univ:
      if (t->index >= static_cast<std::size_t>(max_level))
        fail("universe-too-big", t->span, "U" + std::to_string(t->index) + " has no type in the hierarchy");
      return {t, vuniv(t->index + 1)};
    case Kind::Pi:
    case Kind::Sigma: {
      std::size_t i = infer_level(ctx, k[0]);
      Context inner = ctx.extend(t->name, ev(0));
      std::size_t j = infer_level(inner, k[1]);
      return {t, vuniv(std::max(i, j))};
    }
    case Kind::Lam: {
      if (!k[0]) fail("cannot-infer", t->span, "cannot infer the type of an unannotated lambda");
      infer_level(ctx, k[0]);
      Val dom = ev(0);
      Context inner = ctx.extend(t->name, dom);
      Inferred body = infer(inner, k[1]);
      TermPtr cod = nbe_.quote(inner.depth(), body.type);
      return {t, vbinder(Kind::Pi, t->name, {dom}, Closure{ctx.env(), cod})};
    }
    case Kind::App: {
      Inferred f = infer(ctx, k[0]);
      f.type = nbe_.force(f.type);
      if (f.type->kind != Kind::Pi)
        fail("app-nonfunction", k[0]->span, "applying a term that is not a function", "a function type",
             show(ctx, f.type));
      check(ctx, k[1], f.type->args[0]);
      return {t, nbe_.apply_closure(f.type->closure, ev(1))};
    }
    case Kind::Pair: fail("cannot-infer", t->span, "cannot infer the type of a pair; add an annotation");
    case Kind::Refl: fail("cannot-infer", t->span, "cannot infer the type of refl; add an annotation");
    case Kind::Fst:
    case Kind::Snd: {
      Inferred p = infer(ctx, k[0]);
      p.type = nbe_.force(p.type);
      if (p.type->kind != Kind::Sigma)
        fail("proj-nonpair", k[0]->span, "projecting from a term that is not a pair", "a Σ-type",
             show(ctx, p.type));
      if (t->kind == Kind::Fst) return {t, p.type->args[0]};
      return {t, nbe_.apply_closure(p.type->closure, nbe_.fst(ev(0)))};
    }
    case Kind::Id: {
      std::size_t l = infer_level(ctx, k[0]);
      Val A = ev(0);
      check(ctx, k[1], A);
      check(ctx, k[2], A);
      return {t, vuniv(l)};
    }
    case Kind::J: {
      // J A a C d b p
      infer_level(ctx, k[0]);
      Val A = ev(0);
      check(ctx, k[1], A);
      Val a = ev(1);
      check_rule(ctx, k[2], t_id_motive()(nbe_, {A, a}), "J-motive");
      Val C = ev(2);
      check_rule(ctx, k[3], nbe_.apply(nbe_.apply(C, a), vleaf(Kind::Refl)), "J-base");
      check(ctx, k[4], A);
      Val b = ev(4);
      check(ctx, k[5], vcanon(Kind::Id, {A, a, b}));
      return {t, nbe_.apply(nbe_.apply(C, b), ev(5))};
    }
    case Kind::Nat:
    case Kind::Bool:
    case Kind::Empty:
    case Kind::Unit: return {t, vuniv(0)};
    case Kind::Zero: return {t, vleaf(Kind::Nat)};
    case Kind::True:
    case Kind::False: return {t, vleaf(Kind::Bool)};
    case Kind::Star: return {t, vleaf(Kind::Unit)};
    case Kind::Succ: check(ctx, k[0], vleaf(Kind::Nat)); return {t, vleaf(Kind::Nat)};
    case Kind::NatInd: {
      check_rule(ctx, k[0], t_family("Nat")(nbe_, {}), "natind-motive");
      Val P = ev(0);
      check_rule(ctx, k[1], nbe_.apply(P, vleaf(Kind::Zero)), "natind-base");
      check_rule(ctx, k[2], t_nat_step()(nbe_, {P}), "natind-step");
      check(ctx, k[3], vleaf(Kind::Nat));
      return {t, nbe_.apply(P, ev(3))};
    }
    case Kind::BoolInd: {
      check_rule(ctx, k[0], t_family("Bool")(nbe_, {}), "boolind-motive");
      Val P = ev(0);
      check(ctx, k[1], nbe_.apply(P, vleaf(Kind::True)));
      check(ctx, k[2], nbe_.apply(P, vleaf(Kind::False)));
      check(ctx, k[3], vleaf(Kind::Bool));
      return {t, nbe_.apply(P, ev(3))};
    }
    case Kind::Abort: {
      check_rule(ctx, k[0], t_family("Empty")(nbe_, {}), "abort-motive");
      check(ctx, k[1], vleaf(Kind::Empty));
      return {t, nbe_.apply(ev(0), ev(1))};
    }
    case Kind::UnitInd: {
      check_rule(ctx, k[0], t_family("Unit")(nbe_, {}), "unitind-motive");
      Val P = ev(0);
      check(ctx, k[1], nbe_.apply(P, vleaf(Kind::Star)));
      check(ctx, k[2], vleaf(Kind::Unit));
      return {t, nbe_.apply(P, ev(2))};
    }
    case Kind::GQuot: {
      check_graph(ctx, k[0], k[1], t->span);
      return {t, vuniv(infer_level(ctx, k[0]))};
    }
    case Kind::Gpt: {
      check_graph(ctx, k[0], k[1], t->span);
      check(ctx, k[2], ev(0));
      return {t, vcanon(Kind::GQuot, {ev(0), ev(1)})};
    }
    case Kind::Gedg: {
      check_graph(ctx, k[0], k[1], t->span);
      Val V = ev(0), E = ev(1);
      check(ctx, k[2], V);
      check(ctx, k[3], V);
      Val i = ev(2), j = ev(3);
      check(ctx, k[4], nbe_.apply(nbe_.apply(E, i), j));
      Val Q = vcanon(Kind::GQuot, {V, E});
      return {t, vcanon(Kind::Id, {Q, vcanon(Kind::Gpt, {V, E, i}), vcanon(Kind::Gpt, {V, E, j})})};
    }
    case Kind::Gind: {
      // gind V E P p e x
      check_graph(ctx, k[0], k[1], t->span);
      Val V = ev(0), E = ev(1);
      check_rule(ctx, k[2], t_gquot_motive()(nbe_, {V, E}), "gind-motive");
      Val P = ev(2);
      check_rule(ctx, k[3], t_point_method()(nbe_, {V, E, P}), "gind-point-method");
      Val p = ev(3);
      check_rule(ctx, k[4], t_edge_method()(nbe_, {V, E, P, p}), "gind-edge-method");
      check(ctx, k[5], vcanon(Kind::GQuot, {V, E}));
      return {t, nbe_.apply(P, ev(5))};
    }
    case Kind::Let: {
      Val ty;
      if (k[0]) {
        infer_level(ctx, k[0]);
        ty = ev(0);
        check(ctx, k[1], ty);
      } else {
        ty = infer(ctx, k[1]).type;
      }
      Context inner = ctx.define(t->name, ty, ev(1));
      return {t, infer(inner, k[2]).type};
    }
    case Kind::Ann: {
      infer_level(ctx, k[1]);
      Val ty = ev(1);
      check(ctx, k[0], ty);
      return {t, ty};
    }
    case Kind::Hole: fail("unsolved-hole", t->span, "unsolved hole; its type cannot be inferred here");
    default: break;
  }
  throw std::logic_error("infer: unhandled node");
}

TermPtr Checker::check(Context const& ctx, TermPtr const& t, Val const& glued_expected) const {
  auto const& k = t->kids;
  Val expected = nbe_.force(glued_expected);
  switch (t->kind) {
    case Kind::Lam: {
      if (expected->kind != Kind::Pi)
        fail("type-mismatch", t->span, "lambda checked against a non-function type", show(ctx, expected), "a function");
      Val dom = expected->args[0];
      if (k[0]) {
        infer_level(ctx, k[0]);
        Val ann = eval(ctx, k[0]);
        if (!nbe_.conv(ctx.depth(), ann, dom))
          fail("type-mismatch", k[0]->span, "lambda domain annotation disagrees with the expected type",
               show(ctx, dom), show(ctx, ann));
      }
      Context inner = ctx.extend(t->name, dom);
      check(inner, k[1], nbe_.apply_closure(expected->closure, vlocal(ctx.depth())));
      return t;
    }
    case Kind::Pair: {
      if (expected->kind != Kind::Sigma)
        fail("type-mismatch", t->span, "pair checked against a non-Σ type", show(ctx, expected), "a pair");
      check(ctx, k[0], expected->args[0]);
      check(ctx, k[1], nbe_.apply_closure(expected->closure, eval(ctx, k[0])));
      return t;
    }
    case Kind::Refl: {
      if (expected->kind != Kind::Id)
        fail("type-mismatch", t->span, "refl checked against a non-identity type", show(ctx, expected), "Id _ x x");
      if (!nbe_.conv(ctx.depth(), expected->args[1], expected->args[2]))
        fail("type-mismatch", t->span, "refl: endpoints are not definitionally equal", show(ctx, expected->args[1]),
             show(ctx, expected->args[2]));
      return t;
    }
    case Kind::Let: {
      Val ty;
      if (k[0]) {
        infer_level(ctx, k[0]);
        ty = eval(ctx, k[0]);
        check(ctx, k[1], ty);
      } else {
        ty = infer(ctx, k[1]).type;
      }
      check(ctx.define(t->name, ty, eval(ctx, k[1])), k[2], expected);
      return t;
    }
    case Kind::Hole:
      fail("unsolved-hole", t->span, "unsolved hole", show(ctx, expected));
    default: break;
  }
  Inferred r = infer(ctx, t);
  if (nbe_.subtype(ctx.depth(), r.type, glued_expected)) return t;
  r.type = nbe_.force(r.type);
  if (t->kind == Kind::Gedg && expected->kind == Kind::Id)
    fail("gedg-endpoint", t->span, "edge constructor does not connect the expected endpoints", show(ctx, expected),
         show(ctx, r.type));
  if (r.type->kind == Kind::Univ && expected->kind == Kind::Univ)
    fail("universe-too-big", t->span, "type lives in a universe that is too large", show(ctx, expected),
         show(ctx, r.type));
  fail("type-mismatch", t->span, "type mismatch", show(ctx, expected), show(ctx, r.type));
}

// ---------------------------------------------------------------- declarations

DeclPtr check_decl(GlobalTable& table, CoreDecl const& d, std::string const& file) {
  if (table.contains(d.name)) fail("duplicate-definition", d.name_span, "'" + d.name + "' is already defined");
  Checker checker(table);
  Context empty(table);
  checker.infer_level(empty, d.type);
  auto decl = std::make_shared<Declaration>();
  decl->name = d.name;
  decl->kind = d.kind;
  decl->type = d.type;
  decl->body = d.body;
  decl->tier = d.tier;
  decl->file = file;
  decl->span = d.span;
  decl->type_value = checker.eval(empty, d.type);
  if (d.body) {
    checker.check(empty, d.body, decl->type_value);
    decl->body_value = checker.eval(empty, d.body);
  }
  std::set<std::string> refs;
  collect_globals(*d.type, refs);
  if (d.body) collect_globals(*d.body, refs);
  for (auto const& r : refs)
    if (auto g = table.find(r)) decl->assumptions.insert(g->assumptions.begin(), g->assumptions.end());
  if (d.kind == DeclKind::postulate) decl->assumptions.insert(d.name);
  table.append(decl);
  return decl;
}

std::vector<std::string> assumptions_of(GlobalTable const& table, std::string const& name) {
  DeclPtr d = table.find(name);
  if (!d) fail("unknown-name", {}, "no declaration named '" + name + "'");
  return {d->assumptions.begin(), d->assumptions.end()};
}

}  // namespace joinlang
