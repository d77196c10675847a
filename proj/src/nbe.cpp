#include "joinlang/nbe.hpp"

#include <stdexcept>

namespace joinlang {

Val const& Env::lookup(std::size_t index) const {
  auto const* n = node_.get();
  for (std::size_t i = 0; i < index && n; ++i) n = n->next.get();
  if (!n) throw std::logic_error("Env::lookup: index out of range");
  return n->value;
}

Val vuniv(std::size_t level) {
  auto v = std::make_shared<Value>();
  v->kind = Kind::Univ;
  v->level = level;
  return v;
}

Val vleaf(Kind k) {
  auto v = std::make_shared<Value>();
  v->kind = k;
  return v;
}

Val vlocal(std::size_t level) {
  auto v = std::make_shared<Value>();
  v->kind = Kind::Var;
  v->head = Head{Head::Tag::local, level, {}, nullptr, nullptr};
  return v;
}

Val vglobal(std::string name) {
  auto v = std::make_shared<Value>();
  v->kind = Kind::Var;
  v->head = Head{Head::Tag::global, 0, std::move(name), nullptr, nullptr};
  return v;
}

Val vcanon(Kind k, std::vector<Val> args) {
  auto v = std::make_shared<Value>();
  v->kind = k;
  v->args = std::move(args);
  return v;
}

Val vbinder(Kind k, std::string name, std::vector<Val> args, Closure c) {
  auto v = std::make_shared<Value>();
  v->kind = k;
  v->name = std::move(name);
  v->args = std::move(args);
  v->closure = std::move(c);
  return v;
}

namespace {

#ifndef NDEBUG
thread_local std::size_t eval_steps = 0;
constexpr std::size_t eval_step_limit = std::size_t{1} << 36;
#endif

Val stuck(Val scrutinee, Elim e) {
  auto v = std::make_shared<Value>();
  v->kind = Kind::Var;
  if (scrutinee->kind == Kind::Var) {
    v->head = scrutinee->head;
    v->spine = scrutinee->spine;
  } else {
    v->head = Head{Head::Tag::stuck, 0, {}, scrutinee, nullptr};
  }
  v->spine.push_back(std::move(e));
  return v;
}

[[noreturn]] void ill_typed(char const* what) {
  throw std::logic_error(std::string("evaluation of ill-typed ") + what);
}

}  // namespace

Val Nbe::apply_closure(Closure const& c, Val arg) const { return eval(c.env.extend(std::move(arg)), c.body); }

Val Nbe::apply(Val f, Val a) const {
  if (f->kind == Kind::Lam) return apply_closure(f->closure, std::move(a));
  if (f->kind == Kind::Var) return stuck(std::move(f), Elim{Kind::App, {std::move(a)}});
  ill_typed("application");
}

Val Nbe::fst(Val p) const {
  p = force(std::move(p));
  if (p->kind == Kind::Pair) return p->args[0];
  if (p->kind == Kind::Var) return stuck(std::move(p), Elim{Kind::Fst, {}});
  ill_typed("projection");
}

Val Nbe::snd(Val p) const {
  p = force(std::move(p));
  if (p->kind == Kind::Pair) return p->args[1];
  if (p->kind == Kind::Var) return stuck(std::move(p), Elim{Kind::Snd, {}});
  ill_typed("projection");
}

Val Nbe::natind(Val P, Val z, Val s, Val n) const {
  n = force(std::move(n));
  if (n->kind == Kind::Zero) return z;
  if (n->kind == Kind::Succ) {
    Val pred = n->args[0];
    Val rec = natind(P, z, s, pred);
    return apply(apply(s, pred), rec);
  }
  if (n->kind == Kind::Var) return stuck(std::move(n), Elim{Kind::NatInd, {P, z, s}});
  ill_typed("natind");
}

Val Nbe::boolind(Val P, Val t, Val f, Val b) const {
  b = force(std::move(b));
  if (b->kind == Kind::True) return t;
  if (b->kind == Kind::False) return f;
  if (b->kind == Kind::Var) return stuck(std::move(b), Elim{Kind::BoolInd, {P, t, f}});
  ill_typed("boolind");
}

Val Nbe::unitind(Val P, Val s, Val u) const {
  u = force(std::move(u));
  if (u->kind == Kind::Star) return s;
  if (u->kind == Kind::Var) return stuck(std::move(u), Elim{Kind::UnitInd, {P, s}});
  ill_typed("unitind");
}

Val Nbe::abort(Val P, Val e) const {
  e = force(std::move(e));
  if (e->kind == Kind::Var) return stuck(std::move(e), Elim{Kind::Abort, {P}});
  ill_typed("abort");
}

Val Nbe::J(Val A, Val a, Val C, Val d, Val b, Val p) const {
  p = force(std::move(p));
  if (p->kind == Kind::Refl) return d;
  if (p->kind == Kind::Var || p->kind == Kind::Gedg) return stuck(std::move(p), Elim{Kind::J, {A, a, C, d, b}});
  ill_typed("J");
}

Val Nbe::gind(Val V, Val E, Val P, Val p, Val e, Val x) const {
  x = force(std::move(x));
  if (x->kind == Kind::Gpt) return apply(p, x->args[2]);
  if (x->kind == Kind::Var) return stuck(std::move(x), Elim{Kind::Gind, {V, E, P, p, e}});
  ill_typed("gind");
}

Val Nbe::force(Val v) const {
  while (v->glued()) {
    if (!v->unfolded) {
      Val r = v->head.def;
      for (auto const& e : v->spine) r = apply_elim(std::move(r), e);
      v->unfolded = std::move(r);
    }
    v = v->unfolded;
  }
  return v;
}

Val Nbe::apply_elim(Val v, Elim const& e) const {
  auto const& a = e.args;
  switch (e.kind) {
    case Kind::App: return apply(std::move(v), a[0]);
    case Kind::Fst: return fst(std::move(v));
    case Kind::Snd: return snd(std::move(v));
    case Kind::NatInd: return natind(a[0], a[1], a[2], std::move(v));
    case Kind::BoolInd: return boolind(a[0], a[1], a[2], std::move(v));
    case Kind::UnitInd: return unitind(a[0], a[1], std::move(v));
    case Kind::Abort: return abort(a[0], std::move(v));
    case Kind::J: return J(a[0], a[1], a[2], a[3], a[4], std::move(v));
    case Kind::Gind: return gind(a[0], a[1], a[2], a[3], a[4], std::move(v));
    default: throw std::logic_error("apply_elim: not an eliminator");
  }
}

Val Nbe::eval(Env const& env, TermPtr const& t) const {
#ifndef NDEBUG
  if (++eval_steps > eval_step_limit) throw std::logic_error("evaluation step limit exceeded");
#endif
  auto ev = [&](std::size_t i) { return eval(env, t->kids[i]); };
  switch (t->kind) {
    case Kind::Var: return env.lookup(t->index);
    case Kind::Global: {
      auto v = std::make_shared<Value>();
      v->kind = Kind::Var;
      v->head = Head{Head::Tag::global, 0, t->name, nullptr, globals_(t->name)};
      return v;
    }
    case Kind::Univ: return vuniv(t->index);
    case Kind::Pi:
    case Kind::Sigma: return vbinder(t->kind, t->name, {ev(0)}, Closure{env, t->kids[1]});
    case Kind::Lam: return vbinder(Kind::Lam, t->name, {}, Closure{env, t->kids[1]});
    case Kind::Let: return eval(env.extend(ev(1)), t->kids[2]);
    case Kind::Ann: return ev(0);
    case Kind::App: return apply(ev(0), ev(1));
    case Kind::Fst: return fst(ev(0));
    case Kind::Snd: return snd(ev(0));
    case Kind::NatInd: return natind(ev(0), ev(1), ev(2), ev(3));
    case Kind::BoolInd: return boolind(ev(0), ev(1), ev(2), ev(3));
    case Kind::UnitInd: return unitind(ev(0), ev(1), ev(2));
    case Kind::Abort: return abort(ev(0), ev(1));
    case Kind::J: return J(ev(0), ev(1), ev(2), ev(3), ev(4), ev(5));
    case Kind::Gind: return gind(ev(0), ev(1), ev(2), ev(3), ev(4), ev(5));
    case Kind::Hole: throw std::logic_error("eval: hole");
    default: {
      std::vector<Val> args;
      args.reserve(t->kids.size());
      for (std::size_t i = 0; i < t->kids.size(); ++i) args.push_back(ev(i));
      return vcanon(t->kind, std::move(args));
    }
  }
}

// ---------------------------------------------------------------- readback

TermPtr Nbe::quote_neutral(std::size_t depth, Value const& v) const {
  TermPtr acc;
  switch (v.head.tag) {
    case Head::Tag::local: acc = var(depth - 1 - v.head.level); break;
    case Head::Tag::global: acc = global(v.head.name); break;
    case Head::Tag::stuck: acc = quote(depth, v.head.stuck); break;
  }
  for (auto const& e : v.spine) {
    if (e.kind == Kind::App) {
      acc = app(acc, quote(depth, e.args[0]));
      continue;
    }
    std::vector<TermPtr> kids;
    for (auto const& a : e.args) kids.push_back(quote(depth, a));
    kids.push_back(acc);
    acc = make_term(e.kind, std::move(kids));
  }
  return acc;
}

TermPtr Nbe::quote(std::size_t depth, Val const& glued) const {
  Val v = force(glued);
  switch (v->kind) {
    case Kind::Var: return quote_neutral(depth, *v);
    case Kind::Univ: return univ(v->level);
    case Kind::Pi:
    case Kind::Sigma: {
      TermPtr dom = quote(depth, v->args[0]);
      TermPtr cod = quote(depth + 1, apply_closure(v->closure, vlocal(depth)));
      return make_term(v->kind, {dom, cod}, v->name);
    }
    case Kind::Lam: return lam(v->name, quote(depth + 1, apply_closure(v->closure, vlocal(depth))));
    default: {
      std::vector<TermPtr> kids;
      for (auto const& a : v->args) kids.push_back(quote(depth, a));
      return make_term(v->kind, std::move(kids));
    }
  }
}

// ---------------------------------------------------------------- conversion

bool Nbe::conv_head(std::size_t depth, Head const& a, Head const& b) const {
  if (a.tag != b.tag) return false;
  switch (a.tag) {
    case Head::Tag::local: return a.level == b.level;
    case Head::Tag::global: return a.name == b.name;
    case Head::Tag::stuck: return conv(depth, a.stuck, b.stuck);
  }
  return false;
}

bool Nbe::conv_spine(std::size_t depth, std::vector<Elim> const& a, std::vector<Elim> const& b) const {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].kind != b[i].kind || a[i].args.size() != b[i].args.size()) return false;
    for (std::size_t k = 0; k < a[i].args.size(); ++k)
      if (!conv(depth, a[i].args[k], b[i].args[k])) return false;
  }
  return true;
}

bool Nbe::conv(std::size_t depth, Val const& ga, Val const& gb) const {
  if (ga == gb) return true;
  if (ga->glued() && gb->glued() && ga->head.name == gb->head.name && conv_spine(depth, ga->spine, gb->spine))
    return true;
  Val a = force(ga), b = force(gb);
  if (a == b) return true;
  if (a->kind == Kind::Lam || b->kind == Kind::Lam) {
    Val x = vlocal(depth);
    return conv(depth + 1, apply(a, x), apply(b, x));
  }
  if (a->kind == Kind::Pair || b->kind == Kind::Pair) return conv(depth, fst(a), fst(b)) && conv(depth, snd(a), snd(b));
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Kind::Var: return conv_head(depth, a->head, b->head) && conv_spine(depth, a->spine, b->spine);
    case Kind::Univ: return a->level == b->level;
    case Kind::Pi:
    case Kind::Sigma: {
      if (!conv(depth, a->args[0], b->args[0])) return false;
      Val x = vlocal(depth);
      return conv(depth + 1, apply_closure(a->closure, x), apply_closure(b->closure, x));
    }
    default:
      if (a->args.size() != b->args.size()) return false;
      for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!conv(depth, a->args[i], b->args[i])) return false;
      return true;
  }
}

bool Nbe::subtype(std::size_t depth, Val const& glued_actual, Val const& glued_expected) const {
  if (glued_actual->glued() && glued_expected->glued() && glued_actual->head.name == glued_expected->head.name &&
      conv_spine(depth, glued_actual->spine, glued_expected->spine))
    return true;
  Val actual = force(glued_actual), expected = force(glued_expected);
  if (actual->kind == Kind::Univ && expected->kind == Kind::Univ) return actual->level <= expected->level;
  if (actual->kind == expected->kind && (actual->kind == Kind::Pi || actual->kind == Kind::Sigma)) {
    bool dom_ok = actual->kind == Kind::Pi ? conv(depth, actual->args[0], expected->args[0])
                                           : subtype(depth, actual->args[0], expected->args[0]);
    if (!dom_ok) return false;
    Val x = vlocal(depth);
    return subtype(depth + 1, apply_closure(actual->closure, x), apply_closure(expected->closure, x));
  }
  return conv(depth, actual, expected);
}

}  // namespace joinlang
