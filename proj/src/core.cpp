#include "joinlang/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace joinlang {

TermPtr make_term(Kind kind, std::vector<TermPtr> kids, std::string name, std::size_t index, Span span) {
  return std::make_shared<Term>(Term{kind, index, std::move(name), std::move(kids), span});
}

bool alpha_equal(Term const& a, Term const& b) {
  if (a.kind != b.kind || a.kids.size() != b.kids.size()) return false;
  switch (a.kind) {
    case Kind::Var:
    case Kind::Univ:
      if (a.index != b.index) return false;
      break;
    case Kind::Global:
      if (a.name != b.name) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < a.kids.size(); ++i) {
    auto const& x = a.kids[i];
    auto const& y = b.kids[i];
    if (!x || !y) {
      if (x || y) return false;
      continue;
    }
    if (!alpha_equal(*x, *y)) return false;
  }
  return true;
}

bool well_scoped(Term const& t, std::size_t depth) {
  if (t.kind == Kind::Var) return t.index < depth;
  for (std::size_t i = 0; i < t.kids.size(); ++i)
    if (t.kids[i] && !well_scoped(*t.kids[i], depth + binders_over(t.kind, i))) return false;
  return true;
}

bool mentions_var(Term const& t, std::size_t index) {
  if (t.kind == Kind::Var) return t.index == index;
  for (std::size_t i = 0; i < t.kids.size(); ++i)
    if (t.kids[i] && mentions_var(*t.kids[i], index + binders_over(t.kind, i))) return true;
  return false;
}

TermPtr shift_free(TermPtr const& t, std::size_t cutoff, long amount) {
  if (!t || amount == 0) return t;
  if (t->kind == Kind::Var) {
    if (t->index < cutoff) return t;
    long shifted = static_cast<long>(t->index) + amount;
    if (shifted < 0) throw std::logic_error("shift_free: index underflow");
    return make_term(Kind::Var, {}, t->name, static_cast<std::size_t>(shifted), t->span);
  }
  if (t->kids.empty()) return t;
  std::vector<TermPtr> kids;
  kids.reserve(t->kids.size());
  bool changed = false;
  for (std::size_t i = 0; i < t->kids.size(); ++i) {
    kids.push_back(shift_free(t->kids[i], cutoff + binders_over(t->kind, i), amount));
    changed = changed || kids.back() != t->kids[i];
  }
  if (!changed) return t;
  return make_term(t->kind, std::move(kids), t->name, t->index, t->span);
}

void collect_globals(Term const& t, std::set<std::string>& out) {
  if (t.kind == Kind::Global) out.insert(t.name);
  for (auto const& k : t.kids)
    if (k) collect_globals(*k, out);
}

// ---------------------------------------------------------------- resolve

namespace {

std::size_t edit_distance(std::string const& a, std::string const& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

struct Resolver {
  GlobalScope const& globals;
  std::vector<std::string> const& candidates;
  std::vector<std::string> locals;

  [[noreturn]] void unbound(SurfaceTerm const& t) {
    std::string best;
    std::size_t best_d = 3;
    auto consider = [&](std::string const& c) {
      if (c == "_") return;
      std::size_t d = edit_distance(t.name, c);
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    };
    for (auto const& l : locals) consider(l);
    for (auto const& c : candidates) consider(c);
    std::string msg = "unbound identifier '" + t.name + "'";
    if (!best.empty()) msg += "; did you mean '" + best + "'?";
    fail("unbound-identifier", t.span, msg);
  }

  TermPtr go(SurfaceTerm const& t) {
    switch (t.kind) {
      case Kind::Var: {
        for (std::size_t i = locals.size(); i-- > 0;)
          if (locals[i] == t.name) return make_term(Kind::Var, {}, t.name, locals.size() - 1 - i, t.span);
        if (globals(t.name)) return make_term(Kind::Global, {}, t.name, 0, t.span);
        unbound(t);
      }
      case Kind::Univ: return make_term(Kind::Univ, {}, {}, static_cast<std::size_t>(t.level), t.span);
      default: break;
    }
    std::vector<TermPtr> kids;
    for (std::size_t i = 0; i < t.kids.size(); ++i) {
      std::size_t b = binders_over(t.kind, i);
      if (b) locals.push_back(t.name);
      kids.push_back(t.kids[i] ? go(*t.kids[i]) : nullptr);
      if (b) locals.pop_back();
    }
    return make_term(t.kind, std::move(kids), is_binder(t.kind) ? t.name : std::string{}, 0, t.span);
  }
};

}  // namespace

TermPtr resolve_term(SurfaceTerm const& t, std::vector<std::string> const& locals, GlobalScope const& globals,
                     std::vector<std::string> const& candidates) {
  Resolver r{globals, candidates, locals};
  return r.go(t);
}

CoreDecl resolve(GlobalScope const& globals, SurfaceDecl const& d, std::vector<std::string> const& candidates) {
  Resolver r{globals, candidates, {}};
  std::vector<TermPtr> param_types;
  for (auto const& p : d.params) {
    param_types.push_back(r.go(*p.type));
    r.locals.push_back(p.name);
  }
  TermPtr type = r.go(*d.type);
  TermPtr body = d.body ? r.go(*d.body) : nullptr;
  for (std::size_t i = d.params.size(); i-- > 0;) {
    Span s = d.params[i].type->span;
    type = make_term(Kind::Pi, {param_types[i], type}, d.params[i].name, 0, Span::join(s, type->span));
    if (body) body = make_term(Kind::Lam, {nullptr, body}, d.params[i].name, 0, Span::join(s, body->span));
  }
  return CoreDecl{d.kind, d.name, type, body, d.tier, d.span, d.name_span};
}

// ---------------------------------------------------------------- printing

namespace {

std::string subscript(std::size_t n) {
  static char const* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  std::string ascii = std::to_string(n);
  for (char c : ascii) s += digits[c - '0'];
  return s;
}

struct Unresolver {
  std::set<std::string> taken_globals;
  std::vector<std::string> names;

  bool clashes(std::string const& n) const {
    if (taken_globals.count(n)) return true;
    if (keyword_form(n)) return true;
    return std::find(names.begin(), names.end(), n) != names.end();
  }

  std::string fresh(std::string const& hint) {
    std::string base = hint.empty() || hint == "_" ? "x" : hint;
    if (!clashes(base)) return base;
    for (std::size_t k = 1;; ++k) {
      std::string c = base + subscript(k);
      if (!clashes(c)) return c;
    }
  }

  SurfacePtr go(Term const& t) {
    switch (t.kind) {
      case Kind::Var: {
        std::string n = t.index < names.size() ? names[names.size() - 1 - t.index] : "?" + std::to_string(t.index);
        return make_surface(Kind::Var, t.span, {}, n);
      }
      case Kind::Global: return make_surface(Kind::Var, t.span, {}, t.name);
      case Kind::Univ: return make_surface(Kind::Univ, t.span, {}, {}, static_cast<int>(t.index));
      default: break;
    }
    std::string binder;
    if (is_binder(t.kind)) {
      std::size_t body_index = t.kind == Kind::Let ? 2 : 1;
      bool used = mentions_var(*t.kids[body_index], 0);
      binder = used ? fresh(t.name) : "_";
    }
    std::vector<SurfacePtr> kids;
    for (std::size_t i = 0; i < t.kids.size(); ++i) {
      std::size_t b = binders_over(t.kind, i);
      if (b) names.push_back(binder);
      kids.push_back(t.kids[i] ? go(*t.kids[i]) : nullptr);
      if (b) names.pop_back();
    }
    return make_surface(t.kind, t.span, std::move(kids), binder);
  }
};

}  // namespace

SurfacePtr unresolve(Term const& t, std::vector<std::string> const& names) {
  Unresolver u;
  collect_globals(t, u.taken_globals);
  u.names = names;
  return u.go(t);
}

std::string print_term(Term const& t, std::vector<std::string> const& names) { return print_surface(*unresolve(t, names)); }

}  // namespace joinlang
