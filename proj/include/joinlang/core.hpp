#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "joinlang/surface.hpp"

namespace joinlang {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

/// Core syntax. Variables are de Bruijn indices (`index`), globals are names.
/// Binder nodes keep their surface name in `name` purely as a printing hint.
struct Term {
  Kind kind;
  std::size_t index = 0;  // Var: de Bruijn index; Univ: level
  std::string name;       // Global: declaration name; binders: name hint
  std::vector<TermPtr> kids;
  Span span;
};

TermPtr make_term(Kind kind, std::vector<TermPtr> kids = {}, std::string name = {}, std::size_t index = 0,
                  Span span = {});
inline TermPtr var(std::size_t i) { return make_term(Kind::Var, {}, {}, i); }
inline TermPtr global(std::string n) { return make_term(Kind::Global, {}, std::move(n)); }
inline TermPtr univ(std::size_t l) { return make_term(Kind::Univ, {}, {}, l); }
inline TermPtr app(TermPtr f, TermPtr a) { return make_term(Kind::App, {std::move(f), std::move(a)}); }
inline TermPtr lam(std::string n, TermPtr body) { return make_term(Kind::Lam, {nullptr, std::move(body)}, std::move(n)); }
inline TermPtr pi(std::string n, TermPtr dom, TermPtr cod) {
  return make_term(Kind::Pi, {std::move(dom), std::move(cod)}, std::move(n));
}
inline TermPtr sigma(std::string n, TermPtr a, TermPtr b) {
  return make_term(Kind::Sigma, {std::move(a), std::move(b)}, std::move(n));
}
inline TermPtr leaf(Kind k) { return make_term(k); }

/// Structural equality ignoring spans and binder-name hints; on core terms this
/// is alpha-equivalence.
bool alpha_equal(Term const& a, Term const& b);

/// True if every variable of `t` is below `depth`.
bool well_scoped(Term const& t, std::size_t depth);
bool mentions_var(Term const& t, std::size_t index);

/// Adds `amount` to every index >= `cutoff`. Throws std::logic_error if an
/// index would become negative.
TermPtr shift_free(TermPtr const& t, std::size_t cutoff, long amount);

/// Global names referenced anywhere in `t`.
void collect_globals(Term const& t, std::set<std::string>& out);

/// Scope resolution -------------------------------------------------------

/// Answers whether a name denotes a declaration visible to the term being resolved.
using GlobalScope = std::function<bool(std::string const&)>;

/// Converts a surface term under the named local scope `locals` (innermost last).
TermPtr resolve_term(SurfaceTerm const& t, std::vector<std::string> const& locals, GlobalScope const& globals,
                     std::vector<std::string> const& candidates = {});

struct CoreDecl {
  DeclKind kind;
  std::string name;
  TermPtr type;  // closed: parameters become leading Π
  TermPtr body;  // closed: parameters become leading λ; null for postulates
  std::optional<char> tier;
  Span span;
  Span name_span;
};

/// Resolves a declaration whose free names must be in `globals`. Throws Error
/// ("unbound-identifier", with a nearest-name suggestion drawn from `candidates`).
CoreDecl resolve(GlobalScope const& globals, SurfaceDecl const& d, std::vector<std::string> const& candidates = {});

/// Printing ---------------------------------------------------------------

/// Rebuilds named syntax from a core term in a context whose variable names are
/// `names` (innermost last). Binders reuse their hints where that cannot
/// capture; otherwise fresh names `x`, `x₁`, ... are chosen. Unused Π/Σ binders
/// print as `→`/`×`, unused λ binders as `_`.
SurfacePtr unresolve(Term const& t, std::vector<std::string> const& names = {});
std::string print_term(Term const& t, std::vector<std::string> const& names = {});

}  // namespace joinlang
