#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "joinlang/core.hpp"

namespace joinlang {

struct Value;
using Val = std::shared_ptr<const Value>;

/// Persistent environment: one value per enclosing binder, innermost first.
class Env {
 public:
  Env() = default;
  Env extend(Val v) const { return Env(std::make_shared<Node>(Node{std::move(v), node_})); }
  Val const& lookup(std::size_t index) const;
  std::size_t size() const { return node_ ? node_->size : 0; }

 private:
  struct Node {
    Val value;
    std::shared_ptr<const Node> next;
    std::size_t size = next ? next->size + 1 : 1;
  };
  explicit Env(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Closure {
  Env env;
  TermPtr body;
};

/// One elimination frame of a neutral spine. `args` holds the eliminator's
/// parameters in source order, minus the scrutinee:
///   App(arg) Fst() Snd() NatInd(P,z,s) BoolInd(P,t,f) Abort(P) UnitInd(P,s)
///   J(A,a,C,d,b) Gind(V,E,P,p,e)
struct Elim {
  Kind kind;
  std::vector<Val> args;
};

/// Neutral heads: a local variable (de Bruijn level), a global, or a path
/// constructor that no eliminator can consume (a `gedg` under J).
/// A defined global keeps its definition in `def` and unfolds on demand; its
/// spine then holds applications only.
struct Head {
  enum class Tag { local, global, stuck } tag;
  std::size_t level = 0;
  std::string name;
  Val stuck;
  Val def;
};

/// Semantic values. Canonical forms store their components in `args`:
///   Univ(level)  Pi(dom; cod)  Lam(; body)  Sigma(fst; snd)  Pair(a,b)
///   Id(A,x,y)  Refl  Nat Zero Succ(n)  Bool True False  Empty  Unit Star
///   GQuot(V,E)  Gpt(V,E,v)  Gedg(V,E,i,j,r)  Neutral(head; spine)
struct Value {
  Kind kind;  // Kind::Var marks a neutral
  std::size_t level = 0;
  std::string name;  // binder hint
  std::vector<Val> args;
  Closure closure;  // Pi codomain, Lam body, Sigma second component
  Head head;
  std::vector<Elim> spine;
  mutable Val unfolded;

  bool glued() const { return kind == Kind::Var && head.def != nullptr; }
};

/// Looks up a global: returns its unfolded value for definitions and null for
/// postulates (which evaluate to neutral heads).
using GlobalLookup = std::function<Val(std::string const&)>;

class Nbe {
 public:
  explicit Nbe(GlobalLookup globals) : globals_(std::move(globals)) {}

  Val eval(Env const& env, TermPtr const& t) const;
  Val apply_closure(Closure const& c, Val arg) const;

  Val apply(Val f, Val a) const;
  Val fst(Val p) const;
  Val snd(Val p) const;
  Val natind(Val P, Val z, Val s, Val n) const;
  Val boolind(Val P, Val t, Val f, Val b) const;
  Val unitind(Val P, Val s, Val u) const;
  Val abort(Val P, Val e) const;
  Val J(Val A, Val a, Val C, Val d, Val b, Val p) const;
  Val gind(Val V, Val E, Val P, Val p, Val e, Val x) const;

  /// Reads a value back into a β-normal core term at context depth `depth`.
  TermPtr quote(std::size_t depth, Val const& v) const;

  /// Definitional equality with η for Π and Σ. Universes compare by equality.
  bool conv(std::size_t depth, Val const& a, Val const& b) const;

  /// Like conv, but universes are cumulative in covariant positions
  /// (`U_i ≤ U_j` for i ≤ j, Π codomains and Σ components).
  bool subtype(std::size_t depth, Val const& actual, Val const& expected) const;

  /// Unfolds defined globals at the head until the value is not glued.
  Val force(Val v) const;

  TermPtr normalize(Env const& env, TermPtr const& t) const { return quote(env.size(), eval(env, t)); }

 private:
  GlobalLookup globals_;

  Val apply_elim(Val v, Elim const& e) const;
  bool conv_spine(std::size_t depth, std::vector<Elim> const& a, std::vector<Elim> const& b) const;
  bool conv_head(std::size_t depth, Head const& a, Head const& b) const;
  TermPtr quote_neutral(std::size_t depth, Value const& v) const;
};

/// Value constructors.
Val vuniv(std::size_t level);
Val vleaf(Kind k);
Val vlocal(std::size_t level);
Val vglobal(std::string name);
Val vcanon(Kind k, std::vector<Val> args);
Val vbinder(Kind k, std::string name, std::vector<Val> args, Closure c);

}  // namespace joinlang
