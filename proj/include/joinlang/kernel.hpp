#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "joinlang/core.hpp"
#include "joinlang/nbe.hpp"

namespace joinlang {

/// A checked global. `assumptions` is the set of postulates reachable through
/// global references from the type and body (a postulate lists itself).
struct Declaration {
  std::string name;
  DeclKind kind = DeclKind::define;
  TermPtr type;
  TermPtr body;
  std::optional<char> tier;
  std::set<std::string> assumptions;
  bool primitive = false;  // kernel-supplied (the graph-quotient edge rule)
  std::string file;
  Span span;
  Val type_value;
  Val body_value;
};

using DeclPtr = std::shared_ptr<const Declaration>;

/// Append-only table of checked declarations.
class GlobalTable {
 public:
  /// Creates a table preloaded with the kernel primitives.
  GlobalTable();
  GlobalTable(GlobalTable const&) = delete;
  GlobalTable& operator=(GlobalTable const&) = delete;

  DeclPtr find(std::string const& name) const;
  bool contains(std::string const& name) const { return index_.count(name) != 0; }
  void append(DeclPtr d);
  std::vector<DeclPtr> const& all() const { return decls_; }
  std::vector<std::string> names() const;

  Nbe const& nbe() const { return nbe_; }

 private:
  std::vector<DeclPtr> decls_;
  std::unordered_map<std::string, std::size_t> index_;
  Nbe nbe_;
};

/// Names of the kernel-supplied primitive declarations.
std::vector<std::string> const& primitive_names();

/// Typing context: a telescope of local assumptions over a global table.
class Context {
 public:
  explicit Context(GlobalTable const& globals) : globals_(&globals) {}

  std::size_t depth() const { return types_.size(); }
  Env const& env() const { return env_; }
  Val const& type_of(std::size_t index) const { return types_[types_.size() - 1 - index]; }
  std::vector<std::string> const& names() const { return names_; }
  GlobalTable const& globals() const { return *globals_; }

  /// Adds a variable of type `type` (a fresh neutral in the environment).
  Context extend(std::string const& name, Val type) const;
  /// Adds a let-bound variable whose environment entry is `value`.
  Context define(std::string const& name, Val type, Val value) const;

 private:
  std::string unique_name(std::string const& hint) const;

  GlobalTable const* globals_;
  std::vector<std::string> names_;
  std::vector<Val> types_;
  Env env_;
};

struct Inferred {
  TermPtr term;
  Val type;
};

/// Bidirectional checker. Every rejection throws Error carrying one Diagnostic.
class Checker {
 public:
  explicit Checker(GlobalTable const& globals) : globals_(globals), nbe_(globals.nbe()) {}

  Inferred infer(Context const& ctx, TermPtr const& t) const;
  TermPtr check(Context const& ctx, TermPtr const& t, Val const& expected) const;
  /// Checks that `t` is a type and returns its universe level.
  std::size_t infer_level(Context const& ctx, TermPtr const& t) const;

  Val eval(Context const& ctx, TermPtr const& t) const { return nbe_.eval(ctx.env(), t); }
  std::string show(Context const& ctx, Val const& v) const;

 private:
  TermPtr check_rule(Context const& ctx, TermPtr const& t, Val const& expected, char const* rule) const;
  void check_graph(Context const& ctx, TermPtr const& V, TermPtr const& E, Span span) const;

  GlobalTable const& globals_;
  Nbe const& nbe_;
};

/// Checks a resolved declaration in the empty context and appends it to `table`.
DeclPtr check_decl(GlobalTable& table, CoreDecl const& d, std::string const& file = {});

/// Sorted transitive postulate set of a checked declaration. Throws Error
/// ("unknown-name") if absent.
std::vector<std::string> assumptions_of(GlobalTable const& table, std::string const& name);

}  // namespace joinlang
