#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "joinlang/diagnostic.hpp"
#include "joinlang/lexer.hpp"
#include "joinlang/syntax.hpp"

namespace joinlang {

struct SurfaceTerm;
using SurfacePtr = std::shared_ptr<const SurfaceTerm>;

/// Named syntax tree as written. `name` is the variable spelling for Var, the
/// binder name for Pi/Lam/Sigma/Let; `level` is the universe index for Univ.
/// Children follow the layout documented on `binders_over`; absent optional
/// children (untyped λ, untyped let) are null.
struct SurfaceTerm {
  Kind kind;
  std::string name;
  int level = 0;
  std::vector<SurfacePtr> kids;
  Span span;
};

SurfacePtr make_surface(Kind kind, Span span, std::vector<SurfacePtr> kids = {}, std::string name = {},
                        int level = 0);

struct Param {
  std::string name;
  SurfacePtr type;
};

enum class DeclKind { define, postulate };

struct SurfaceDecl {
  DeclKind kind = DeclKind::define;
  std::string name;
  std::vector<Param> params;
  SurfacePtr type;
  SurfacePtr body;  // null for postulates
  std::optional<char> tier;
  Span span;
  Span name_span;
};

struct SurfaceImport {
  std::string name;
  Span span;
};

struct SurfaceModule {
  std::vector<SurfaceImport> imports;
  std::vector<SurfaceDecl> decls;
};

/// Parses a whole `.jt` file. Throws Error ("syntax-error", "duplicate-definition").
SurfaceModule parse_module(std::vector<Token> const& tokens);
SurfaceModule parse_module(std::string_view source);

/// Parses a single term; the whole input must be consumed.
SurfacePtr parse_term(std::vector<Token> const& tokens);
SurfacePtr parse_term(std::string_view source);

/// Renders a surface term with its binder names verbatim. Integer literals are
/// not reintroduced; `succ (succ zero)` prints as written.
std::string print_surface(SurfaceTerm const& t);
std::string print_decl(SurfaceDecl const& d);

}  // namespace joinlang
