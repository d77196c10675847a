#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace joinlang {

/// Node kinds shared by surface and core syntax.
enum class Kind {
  Var,
  Global,  // core only: reference into the declaration table
  Univ,
  Pi,
  Lam,
  Sigma,
  Pair,
  Fst,
  Snd,
  App,
  Id,
  Refl,
  J,
  Nat,
  Zero,
  Succ,
  NatInd,
  Bool,
  True,
  False,
  BoolInd,
  Empty,
  Abort,
  Unit,
  Star,
  UnitInd,
  GQuot,
  Gpt,
  Gedg,
  Gind,
  Let,
  Ann,
  Hole,
};

/// Number of binders that scope over child `i` of a node of kind `k`.
///   Pi:    [domain, codomain*]     Lam: [domain-or-null, body*]
///   Sigma: [first, second*]        Let: [type-or-null, value, body*]
inline std::size_t binders_over(Kind k, std::size_t i) {
  switch (k) {
    case Kind::Pi:
    case Kind::Lam:
    case Kind::Sigma: return i == 1 ? 1 : 0;
    case Kind::Let: return i == 2 ? 1 : 0;
    default: return 0;
  }
}

inline bool is_binder(Kind k) { return k == Kind::Pi || k == Kind::Lam || k == Kind::Sigma || k == Kind::Let; }

/// Keyword-headed forms: the keyword is followed by exactly `arity` atomic arguments.
struct KeywordForm {
  Kind kind;
  std::string_view spelling;
  std::size_t arity;
};

inline constexpr KeywordForm keyword_forms[] = {
    {Kind::Nat, "Nat", 0},         {Kind::Zero, "zero", 0},        {Kind::Succ, "succ", 1},
    {Kind::NatInd, "natind", 4},   {Kind::Bool, "Bool", 0},        {Kind::True, "true", 0},
    {Kind::False, "false", 0},     {Kind::BoolInd, "boolind", 4},  {Kind::Empty, "Empty", 0},
    {Kind::Abort, "abort", 2},     {Kind::Unit, "Unit", 0},        {Kind::Star, "star", 0},
    {Kind::UnitInd, "unitind", 3}, {Kind::Id, "Id", 3},            {Kind::Refl, "refl", 0},
    {Kind::J, "J", 6},             {Kind::Fst, "fst", 1},          {Kind::Snd, "snd", 1},
    {Kind::GQuot, "GQuot", 2},     {Kind::Gpt, "gpt", 3},          {Kind::Gedg, "gedg", 5},
    {Kind::Gind, "gind", 6},
};

inline std::optional<KeywordForm> keyword_form(std::string_view word) {
  for (auto const& f : keyword_forms)
    if (f.spelling == word) return f;
  return std::nullopt;
}

inline std::optional<KeywordForm> keyword_form(Kind k) {
  for (auto const& f : keyword_forms)
    if (f.kind == k) return f;
  return std::nullopt;
}

inline constexpr int max_level = 2;

}  // namespace joinlang
