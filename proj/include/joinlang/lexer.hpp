#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "joinlang/diagnostic.hpp"

namespace joinlang {

enum class Tok {
  Ident,
  Int,
  Univ,  // U0 U1 U2; `level` holds the index
  String,
  Tier,  // {-# TIER A #-}; `text` holds the tier letter
  Lambda,
  Pi,
  Sigma,
  Arrow,
  Times,
  LParen,
  RParen,
  Comma,
  Colon,
  Dot,
  Assign,
  Underscore,
  Define,
  Postulate,
  Import,
  Let,
  In,
  End,
};

struct Token {
  Tok kind;
  std::string text;  // identifier spelling, literal digits, string contents or tier letter
  Span span;
  int level = 0;

  bool operator==(Token const& o) const { return kind == o.kind && text == o.text && level == o.level; }
};

std::string_view tok_name(Tok t);

/// Splits `source` into tokens. Comments are dropped; the End token is not included.
/// Throws Error with rule "lex-error" on malformed input.
std::vector<Token> tokenize(std::string_view source);

}  // namespace joinlang
