#include "joinlang/lexer.hpp"

#include <cstdint>
#include <unordered_map>

namespace joinlang {

std::string_view tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Univ: return "universe";
    case Tok::String: return "string";
    case Tok::Tier: return "tier annotation";
    case Tok::Lambda: return "'λ'";
    case Tok::Pi: return "'Π'";
    case Tok::Sigma: return "'Σ'";
    case Tok::Arrow: return "'→'";
    case Tok::Times: return "'×'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Dot: return "'.'";
    case Tok::Assign: return "':='";
    case Tok::Underscore: return "'_'";
    case Tok::Define: return "'define'";
    case Tok::Postulate: return "'postulate'";
    case Tok::Import: return "'import'";
    case Tok::Let: return "'let'";
    case Tok::In: return "'in'";
    case Tok::End: return "end of input";
  }
  return "?";
}

namespace {

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;
  std::vector<Token> out;

  [[noreturn]] void error(std::size_t start, std::size_t end, std::string msg) {
    fail("lex-error", {start, end > start ? end : start + 1}, std::move(msg));
  }

  // Decodes one UTF-8 codepoint at `at`, returning it and its byte length.
  std::pair<char32_t, std::size_t> decode(std::size_t at) {
    auto byte = [&](std::size_t i) { return static_cast<std::uint8_t>(src[i]); };
    std::uint8_t b0 = byte(at);
    if (b0 < 0x80) return {b0, 1};
    std::size_t len = (b0 >> 5) == 0x6 ? 2 : (b0 >> 4) == 0xE ? 3 : (b0 >> 3) == 0x1E ? 4 : 0;
    if (len == 0 || at + len > src.size()) error(at, at + 1, "invalid UTF-8");
    char32_t cp = b0 & (0x7F >> len);
    for (std::size_t i = 1; i < len; ++i) {
      if ((byte(at + i) & 0xC0) != 0x80) error(at, at + i, "invalid UTF-8");
      cp = (cp << 6) | (byte(at + i) & 0x3F);
    }
    return {cp, len};
  }

  static bool is_reserved_symbol(char32_t cp) {
    return cp == U'λ' || cp == U'Π' || cp == U'Σ' || cp == U'→' || cp == U'×';
  }

  static bool ident_char(char32_t cp) {
    if (cp >= 0x80) return !is_reserved_symbol(cp);
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9') || cp == '_' ||
           cp == '\'';
  }

  void push(Tok k, std::size_t start, std::string text = {}, int level = 0) {
    out.push_back(Token{k, std::move(text), {start, pos}, level});
  }

  void block_comment(std::size_t start) {
    // positioned after "{-"
    bool pragma = pos < src.size() && src[pos] == '#';
    std::size_t body_start = pos;
    int depth = 1;
    while (depth > 0) {
      if (pos >= src.size()) error(start, start + 2, "unterminated block comment");
      if (src.compare(pos, 2, "{-") == 0) {
        depth++;
        pos += 2;
      } else if (src.compare(pos, 2, "-}") == 0) {
        depth--;
        pos += 2;
      } else {
        pos++;
      }
    }
    if (!pragma) return;
    // {-# TIER X #-}
    std::string_view body = src.substr(body_start, pos - 2 - body_start);
    if (body.size() < 2 || body.front() != '#' || body.back() != '#') error(start, pos, "malformed pragma");
    body = body.substr(1, body.size() - 2);
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
      return s;
    };
    body = trim(body);
    if (body.substr(0, 4) != "TIER") error(start, pos, "unknown pragma");
    std::string_view tier = trim(body.substr(4));
    if (tier != "A" && tier != "B" && tier != "C") error(start, pos, "tier must be A, B or C");
    push(Tok::Tier, start, std::string(tier));
  }

  void word(std::size_t start) {
    while (pos < src.size()) {
      auto [cp, len] = decode(pos);
      if (!ident_char(cp)) break;
      pos += len;
    }
    std::string w(src.substr(start, pos - start));
    static const std::unordered_map<std::string, Tok> reserved = {
        {"fun", Tok::Lambda},        {"forall", Tok::Pi},         {"Pi", Tok::Pi},
        {"exists", Tok::Sigma},      {"Sigma", Tok::Sigma},       {"define", Tok::Define},
        {"postulate", Tok::Postulate}, {"import", Tok::Import},   {"let", Tok::Let},
        {"in", Tok::In},             {"_", Tok::Underscore},
    };
    if (auto it = reserved.find(w); it != reserved.end()) return push(it->second, start);
    if (w == "U0" || w == "U1" || w == "U2") return push(Tok::Univ, start, w, w[1] - '0');
    if (w[0] >= '0' && w[0] <= '9') {
      for (char c : w)
        if (c < '0' || c > '9') error(start, pos, "malformed integer literal '" + w + "'");
      return push(Tok::Int, start, w);
    }
    push(Tok::Ident, start, w);
  }

  void run() {
    while (pos < src.size()) {
      std::size_t start = pos;
      char c = src[pos];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        pos++;
        continue;
      }
      if (src.compare(pos, 2, "--") == 0) {
        while (pos < src.size() && src[pos] != '\n') pos++;
        continue;
      }
      if (src.compare(pos, 2, "{-") == 0) {
        pos += 2;
        block_comment(start);
        continue;
      }
      if (src.compare(pos, 2, "->") == 0) { pos += 2; push(Tok::Arrow, start); continue; }
      if (src.compare(pos, 2, ":=") == 0) { pos += 2; push(Tok::Assign, start); continue; }
      if (src.compare(pos, 2, "**") == 0) { pos += 2; push(Tok::Times, start); continue; }
      switch (c) {
        case '(': pos++; push(Tok::LParen, start); continue;
        case ')': pos++; push(Tok::RParen, start); continue;
        case ',': pos++; push(Tok::Comma, start); continue;
        case ':': pos++; push(Tok::Colon, start); continue;
        case '.': pos++; push(Tok::Dot, start); continue;
        case '\\': pos++; push(Tok::Lambda, start); continue;
        case '"': {
          pos++;
          std::string text;
          while (pos < src.size() && src[pos] != '"' && src[pos] != '\n') text += src[pos++];
          if (pos >= src.size() || src[pos] != '"') error(start, pos, "unterminated string literal");
          pos++;
          push(Tok::String, start, text);
          continue;
        }
        default: break;
      }
      auto [cp, len] = decode(pos);
      if (cp == U'λ') { pos += len; push(Tok::Lambda, start); continue; }
      if (cp == U'Π') { pos += len; push(Tok::Pi, start); continue; }
      if (cp == U'Σ') { pos += len; push(Tok::Sigma, start); continue; }
      if (cp == U'→') { pos += len; push(Tok::Arrow, start); continue; }
      if (cp == U'×') { pos += len; push(Tok::Times, start); continue; }
      if (ident_char(cp)) {
        word(start);
        continue;
      }
      error(start, start + len, "illegal character '" + std::string(src.substr(start, len)) + "'");
    }
  }
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) {
  Lexer lx{source, 0, {}};
  lx.run();
  return std::move(lx.out);
}

}  // namespace joinlang
