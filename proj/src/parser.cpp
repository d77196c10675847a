#include <algorithm>
#include <set>
#include <sstream>

#include "joinlang/surface.hpp"

namespace joinlang {

SurfacePtr make_surface(Kind kind, Span span, std::vector<SurfacePtr> kids, std::string name, int level) {
  return std::make_shared<SurfaceTerm>(SurfaceTerm{kind, std::move(name), level, std::move(kids), span});
}

namespace {

class Parser {
 public:
  explicit Parser(std::vector<Token> const& toks) : toks_(toks) {
    std::size_t end = toks.empty() ? 0 : toks.back().span.end;
    end_ = Token{Tok::End, {}, {end, end}, 0};
  }

  SurfaceModule module() {
    SurfaceModule m;
    std::set<std::string> seen;
    std::optional<char> tier;
    while (!at(Tok::End)) {
      if (at(Tok::Tier)) {
        tier = next().text[0];
        continue;
      }
      if (at(Tok::Import)) {
        Span s = next().span;
        Token const& name = expect(Tok::String);
        m.imports.push_back({name.text, Span::join(s, name.span)});
        continue;
      }
      SurfaceDecl d = decl();
      if (!d.tier) d.tier = tier;
      if (!seen.insert(d.name).second)
        fail("duplicate-definition", d.name_span, "'" + d.name + "' is already defined in this file");
      m.decls.push_back(std::move(d));
    }
    return m;
  }

  SurfacePtr whole_term() {
    SurfacePtr t = term();
    if (!at(Tok::End)) unexpected({Tok::End});
    return t;
  }

 private:
  std::vector<Token> const& toks_;
  std::size_t pos_ = 0;
  Token end_;

  Token const& peek(std::size_t ahead = 0) const {
    return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : end_;
  }
  bool at(Tok k) const { return peek().kind == k; }
  Token const& next() {
    Token const& t = peek();
    if (pos_ < toks_.size()) pos_++;
    return t;
  }
  Span last_span() const { return pos_ == 0 ? Span{} : toks_[pos_ - 1].span; }

  [[noreturn]] void unexpected(std::vector<Tok> const& expected, std::string extra = {}) {
    Token const& t = peek();
    std::ostringstream os;
    os << "expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) os << (i ? ", " : "") << tok_name(expected[i]);
    os << "; found " << tok_name(t.kind);
    if (!t.text.empty() && t.kind != Tok::Tier) os << " '" << t.text << "'";
    if (!extra.empty()) os << " (" << extra << ")";
    Span s = t.span;
    if (s.empty()) s.end = s.start + 1;
    fail("syntax-error", s, os.str());
  }

  Token const& expect(Tok k) {
    if (!at(k)) unexpected({k});
    return next();
  }

  std::string binder_name() {
    if (at(Tok::Underscore)) {
      next();
      return "_";
    }
    Token const& t = peek();
    if (t.kind == Tok::Ident && keyword_form(t.text)) unexpected({Tok::Ident}, "'" + t.text + "' is a keyword");
    return expect(Tok::Ident).text;
  }

  bool at_binder_name() const { return at(Tok::Underscore) || (at(Tok::Ident) && !keyword_form(peek().text)); }

  // ( names : type )
  std::vector<std::pair<Param, Span>> group() {
    Span open = expect(Tok::LParen).span;
    std::vector<std::string> names;
    do names.push_back(binder_name());
    while (at_binder_name());
    expect(Tok::Colon);
    SurfacePtr ty = term();
    expect(Tok::RParen);
    std::vector<std::pair<Param, Span>> out;
    for (auto& n : names) out.push_back({Param{n, ty}, open});
    return out;
  }

  SurfaceDecl decl() {
    SurfaceDecl d;
    std::size_t start = peek().span.start;
    if (at(Tok::Tier)) d.tier = next().text[0];
    if (at(Tok::Define)) {
      d.kind = DeclKind::define;
    } else if (at(Tok::Postulate)) {
      d.kind = DeclKind::postulate;
    } else {
      unexpected({Tok::Define, Tok::Postulate, Tok::Import});
    }
    next();
    Token const& name = expect(Tok::Ident);
    if (keyword_form(name.text)) fail("syntax-error", name.span, "'" + name.text + "' is a keyword");
    d.name = name.text;
    d.name_span = name.span;
    while (at(Tok::LParen))
      for (auto& [p, s] : group()) d.params.push_back(p);
    expect(Tok::Colon);
    d.type = term();
    if (d.kind == DeclKind::define) {
      expect(Tok::Assign);
      d.body = term();
    } else if (at(Tok::Assign)) {
      fail("syntax-error", peek().span, "a postulate has no body");
    }
    d.span = {start, last_span().end};
    return d;
  }

  SurfacePtr term() {
    Token const& t = peek();
    std::size_t start = t.span.start;
    switch (t.kind) {
      case Tok::Lambda: {
        next();
        // each binder: name or (names : type)
        struct B {
          std::string name;
          SurfacePtr type;
          std::size_t start;
        };
        std::vector<B> bs;
        do {
          if (at(Tok::LParen)) {
            for (auto& [p, s] : group()) bs.push_back({p.name, p.type, s.start});
          } else {
            std::size_t s = peek().span.start;
            bs.push_back({binder_name(), nullptr, s});
          }
        } while (at(Tok::LParen) || at_binder_name());
        expect(Tok::Arrow);
        SurfacePtr body = term();
        std::size_t end = body->span.end;
        for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
          std::size_t s = it + 1 == bs.rend() ? start : it->start;
          body = make_surface(Kind::Lam, {s, end}, {it->type, body}, it->name);
        }
        return body;
      }
      case Tok::Pi:
      case Tok::Sigma: {
        Kind k = t.kind == Tok::Pi ? Kind::Pi : Kind::Sigma;
        next();
        std::vector<std::pair<Param, Span>> tele;
        do {
          auto g = group();
          tele.insert(tele.end(), g.begin(), g.end());
        } while (at(Tok::LParen));
        expect(Tok::Dot);
        SurfacePtr body = term();
        std::size_t end = body->span.end;
        for (std::size_t i = tele.size(); i-- > 0;) {
          std::size_t s = i == 0 ? start : tele[i].second.start;
          body = make_surface(k, {s, end}, {tele[i].first.type, body}, tele[i].first.name);
        }
        return body;
      }
      case Tok::Let: {
        next();
        std::string name = binder_name();
        SurfacePtr ty;
        if (at(Tok::Colon)) {
          next();
          ty = term();
        }
        expect(Tok::Assign);
        SurfacePtr val = term();
        expect(Tok::In);
        SurfacePtr body = term();
        return make_surface(Kind::Let, {start, body->span.end}, {ty, val, body}, name);
      }
      default: return arrow();
    }
  }

  SurfacePtr arrow() {
    SurfacePtr lhs = product();
    if (!at(Tok::Arrow)) return lhs;
    next();
    SurfacePtr rhs = term();
    return make_surface(Kind::Pi, Span::join(lhs->span, rhs->span), {lhs, rhs}, "_");
  }

  SurfacePtr product() {
    SurfacePtr lhs = application();
    if (!at(Tok::Times)) return lhs;
    next();
    SurfacePtr rhs = product();
    return make_surface(Kind::Sigma, Span::join(lhs->span, rhs->span), {lhs, rhs}, "_");
  }

  bool at_atom() const {
    switch (peek().kind) {
      case Tok::Ident: return true;
      case Tok::Univ:
      case Tok::Int:
      case Tok::Underscore:
      case Tok::LParen: return true;
      default: return false;
    }
  }

  SurfacePtr application() {
    SurfacePtr head;
    Token const& t = peek();
    if (t.kind == Tok::Ident) {
      if (auto kf = keyword_form(t.text); kf && kf->arity > 0) {
        Span s = next().span;
        std::vector<SurfacePtr> args;
        for (std::size_t i = 0; i < kf->arity; ++i) {
          if (!at_atom())
            unexpected({Tok::Ident, Tok::LParen},
                       "'" + std::string(kf->spelling) + "' takes " + std::to_string(kf->arity) + " arguments");
          args.push_back(atom());
        }
        Span whole = Span::join(s, args.back()->span);
        head = make_surface(kf->kind, whole, std::move(args));
      }
    }
    if (!head) head = atom();
    while (at_atom()) {
      SurfacePtr arg = atom();
      head = make_surface(Kind::App, Span::join(head->span, arg->span), {head, arg});
    }
    return head;
  }

  SurfacePtr atom() {
    Token const& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        if (auto kf = keyword_form(t.text)) {
          if (kf->arity > 0)
            unexpected({Tok::Ident, Tok::LParen}, "'" + t.text + "' must be parenthesised in argument position");
          next();
          return make_surface(kf->kind, t.span);
        }
        next();
        return make_surface(Kind::Var, t.span, {}, t.text);
      }
      case Tok::Univ: next(); return make_surface(Kind::Univ, t.span, {}, {}, t.level);
      case Tok::Underscore: next(); return make_surface(Kind::Hole, t.span);
      case Tok::Int: {
        next();
        unsigned long n = 0;
        try {
          n = std::stoul(t.text);
        } catch (...) {
          fail("syntax-error", t.span, "integer literal too large");
        }
        if (n > 100000) fail("syntax-error", t.span, "integer literal too large");
        SurfacePtr r = make_surface(Kind::Zero, t.span);
        for (unsigned long i = 0; i < n; ++i) r = make_surface(Kind::Succ, t.span, {r});
        return r;
      }
      case Tok::LParen: {
        Span open = next().span;
        SurfacePtr first = term();
        if (at(Tok::Colon)) {
          next();
          SurfacePtr ty = term();
          Span close = expect(Tok::RParen).span;
          return make_surface(Kind::Ann, Span::join(open, close), {first, ty});
        }
        if (at(Tok::Comma)) {
          std::vector<SurfacePtr> items{first};
          while (at(Tok::Comma)) {
            next();
            items.push_back(term());
          }
          Span close = expect(Tok::RParen).span;
          SurfacePtr r = items.back();
          for (std::size_t i = items.size() - 1; i-- > 0;) {
            Span s = i == 0 ? Span::join(open, close) : Span::join(items[i]->span, r->span);
            r = make_surface(Kind::Pair, s, {items[i], r});
          }
          return r;
        }
        expect(Tok::RParen);
        return first;
      }
      default: unexpected({Tok::Ident, Tok::Univ, Tok::Int, Tok::LParen, Tok::Underscore});
    }
  }
};

}  // namespace

SurfaceModule parse_module(std::vector<Token> const& tokens) { return Parser(tokens).module(); }
SurfaceModule parse_module(std::string_view source) { return parse_module(tokenize(source)); }
SurfacePtr parse_term(std::vector<Token> const& tokens) { return Parser(tokens).whole_term(); }
SurfacePtr parse_term(std::string_view source) { return parse_term(tokenize(source)); }

}  // namespace joinlang
