#include <sstream>

#include "joinlang/surface.hpp"

namespace joinlang {

namespace {

// Precedence contexts: 0 full term, 1 left of '→', 2 operand of '×', 3 argument.
enum Prec { p_term = 0, p_arrow_lhs = 1, p_prod = 2, p_arg = 3 };

bool anonymous(std::string const& name) { return name == "_"; }

void print(std::ostream& os, SurfaceTerm const& t, int prec);

void print(std::ostream& os, SurfaceTerm const& t, int prec) {
  switch (t.kind) {
    case Kind::Var:
    case Kind::Global: os << t.name; return;
    case Kind::Univ: os << 'U' << t.level; return;
    case Kind::Hole: os << '_'; return;
    case Kind::Pi:
    case Kind::Sigma: {
      bool pi = t.kind == Kind::Pi;
      if (anonymous(t.name)) {
        int needed = pi ? p_term : p_arrow_lhs;
        if (prec > needed) {
          os << '(';
          print(os, t, p_term);
          os << ')';
          return;
        }
        if (pi) {
          print(os, *t.kids[0], p_arrow_lhs);
          os << " → ";
          print(os, *t.kids[1], p_term);
        } else {
          print(os, *t.kids[0], p_prod);
          os << " × ";
          print(os, *t.kids[1], p_arrow_lhs);
        }
        return;
      }
      if (prec > p_term) {
        os << '(';
        print(os, t, p_term);
        os << ')';
        return;
      }
      os << (pi ? "Π" : "Σ");
      SurfaceTerm const* cur = &t;
      while (cur->kind == t.kind && !anonymous(cur->name)) {
        os << '(' << cur->name << " : ";
        print(os, *cur->kids[0], p_term);
        os << ')';
        cur = cur->kids[1].get();
      }
      os << ". ";
      print(os, *cur, p_term);
      return;
    }
    case Kind::Lam: {
      if (prec > p_term) {
        os << '(';
        print(os, t, p_term);
        os << ')';
        return;
      }
      os << "λ";
      SurfaceTerm const* cur = &t;
      while (cur->kind == Kind::Lam) {
        if (cur->kids[0]) {
          os << " (" << cur->name << " : ";
          print(os, *cur->kids[0], p_term);
          os << ')';
        } else {
          os << ' ' << cur->name;
        }
        cur = cur->kids[1].get();
      }
      os << " → ";
      print(os, *cur, p_term);
      return;
    }
    case Kind::Let: {
      if (prec > p_term) {
        os << '(';
        print(os, t, p_term);
        os << ')';
        return;
      }
      os << "let " << t.name;
      if (t.kids[0]) {
        os << " : ";
        print(os, *t.kids[0], p_term);
      }
      os << " := ";
      print(os, *t.kids[1], p_term);
      os << " in ";
      print(os, *t.kids[2], p_term);
      return;
    }
    case Kind::Pair: {
      os << '(';
      SurfaceTerm const* cur = &t;
      print(os, *cur->kids[0], p_term);
      cur = cur->kids[1].get();
      while (cur->kind == Kind::Pair) {
        os << ", ";
        print(os, *cur->kids[0], p_term);
        cur = cur->kids[1].get();
      }
      os << ", ";
      print(os, *cur, p_term);
      os << ')';
      return;
    }
    case Kind::Ann:
      os << '(';
      print(os, *t.kids[0], p_term);
      os << " : ";
      print(os, *t.kids[1], p_term);
      os << ')';
      return;
    case Kind::App: {
      if (prec > p_prod) {
        os << '(';
        print(os, t, p_term);
        os << ')';
        return;
      }
      print(os, *t.kids[0], p_prod);
      os << ' ';
      print(os, *t.kids[1], p_arg);
      return;
    }
    default: break;
  }
  auto kf = keyword_form(t.kind);
  if (!kf) {
    os << "<?>";
    return;
  }
  if (kf->arity == 0) {
    os << kf->spelling;
    return;
  }
  if (prec > p_prod) {
    os << '(';
    print(os, t, p_term);
    os << ')';
    return;
  }
  os << kf->spelling;
  for (auto const& k : t.kids) {
    os << ' ';
    print(os, *k, p_arg);
  }
}

}  // namespace

std::string print_surface(SurfaceTerm const& t) {
  std::ostringstream os;
  print(os, t, p_term);
  return os.str();
}

std::string print_decl(SurfaceDecl const& d) {
  std::ostringstream os;
  if (d.tier) os << "{-# TIER " << *d.tier << " #-}\n";
  os << (d.kind == DeclKind::define ? "define " : "postulate ") << d.name;
  for (auto const& p : d.params) os << " (" << p.name << " : " << print_surface(*p.type) << ')';
  os << " : " << print_surface(*d.type);
  if (d.body) os << " :=\n  " << print_surface(*d.body);
  return os.str();
}

}  // namespace joinlang
