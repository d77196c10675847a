#include "joinlang/session.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace joinlang {

std::string read_file(fs::path const& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(Diagnostic{Severity::error, p.generic_string(), {}, "io-error", "cannot read file", {}, {}});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_input_error(std::string const& rule) {
  return rule == "lex-error" || rule == "syntax-error" || rule == "io-error" || rule == "import-not-found";
}

Session::Session(std::vector<fs::path> search_roots) : roots_(std::move(search_roots)) {}

std::string Session::key(fs::path const& p) const {
  std::error_code ec;
  fs::path c = fs::weakly_canonical(p, ec);
  return (ec ? p.lexically_normal() : c).generic_string();
}

fs::path Session::find_import(std::string const& name, fs::path const& from) const {
  std::string file = name.size() > 3 && name.substr(name.size() - 3) == ".jt" ? name : name + ".jt";
  std::vector<fs::path> dirs{from.parent_path()};
  dirs.insert(dirs.end(), roots_.begin(), roots_.end());
  for (auto const& d : dirs) {
    fs::path candidate = d / file;
    if (fs::exists(candidate)) return candidate;
  }
  return {};
}

void Session::record(Diagnostic d, std::string const& file) {
  if (d.file.empty()) d.file = file;
  diagnostics_.push_back(std::move(d));
}

bool Session::load_file(fs::path const& path) {
  std::string k = key(path);
  std::string display = path.lexically_normal().generic_string();
  if (auto it = files_.find(k); it != files_.end()) {
    if (it->second.state == State::loading) {
      record(Diagnostic{Severity::error, display, {}, "import-cycle", "import cycle through this file", {}, {}},
             display);
      return false;
    }
    return it->second.state == State::done;
  }
  files_[k] = FileInfo{};
  auto finish = [&](State s) {
    files_[k].state = s;
    order_.push_back(k);
    return s == State::done;
  };

  SurfaceModule module;
  try {
    module = parse_module(read_file(path));
  } catch (Error& e) {
    record(e.diagnostic(), display);
    return finish(State::failed);
  }
  for (auto const& imp : module.imports) {
    files_[k].imports.push_back(imp.name);
    fs::path target = find_import(imp.name, path);
    if (target.empty()) {
      record(Diagnostic{Severity::error, display, imp.span, "import-not-found", "cannot find module '" + imp.name + "'",
                        {}, {}},
             display);
      return finish(State::failed);
    }
    if (!load_file(target)) {
      // a cycle was already reported against the importer's chain
      if (diagnostics_.empty() || diagnostics_.back().rule != "import-cycle")
        record(Diagnostic{Severity::error, display, imp.span, "import-failed", "imported module '" + imp.name +
                          "' has errors", {}, {}},
               display);
      return finish(State::failed);
    }
  }

  auto names = table_.names();
  auto scope = [this](std::string const& n) { return table_.contains(n); };
  for (auto const& sd : module.decls) {
    try {
      CoreDecl cd = resolve(scope, sd, names);
      check_decl(table_, cd, display);
      files_[k].decls.push_back(sd.name);
      names.push_back(sd.name);
    } catch (Error& e) {
      record(e.diagnostic(), display);
      return finish(State::failed);
    }
  }
  return finish(State::done);
}

bool Session::load_directory(fs::path const& dir) {
  std::vector<fs::path> files;
  std::error_code ec;
  for (auto const& entry : fs::directory_iterator(dir, ec))
    if (entry.is_regular_file() && entry.path().extension() == ".jt") files.push_back(entry.path());
  if (ec) {
    record(Diagnostic{Severity::error, dir.generic_string(), {}, "io-error", "cannot read directory", {}, {}},
           dir.generic_string());
    return false;
  }
  std::sort(files.begin(), files.end());
  bool ok = true;
  for (auto const& f : files) ok = load_file(f) && ok;
  return ok;
}

bool Session::load(fs::path const& path) {
  if (fs::is_directory(path)) return load_directory(path);
  if (!fs::exists(path)) {
    record(Diagnostic{Severity::error, path.generic_string(), {}, "io-error", "no such file or directory", {}, {}},
           path.generic_string());
    return false;
  }
  return load_file(path);
}

int Session::exit_code() const {
  int code = 0;
  for (auto const& d : diagnostics_) {
    if (d.severity != Severity::error) continue;
    if (is_input_error(d.rule)) return 2;
    code = 1;
  }
  return code;
}

std::vector<std::string> const& Session::declarations_of(fs::path const& path) const {
  static const std::vector<std::string> none;
  auto it = files_.find(key(path));
  return it == files_.end() ? none : it->second.decls;
}

std::vector<std::string> const& Session::imports_of(fs::path const& path) const {
  static const std::vector<std::string> none;
  auto it = files_.find(key(path));
  return it == files_.end() ? none : it->second.imports;
}

std::string Session::normalize(std::string const& text) const {
  SurfacePtr s = parse_term(text);
  TermPtr t = resolve_term(*s, {}, [this](std::string const& n) { return table_.contains(n); }, table_.names());
  Checker checker(table_);
  Context empty(table_);
  Inferred r = checker.infer(empty, t);
  Nbe const& nbe = table_.nbe();
  TermPtr nf = nbe.quote(0, checker.eval(empty, t));
  TermPtr ty = nbe.quote(0, r.type);
  return print_term(*nf) + " : " + print_term(*ty);
}

std::string Session::dump() const {
  std::ostringstream os;
  for (auto const& d : table_.all()) {
    os << d->name << '\t' << (d->kind == DeclKind::define ? "define" : "postulate") << '\t'
       << (d->tier ? std::string(1, *d->tier) : std::string("-")) << '\t'
       << fs::path(d->file).filename().generic_string() << '\t' << print_term(*d->type) << '\t'
       << (d->body ? print_term(*d->body) : std::string("-")) << '\t';
    bool first = true;
    for (auto const& a : d->assumptions) {
      os << (first ? "" : ",") << a;
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace joinlang
