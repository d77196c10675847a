#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "joinlang/manifest.hpp"
#include "joinlang/session.hpp"

#ifndef JOINLANG_DEFAULT_STDLIB
#define JOINLANG_DEFAULT_STDLIB "stdlib"
#endif

namespace fs = std::filesystem;
using namespace joinlang;

namespace {

struct Options {
  std::vector<std::string> roots;
  std::string format = "tsv";
  bool dump = false;
  bool audit = false;
  std::vector<std::string> paths;
  std::string name;
  std::string file;
  std::string term;
};

fs::path stdlib_dir() {
  if (char const* env = std::getenv("JOINLANG_STDLIB"); env && *env) return env;
  return JOINLANG_DEFAULT_STDLIB;
}

Session make_session(Options const& o) {
  std::vector<fs::path> roots(o.roots.begin(), o.roots.end());
  roots.push_back(stdlib_dir());
  return Session(roots);
}

void emit(Diagnostic const& d, Options const& o) {
  std::cerr << (o.format == "human" ? format_human(d) : format_tsv(d)) << '\n';
}

int report(Session const& s, Options const& o) {
  for (auto const& d : s.diagnostics()) emit(d, o);
  return s.exit_code();
}

int cmd_check(Options const& o) {
  Session s = make_session(o);
  for (auto const& p : o.paths) s.load(p);
  if (o.dump) std::cout << s.dump();
  return report(s, o);
}

int cmd_normalize(Options const& o) {
  Session s = make_session(o);
  s.load(o.file);
  if (int code = report(s, o)) return code;
  try {
    std::cout << s.normalize(o.term) << '\n';
  } catch (Error const& e) {
    Diagnostic d = e.diagnostic();
    d.file = "<term>";
    emit(d, o);
    return is_input_error(d.rule) ? 2 : 1;
  }
  return 0;
}

int audit(Options const& o) {
  fs::path dir = o.paths.empty() ? stdlib_dir() : fs::path(o.paths.front());
  Session s = make_session(o);
  s.load_directory(dir);
  if (int code = report(s, o)) return code;
  Manifest m;
  try {
    m = load_manifest(dir / "MANIFEST");
  } catch (Error const& e) {
    Diagnostic d = e.diagnostic();
    d.file = (dir / "MANIFEST").generic_string();
    emit(d, o);
    return 2;
  }
  AuditReport r = o.audit ? audit_tiers(s, m, dir) : audit_manifest(s, m, dir);
  if (o.audit)
    for (auto const& n : r.tier_b) std::cout << n << '\n';
  for (auto const& p : r.problems) std::cerr << "error\t" << dir.generic_string() << "\t0..0\taudit\t" << escape_field(p) << '\n';
  return r.ok ? 0 : 1;
}

int cmd_assumptions(Options const& o) {
  if (o.audit) return audit(o);
  if (o.name.empty()) {
    std::cerr << "assumptions: NAME is required unless --audit-tier-a is given\n";
    return 2;
  }
  Session s = make_session(o);
  if (o.paths.empty())
    s.load_directory(stdlib_dir());
  else
    for (auto const& p : o.paths) s.load(p);
  if (int code = report(s, o)) return code;
  try {
    for (auto const& n : assumptions_of(s.table(), o.name)) std::cout << n << '\n';
  } catch (Error const& e) {
    emit(e.diagnostic(), o);
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"joinlang: checker for the joinlang type theory"};
  app.require_subcommand(1);
  app.add_option("--root", o.roots, "Extra import root (searched before the stdlib)");
  app.add_option("--format", o.format, "Diagnostic format")->check(CLI::IsMember({"human", "tsv"}));

  auto* check = app.add_subcommand("check", "Check files or directories");
  check->add_option("paths", o.paths, "Files or directories")->required();
  check->add_flag("--dump", o.dump, "Print the declaration table");

  auto* normalize = app.add_subcommand("normalize", "Normalize a term in the context of a file");
  normalize->add_option("file", o.file)->required();
  normalize->add_option("term", o.term)->required();

  auto* assumptions = app.add_subcommand("assumptions", "List the postulates a declaration depends on");
  assumptions->add_flag("--audit-tier-a", o.audit, "Audit a library directory against its MANIFEST");
  assumptions->add_option("name", o.name);
  assumptions->add_option("paths", o.paths);

  auto* manifest = app.add_subcommand("manifest-audit", "Cross-check a library directory with its MANIFEST");
  manifest->add_option("dir", o.paths);

  for (auto* sub : {check, normalize, assumptions, manifest}) {
    sub->add_option("--root", o.roots, "Extra import root");
    sub->add_option("--format", o.format, "Diagnostic format")->check(CLI::IsMember({"human", "tsv"}));
  }

  CLI11_PARSE(app, argc, argv);

  if (assumptions->parsed() && o.audit && !o.name.empty()) {
    o.paths.insert(o.paths.begin(), o.name);
    o.name.clear();
  }
  if (*check) return cmd_check(o);
  if (*normalize) return cmd_normalize(o);
  if (*assumptions) return cmd_assumptions(o);
  return audit(o);
}
