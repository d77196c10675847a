// Acceptance suite: one PASS/FAIL line per criterion.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "joinlang/kernel.hpp"
#include "joinlang/manifest.hpp"
#include "joinlang/surface.hpp"
#include "support/oracle.hpp"
#include "support/surface_gen.hpp"

using namespace joinlang;
namespace fs = std::filesystem;

namespace {

fs::path const source_dir = JOINLANG_SOURCE_DIR;
fs::path const stdlib = source_dir / "stdlib";
fs::path const golden = source_dir / "tests" / "golden";

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(fs::path const& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string quote_arg(std::string const& s) {
  std::string r = "'";
  for (char c : s) r += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return r + "'";
}

Run cli(std::vector<std::string> const& args) {
  static int counter = 0;
  fs::path tmp = fs::temp_directory_path() / ("joinlang-accept-" + std::to_string(::getpid()) + "-" +
                                              std::to_string(counter++));
  std::string cmd = "JOINLANG_STDLIB=" + quote_arg(stdlib.string()) + " " + quote_arg(JOINLANG_CLI);
  for (auto const& a : args) cmd += " " + quote_arg(a);
  cmd += " >" + quote_arg(tmp.string() + ".out") + " 2>" + quote_arg(tmp.string() + ".err");
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(tmp.string() + ".out");
  r.err = slurp(tmp.string() + ".err");
  fs::remove(tmp.string() + ".out");
  fs::remove(tmp.string() + ".err");
  return r;
}

std::vector<fs::path> files_with(fs::path const& dir, std::string const& ext) {
  std::vector<fs::path> out;
  if (fs::exists(dir))
    for (auto const& e : fs::directory_iterator(dir))
      if (e.path().extension() == ext) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string squash_ws(std::string const& s) {
  std::istringstream in(s);
  std::string w, r;
  while (in >> w) r += (r.empty() ? "" : " ") + w;
  return r;
}

std::string trim_newline(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  return s;
}

int failures = 0;

void report(int n, bool ok, std::string const& title, std::string const& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  " << n << "  " << title << ": " << detail << std::endl;
  if (!ok) ++failures;
}

void full_check() {
  Manifest m = load_manifest(stdlib / "MANIFEST");
  std::vector<std::string> missing;
  for (auto const& f : m.files)
    if (!fs::exists(stdlib / f)) missing.push_back(f);
  auto t0 = std::chrono::steady_clock::now();
  Run r = cli({"check", stdlib.string()});
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = r.code == 0 && missing.empty() && secs < 60.0;
  std::ostringstream d;
  d << "exit " << r.code << ", " << m.files.size() << " manifest files, " << missing.size() << " missing, "
    << secs << " s";
  if (!r.err.empty()) d << "; " << trim_newline(r.err);
  report(1, ok, "full stdlib check", d.str());
}

void tier_audit() {
  Manifest m = load_manifest(stdlib / "MANIFEST");
  Run r = cli({"assumptions", "--audit-tier-a", stdlib.string()});
  std::set<std::string> emitted;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) emitted.insert(line);
  bool same = emitted == m.names_with_tier('B');
  Run ma = cli({"manifest-audit", stdlib.string()});
  bool ok = r.code == 0 && same && ma.code == 0;
  std::ostringstream d;
  d << "exit " << r.code << ", " << emitted.size() << " Tier-B names emitted, manifest lists "
    << m.names_with_tier('B').size() << (same ? " (equal)" : " (differ)") << ", manifest-audit exit " << ma.code;
  if (!r.err.empty()) d << "; " << trim_newline(r.err);
  report(2, ok, "tier audit", d.str());
}

void computation_goldens() {
  fs::path ctx = golden / "context.jt";
  auto terms = files_with(golden / "compute", ".term");
  std::vector<std::string> bad;
  for (auto const& t : terms) {
    fs::path expected = fs::path(t).replace_extension(".golden");
    Run r = cli({"normalize", ctx.string(), trim_newline(slurp(t))});
    if (r.code != 0 || !fs::exists(expected) || r.out != slurp(expected)) bad.push_back(t.stem().string());
  }
  bool ok = terms.size() >= 12 && bad.empty();
  std::ostringstream d;
  d << terms.size() << " cases, " << bad.size() << " mismatched";
  for (auto const& b : bad) d << " " << b;
  report(3, ok, "computation goldens", d.str());
}

void statement_goldens() {
  Run r = cli({"check", stdlib.string(), "--dump"});
  std::map<std::string, std::string> types;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> f;
    std::size_t start = 0;
    for (;;) {
      std::size_t tab = line.find('\t', start);
      f.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (f.size() >= 5) types[f[0]] = f[4];
  }
  static const std::vector<std::string> required{"joinfib",           "im_univ",  "join_embed",  "join_extension",
                                                 "join_connectivity", "q_n_conn", "truncat_univ"};
  std::vector<std::string> bad;
  auto goldens = files_with(golden / "statements", ".golden");
  std::set<std::string> have;
  for (auto const& g : goldens) {
    std::string name = g.stem().string();
    have.insert(name);
    auto it = types.find(name);
    if (it == types.end() || squash_ws(it->second) != squash_ws(slurp(g))) bad.push_back(name);
  }
  for (auto const& n : required)
    if (!have.count(n)) bad.push_back(n + "(no golden)");
  bool ok = r.code == 0 && bad.empty();
  std::ostringstream d;
  d << goldens.size() << " statements, " << bad.size() << " mismatched";
  for (auto const& b : bad) d << " " << b;
  report(4, ok, "statement-fidelity goldens", d.str());
}

void negative_corpus() {
  auto files = files_with(source_dir / "tests" / "negative", ".jt");
  std::vector<std::string> bad;
  for (auto const& f : files) {
    std::string first;
    std::istringstream(slurp(f)) >> first >> first >> first;  // "-- expect: rule"
    Run r = cli({"check", "--format", "tsv", f.string()});
    std::istringstream err(r.err);
    std::string line, rule;
    if (std::getline(err, line)) {
      std::vector<std::string> fields;
      std::istringstream ls(line);
      for (std::string x; std::getline(ls, x, '\t');) fields.push_back(x);
      if (fields.size() >= 4) rule = fields[3];
    }
    if (r.code == 0 || rule != first) bad.push_back(f.stem().string() + "(" + rule + ")");
  }
  bool ok = files.size() >= 10 && bad.empty();
  std::ostringstream d;
  d << files.size() << " files, " << bad.size() << " with the wrong outcome";
  for (auto const& b : bad) d << " " << b;
  report(5, ok, "negative corpus", d.str());
}

void nbe_oracle() {
  GlobalTable table;
  Checker checker(table);
  Nbe nbe([](std::string const&) -> Val { return nullptr; });
  oracle::Generator g(20261017);
  int agreed = 0, total = 0;
  std::string first_bad;
  for (int i = 0; i < 1000; ++i) {
    std::size_t arity = g.pick(3) == 0 ? 1 : 0;
    oracle::P t = g.gen(arity, {}, 0);
    TermPtr core = oracle::to_core(t);
    ++total;
    try {
      checker.check(Context(table), core, nbe.eval({}, oracle::arrow_type(arity)));
      TermPtr expected = oracle::to_core(oracle::normalize(t));
      if (alpha_equal(*expected, *nbe.normalize({}, core))) {
        ++agreed;
        continue;
      }
    } catch (std::exception const&) {
    }
    if (first_bad.empty()) first_bad = print_term(*core);
  }
  std::ostringstream d;
  d << agreed << "/" << total << " terms agree with the substitution normalizer";
  if (!first_bad.empty()) d << "; first disagreement " << first_bad;
  report(6, agreed == total && total >= 1000, "NbE oracle equivalence", d.str());
}

void round_trip() {
  static const std::set<std::string> globals{"idfn", "add", "Equiv", "f₀"};
  auto is_global = [](std::string const& n) { return globals.count(n) != 0; };
  gen::SurfaceGenerator g(424242);
  int ok = 0, total = 0;
  std::string first_bad;
  for (int i = 0; i < 1000; ++i) {
    auto t = g.term({}, 1 + g.pick(6));
    std::string printed = print_surface(*t);
    ++total;
    try {
      SurfacePtr back = parse_term(printed);
      if (alpha_equal(*resolve_term(*t, {}, is_global), *resolve_term(*back, {}, is_global))) {
        ++ok;
        continue;
      }
    } catch (std::exception const&) {
    }
    if (first_bad.empty()) first_bad = printed;
  }
  std::ostringstream d;
  d << ok << "/" << total << " generated terms survive parse after print";
  if (!first_bad.empty()) d << "; first failure " << first_bad;
  report(7, ok == total && total >= 1000, "parser round trip", d.str());
}

void determinism() {
  Run a = cli({"check", stdlib.string(), "--dump"});
  Run b = cli({"check", stdlib.string(), "--dump"});
  fs::path neg = source_dir / "tests" / "negative";
  Run c = cli({"check", neg.string()});
  Run d2 = cli({"check", neg.string()});
  bool ok = a.code == 0 && a.out == b.out && a.err == b.err && c.out == d2.out && c.err == d2.err &&
            c.code == d2.code && !a.out.empty() && !c.err.empty();
  std::ostringstream d;
  d << "dump " << a.out.size() << " bytes " << (a.out == b.out ? "identical" : "differs") << ", diagnostics "
    << c.err.size() << " bytes " << (c.err == d2.err ? "identical" : "differs");
  report(8, ok, "determinism", d.str());
}

}  // namespace

int main() {
  full_check();
  tier_audit();
  computation_goldens();
  statement_goldens();
  negative_corpus();
  nbe_oracle();
  round_trip();
  determinism();
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed"))
            << std::endl;
  return failures ? 1 : 0;
}
