#include "joinlang/manifest.hpp"

#include <algorithm>
#include <sstream>

namespace fs = std::filesystem;

namespace joinlang {

std::set<std::string> Manifest::names_with_tier(char tier) const {
  std::set<std::string> out;
  for (auto const& e : entries)
    if (e.tier == tier) out.insert(e.name);
  return out;
}

Manifest parse_manifest(std::string const& text) {
  Manifest m;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    Span span{offset, offset + line.size()};
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields[0] == "#pair") {
      if (fields.size() != 3) fail("manifest-format", span, "expected #pair<TAB>name<TAB>name");
      m.level_pairs.push_back({fields[1], fields[2]});
      continue;
    }
    if (line[0] == '#') continue;
    if (fields.size() != 4 || fields[2].size() != 1 || std::string("ABC").find(fields[2][0]) == std::string::npos)
      fail("manifest-format", span, "expected file<TAB>name<TAB>tier<TAB>anchor with tier in {A,B,C}");
    m.entries.push_back({fields[0], fields[1], fields[2][0], fields[3]});
    if (std::find(m.files.begin(), m.files.end(), fields[0]) == m.files.end()) m.files.push_back(fields[0]);
  }
  return m;
}

Manifest load_manifest(fs::path const& path) { return parse_manifest(read_file(path)); }

std::set<std::string> const& trusted_assumptions() {
  static const std::set<std::string> trusted = [] {
    std::set<std::string> s{"funext00", "funext01", "funext11", "ua0", "ua1"};
    for (auto const& p : primitive_names()) s.insert(p);
    return s;
  }();
  return trusted;
}

namespace {

std::string stem_of(std::string const& import) {
  return import.size() > 3 && import.substr(import.size() - 3) == ".jt" ? import : import + ".jt";
}

}  // namespace

AuditReport audit_manifest(Session const& session, Manifest const& manifest, fs::path const& dir) {
  AuditReport r;
  auto const& table = session.table();
  std::set<std::string> listed;
  for (std::size_t i = 0; i < manifest.files.size(); ++i) {
    auto const& file = manifest.files[i];
    fs::path p = dir / file;
    if (!fs::exists(p)) {
      r.problem(file + ": listed in the manifest but missing");
      continue;
    }
    for (auto const& imp : session.imports_of(p)) {
      auto pos = std::find(manifest.files.begin(), manifest.files.end(), stem_of(imp));
      if (pos == manifest.files.end() || static_cast<std::size_t>(pos - manifest.files.begin()) >= i)
        r.problem(file + ": imports '" + imp + "' which is not listed before it");
    }
    std::set<std::string> in_manifest;
    for (auto const& e : manifest.entries)
      if (e.file == file) in_manifest.insert(e.name);
    for (auto const& name : session.declarations_of(p))
      if (!in_manifest.count(name)) r.problem(file + ": declaration '" + name + "' is not in the manifest");
  }
  for (auto const& e : manifest.entries) listed.insert(e.name);
  for (auto const& [a, b] : manifest.level_pairs)
    for (auto const& n : {a, b})
      if (!listed.count(n)) r.problem(n + ": level pair member is not a manifest entry");
  listed.clear();
  for (auto const& e : manifest.entries) {
    if (!listed.insert(e.name).second) r.problem(e.name + ": listed twice");
    DeclPtr d = table.find(e.name);
    if (!d) {
      r.problem(e.file + ": '" + e.name + "' is not declared");
      continue;
    }
    if (fs::path(d->file).filename().generic_string() != e.file)
      r.problem(e.name + ": declared in " + d->file + ", manifest says " + e.file);
    if (!d->tier || *d->tier != e.tier)
      r.problem(e.name + ": tier " + std::string(1, e.tier) + " in the manifest, " +
                (d->tier ? std::string(1, *d->tier) : std::string("none")) + " in the file");
  }
  return r;
}

AuditReport audit_tiers(Session const& session, Manifest const& manifest, fs::path const& dir) {
  AuditReport r;
  auto const& trusted = trusted_assumptions();
  std::set<std::string> tier_b;
  for (auto const& file : manifest.files) {
    for (auto const& name : session.declarations_of(dir / file)) {
      DeclPtr d = session.table().find(name);
      if (!d || !d->tier) continue;
      switch (*d->tier) {
        case 'A':
          if (d->kind == DeclKind::postulate && !trusted.count(d->name))
            r.problem(name + ": Tier-A postulate outside the trusted set");
          for (auto const& a : d->assumptions)
            if (!trusted.count(a)) r.problem(name + ": Tier-A declaration depends on untrusted '" + a + "'");
          break;
        case 'B':
          if (d->kind != DeclKind::postulate) r.problem(name + ": Tier-B declaration is not a postulate");
          if (!d->assumptions.count(name)) r.problem(name + ": Tier-B declaration does not list itself");
          tier_b.insert(name);
          break;
        default: break;
      }
    }
  }
  r.tier_b.assign(tier_b.begin(), tier_b.end());
  auto expected = manifest.names_with_tier('B');
  for (auto const& n : expected)
    if (!tier_b.count(n)) r.problem(n + ": Tier B in the manifest but not found as Tier B");
  for (auto const& n : tier_b)
    if (!expected.count(n)) r.problem(n + ": Tier B in the library but not in the manifest");
  return r;
}

}  // namespace joinlang
