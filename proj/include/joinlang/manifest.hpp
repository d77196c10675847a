#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "joinlang/session.hpp"

namespace joinlang {

/// One line of `stdlib/MANIFEST`: `file<TAB>name<TAB>tier<TAB>anchor`.
struct ManifestEntry {
  std::string file;
  std::string name;
  char tier = 'A';
  std::string anchor;
};

struct Manifest {
  std::vector<std::string> files;  // in first-appearance order
  std::vector<ManifestEntry> entries;
  std::vector<std::pair<std::string, std::string>> level_pairs;  // `#pair<TAB>name<TAB>name1`

  std::set<std::string> names_with_tier(char tier) const;
};

/// Parses manifest text. Blank lines and lines starting with '#' are ignored,
/// except `#pair` lines which record a level-duplicated declaration.
/// Throws Error ("manifest-format") on malformed records.
Manifest parse_manifest(std::string const& text);
Manifest load_manifest(std::filesystem::path const& path);

/// The postulates Tier-A declarations may depend on.
std::set<std::string> const& trusted_assumptions();

struct AuditReport {
  bool ok = true;
  std::vector<std::string> problems;
  std::vector<std::string> tier_b;  // sorted Tier-B names found in the loaded files

  void problem(std::string p) {
    ok = false;
    problems.push_back(std::move(p));
  }
};

/// Cross-checks the manifest against a session that loaded `dir`: every listed
/// file exists and was checked, every entry is declared in its file with the
/// listed tier, every declaration of those files is listed, and imports only
/// refer to files listed earlier. Both halves of every level pair must be listed.
AuditReport audit_manifest(Session const& session, Manifest const& manifest, std::filesystem::path const& dir);

/// Tier audit: Tier-A declarations depend only on trusted postulates, Tier-B
/// declarations are postulates listing themselves, and the Tier-B names found
/// equal the manifest's Tier-B set.
AuditReport audit_tiers(Session const& session, Manifest const& manifest, std::filesystem::path const& dir);

}  // namespace joinlang
