#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "joinlang/kernel.hpp"

namespace joinlang {

/// Loads `.jt` files with their imports into one declaration table.
///
/// An `import "name"` is looked up as `name.jt` in each search root in order.
/// Files are checked at most once; an import cycle is an error. The first
/// error in a file stops that file; its diagnostic is recorded and loading
/// continues with the next requested file.
class Session {
 public:
  explicit Session(std::vector<std::filesystem::path> search_roots = {});

  /// Loads a file (and its imports). Returns false if it or an import failed.
  bool load_file(std::filesystem::path const& path);
  /// Loads every `*.jt` file directly inside `dir`, in lexicographic order.
  bool load_directory(std::filesystem::path const& dir);
  /// Loads a file or a directory.
  bool load(std::filesystem::path const& path);

  GlobalTable const& table() const { return table_; }
  std::vector<Diagnostic> const& diagnostics() const { return diagnostics_; }

  /// 0 when clean, 2 if any lexical/syntax/I-O failure occurred, 1 otherwise.
  int exit_code() const;

  /// Declarations introduced by a loaded file, in file order.
  std::vector<std::string> const& declarations_of(std::filesystem::path const& path) const;
  /// Imports of a loaded file as written.
  std::vector<std::string> const& imports_of(std::filesystem::path const& path) const;
  std::vector<std::string> const& loaded_files() const { return order_; }

  /// Elaborates `text` in the final context of everything loaded and returns
  /// the printed normal form and type, `"<nf> : <type>"`.
  std::string normalize(std::string const& text) const;

  /// Deterministic dump of the declaration table (one declaration per line).
  std::string dump() const;

 private:
  enum class State { loading, done, failed };
  struct FileInfo {
    State state = State::loading;
    std::vector<std::string> decls;
    std::vector<std::string> imports;
  };

  std::string key(std::filesystem::path const& p) const;
  std::filesystem::path find_import(std::string const& name, std::filesystem::path const& from) const;
  void record(Diagnostic d, std::string const& file);

  std::vector<std::filesystem::path> roots_;
  GlobalTable table_;
  std::map<std::string, FileInfo> files_;
  std::vector<std::string> order_;
  std::vector<Diagnostic> diagnostics_;
};

/// True for rules that signal unreadable or unparseable input (exit code 2).
bool is_input_error(std::string const& rule);

std::string read_file(std::filesystem::path const& p);

}  // namespace joinlang
