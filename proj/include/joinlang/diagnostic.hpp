#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace joinlang {

/// Half-open byte range into a source file.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  bool empty() const { return end <= start; }
  bool contains(Span const& other) const { return start <= other.start && other.end <= end; }
  static Span join(Span a, Span b) { return {a.start < b.start ? a.start : b.start, a.end > b.end ? a.end : b.end}; }
};

enum class Severity { error, warning };

struct Diagnostic {
  Severity severity = Severity::error;
  std::string file;
  Span span;
  std::string rule;
  std::string message;
  std::string expected;  // printed type, may be empty
  std::string actual;    // printed type, may be empty
};

/// `severity<TAB>file<TAB>start..end<TAB>rule<TAB>message`; tabs and newlines in
/// the message are escaped so each diagnostic is exactly one line.
std::string format_tsv(Diagnostic const& d);
std::string format_human(Diagnostic const& d);
std::string escape_field(std::string const& text);

/// Every rejection (lexical, syntactic, scoping, typing) is raised as one of these.
class Error : public std::runtime_error {
 public:
  explicit Error(Diagnostic d) : std::runtime_error(d.rule + ": " + d.message), diag_(std::move(d)) {}
  Diagnostic const& diagnostic() const { return diag_; }
  Diagnostic& diagnostic() { return diag_; }

 private:
  Diagnostic diag_;
};

[[noreturn]] inline void fail(std::string rule, Span span, std::string message, std::string expected = {},
                              std::string actual = {}) {
  throw Error(Diagnostic{Severity::error, {}, span, std::move(rule), std::move(message), std::move(expected),
                         std::move(actual)});
}

}  // namespace joinlang
