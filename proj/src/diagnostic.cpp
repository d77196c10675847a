#include "joinlang/diagnostic.hpp"

#include <sstream>

namespace joinlang {

std::string escape_field(std::string const& text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

static std::string full_message(Diagnostic const& d) {
  std::string msg = d.message;
  if (!d.expected.empty()) msg += "; expected: " + d.expected;
  if (!d.actual.empty()) msg += "; actual: " + d.actual;
  return msg;
}

std::string format_tsv(Diagnostic const& d) {
  std::ostringstream os;
  os << (d.severity == Severity::error ? "error" : "warning") << '\t' << escape_field(d.file) << '\t' << d.span.start
     << ".." << d.span.end << '\t' << d.rule << '\t' << escape_field(full_message(d));
  return os.str();
}

std::string format_human(Diagnostic const& d) {
  std::ostringstream os;
  os << d.file << ':' << d.span.start << '-' << d.span.end << ": "
     << (d.severity == Severity::error ? "error" : "warning") << " [" << d.rule << "] " << d.message;
  if (!d.expected.empty()) os << "\n  expected: " << d.expected;
  if (!d.actual.empty()) os << "\n  actual:   " << d.actual;
  return os.str();
}

}  // namespace joinlang
