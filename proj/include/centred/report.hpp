#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace centred {

/// One comparison in a verification run. Values are rendered exactly
/// ("p" or "p/q") so a mismatch can be diagnosed from the report alone.
struct Check {
  std::string id;
  std::map<std::string, std::string> inputs;
  std::optional<std::string> expected;
  std::string actual;
  bool ok = true;
};

struct Report {
  std::vector<Check> checks;
  /// Free-form notes (e.g. truncation indices) keyed by name.
  std::map<std::string, std::string> notes;

  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const Report &other);
  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
  /// Orders checks by id, stably.
  void sort();
};

} // namespace centred
