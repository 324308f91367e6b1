#include "centred/report.hpp"

#include <algorithm>

namespace centred {

void Report::append(const Report &other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  for (const auto &[k, v] : other.notes)
    notes[k] = v;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check &c) { return !c.ok; }));
}

void Report::sort() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check &a, const Check &b) { return a.id < b.id; });
}

} // namespace centred
