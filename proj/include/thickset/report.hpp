#pragma once

#include <string>
#include <vector>

namespace thickset {

// One failed check. Indices are -1 when not applicable.
struct Violation {
  std::string kind;
  int column = -1;
  int member = -1;
  int classId = -1;
  std::string detail;
  bool operator==(const Violation&) const = default;
};

struct WitnessReport {
  bool pass = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    pass = false;
    violations.push_back(std::move(v));
  }
};

}  // namespace thickset
