#pragma once

#include <string>

namespace hashshift {

// Result of one verification sweep.  A failing report always carries
// enough detail to reproduce the counterexample.
struct CheckReport {
  enum class Status { Pass, Fail, Skip };

  std::string name;
  Status status = Status::Pass;
  std::string detail;
  long long comparisons = 0;
  double millis = 0.0;

  bool passed() const { return status != Status::Fail; }
};

std::string to_line(const CheckReport& r);

}  // namespace hashshift
