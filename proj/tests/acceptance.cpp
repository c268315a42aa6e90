// Acceptance gate: one line per criterion, exit 1 on any failure.
// Bounds are pinned here on purpose; do not lower them to make a
// failing run pass.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "hashshift/audit.hpp"
#include "hashshift/codec.hpp"

using namespace hashshift;

namespace {

bool all_passed = true;

void report(int number, const std::string& title, bool ok, const std::string& detail) {
  all_passed = all_passed && ok;
  std::printf("[%s] criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(),
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

// Runs the checks for one criterion; an exception fails the criterion.
void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(number, title, ok, detail);
}

bool merge(const std::vector<CheckReport>& reports, std::string& detail) {
  bool ok = true;
  long long comparisons = 0;
  for (const CheckReport& r : reports) {
    ok = ok && r.passed();
    comparisons += r.comparisons;
    if (!r.passed()) {
      if (!detail.empty()) detail += "; ";
      detail += r.name + ": " + r.detail;
    }
  }
  if (ok) detail = std::to_string(comparisons) + " checks";
  return ok;
}

}  // namespace

int main() {
  const RhoTable rho = RhoTable::standard();
  const std::vector<ForbiddenSet> suite = default_forbidden_suite(42);

  criterion(1, "unique readability sweep (46137 comparisons, < 1 s)", [&](std::string& detail) {
    CheckReport r = audit_eq3(rho);
    detail = r.detail + " [" + std::to_string(r.millis) + " ms]";
    return r.passed() && r.comparisons == 46137 && r.millis < 1000.0;
  });

  criterion(2, "star-map involution up to length 6", [&](std::string& detail) {
    return merge({audit_involution(6)}, detail);
  });

  criterion(3, "star consistency with the windowed codes up to length 4",
            [&](std::string& detail) { return merge({audit_star_consistency(4)}, detail); });

  criterion(4, "cross-triple commutation, non-commutation witness, group axioms",
            [&](std::string& detail) {
              return merge({audit_cross_commutation(5), audit_noncommutation_witness(),
                            audit_group_axioms(4)},
                           detail);
            });

  criterion(5, "bounded freeness: verified witnesses up to norm 6, 50 moved words",
            [&](std::string& detail) { return merge({audit_freeness(6, 50)}, detail); });

  criterion(6, "equivariance over the forbidden-set suite at window 6",
            [&](std::string& detail) {
              return merge({audit_equivariance(suite, 6, kDefaultBudget)}, detail);
            });

  criterion(7, "suffix agreement and tilde discrimination",
            [&](std::string& detail) { return merge({audit_suffix_agreement(rho)}, detail); });

  criterion(8, "conjugacy layer: intertwining, double application, round trip",
            [&](std::string& detail) {
              return merge({audit_intertwining(rho, 5), audit_hinverse(rho, 100, 42),
                            audit_roundtrip(rho, 5)},
                           detail);
            });

  criterion(9, "forbidden-word correspondence up to v-length 3", [&](std::string& detail) {
    return merge({audit_correspondence(rho, suite, 3, kDefaultBudget)}, detail);
  });

  criterion(10, "synchronization window with minimality certificate",
            [&](std::string& detail) { return merge({audit_sync_window(rho)}, detail); });

  criterion(11, "mutation sensitivity of every code-table bit", [&](std::string& detail) {
    return merge({audit_mutation_sensitivity(rho)}, detail);
  });

  return all_passed ? 0 : 1;
}
