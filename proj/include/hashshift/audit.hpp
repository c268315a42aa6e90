#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hashshift/codec.hpp"
#include "hashshift/report.hpp"
#include "hashshift/subshift.hpp"

namespace hashshift {

// Bounds for the verification audit.  The defaults are the pinned
// acceptance bounds; lowering them weakens the audit.
struct AuditOptions {
  int involution_len = 6;
  int commutation_len = 5;
  int star_len = 4;
  int axioms_norm = 4;
  int freeness_norm = 6;
  int moved_count = 50;
  int equivariance_window = 6;
  int intertwining_len = 5;
  int hinverse_samples = 100;
  int roundtrip_len = 5;
  int correspondence_vlen = 3;
  unsigned seed = 42;
  long long budget = kDefaultBudget;

  // When set, replaces the default forbidden-set suite.
  std::optional<std::vector<ForbiddenSet>> forbidden_suite;

  // Corrupts the rho table before running; test hook.
  std::optional<std::pair<Symbol, int>> rho_flip;

  // Empty means every suite.  Known names: eq3 involution commutation
  // star group freeness equivariance suffix intertwining hinverse
  // roundtrip correspondence sync mutation.
  std::vector<std::string> suites;
};

const std::vector<std::string>& audit_suite_names();

// Default suite: empty set, {a1}, {a2 a1 a2}, and a seeded random
// 3-element set.
std::vector<ForbiddenSet> default_forbidden_suite(unsigned seed);

// Runs the selected suites in their fixed order, invoking on_report
// for each finished check.  Returns all reports.
std::vector<CheckReport> run_audit(const AuditOptions& options,
                                   const std::function<void(const CheckReport&)>& on_report = {});

// Individual audit checks, reused by the acceptance suite.
CheckReport audit_eq3(const RhoTable& rho);
CheckReport audit_involution(int max_len);
CheckReport audit_cross_commutation(int max_len);
CheckReport audit_noncommutation_witness();
CheckReport audit_star_consistency(int max_len);
CheckReport audit_group_axioms(int max_norm);
CheckReport audit_freeness(int max_norm, int moved_count);
CheckReport audit_equivariance(const std::vector<ForbiddenSet>& suite, int window,
                               long long budget);
CheckReport audit_suffix_agreement(const RhoTable& rho);
CheckReport audit_intertwining(const RhoTable& rho, int max_len);
CheckReport audit_hinverse(const RhoTable& rho, int samples, unsigned seed);
CheckReport audit_roundtrip(const RhoTable& rho, int max_len);
CheckReport audit_correspondence(const RhoTable& rho, const std::vector<ForbiddenSet>& suite,
                                 int max_v_len, long long budget);
CheckReport audit_sync_window(const RhoTable& rho);
CheckReport audit_mutation_sensitivity(const RhoTable& rho);

}  // namespace hashshift
