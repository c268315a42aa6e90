#include "hashshift/audit.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>
#include <set>

#include "hashshift/blockcode.hpp"
#include "hashshift/enumerate.hpp"
#include "hashshift/group.hpp"

namespace hashshift {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void fail(CheckReport& report, std::string detail) {
  if (report.passed()) {
    report.status = CheckReport::Status::Fail;
    report.detail = std::move(detail);
  }
}

// Merges sub-reports into one, keeping the first failure.
CheckReport merge(std::string name, Clock::time_point start, std::vector<CheckReport> parts) {
  CheckReport out;
  out.name = std::move(name);
  long long passes = 0;
  for (CheckReport& part : parts) {
    out.comparisons += part.comparisons;
    if (!part.passed()) {
      fail(out, part.name + ": " + part.detail);
    } else {
      ++passes;
    }
  }
  if (out.passed()) {
    out.detail = std::to_string(passes) + " sub-checks, " + std::to_string(out.comparisons) +
                 " comparisons";
  }
  out.millis = elapsed_ms(start);
  return out;
}

}  // namespace

const std::vector<std::string>& audit_suite_names() {
  static const std::vector<std::string> names = {
      "eq3",    "involution",   "commutation", "star",      "group",
      "freeness", "equivariance", "suffix",      "intertwining", "hinverse",
      "roundtrip", "correspondence", "sync",     "mutation"};
  return names;
}

std::vector<ForbiddenSet> default_forbidden_suite(unsigned seed) {
  std::vector<ForbiddenSet> suite;
  suite.emplace_back();
  suite.push_back(ForbiddenSet({parse_word("a1")}));
  suite.push_back(ForbiddenSet({parse_word("a2 a1 a2")}));
  // Seeded random 3-element set of hash-free odd words.
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len_dist(0, 1);
  std::uniform_int_distribution<int> sym_dist(0, 11);
  std::set<Word> members;
  while (members.size() < 3) {
    const int len = len_dist(rng) == 0 ? 1 : 3;
    Word w;
    for (int k = 0; k < len; ++k) w.push_back(Symbol::from_id(sym_dist(rng)));
    members.insert(std::move(w));
  }
  suite.push_back(ForbiddenSet(std::vector<Word>(members.begin(), members.end())));
  return suite;
}

CheckReport audit_eq3(const RhoTable& rho) {
  CheckReport report = check_unique_readability(rho);
  report.name = "eq3";
  const long long expected = pow13(3) * (kBlockLen - 1);
  if (report.passed() && report.comparisons != expected) {
    fail(report, "expected " + std::to_string(expected) + " comparisons, performed " +
                     std::to_string(report.comparisons));
  }
  return report;
}

CheckReport audit_involution(int max_len) {
  auto start = Clock::now();
  CheckReport report;
  report.name = "involution";
  for (int gen = 1; gen <= 6 && report.passed(); ++gen) {
    for (int len = 0; len <= max_len && report.passed(); ++len) {
      for_each_hash_free(len, [&](const Word& w) {
        if (!report.passed()) return;
        ++report.comparisons;
        Word once = star_map(gen, w);
        if (once.size() != w.size() || !is_hash_free(once)) {
          fail(report, "star g" + std::to_string(gen) + " broke length or hash-freeness on \"" +
                           format_word(w) + "\"");
          return;
        }
        if (star_map(gen, once) != w) {
          fail(report, "star g" + std::to_string(gen) + " not an involution on \"" +
                           format_word(w) + "\"");
        }
      });
    }
    // Windowed level: double application trims the last two positions.
    // Each pass consumes one symbol, so the shortest usable input has 3.
    const SlidingBlockCode code = SlidingBlockCode::generator(gen);
    for (int len = 3; len <= max_len && report.passed(); ++len) {
      for_each_word(len, [&](const Word& w) {
        if (!report.passed()) return;
        ++report.comparisons;
        Word twice = apply_windowed(code, apply_windowed(code, w));
        if (!std::equal(twice.begin(), twice.end(), w.begin())) {
          fail(report, "windowed g" + std::to_string(gen) + " double application differs on \"" +
                           format_word(w) + "\"");
        }
      });
    }
  }
  if (report.passed()) {
    report.detail = std::to_string(report.comparisons) + " words checked up to length " +
                    std::to_string(max_len);
  }
  report.millis = elapsed_ms(start);
  return report;
}

CheckReport audit_cross_commutation(int max_len) {
  auto start = Clock::now();
  CheckReport report;
  report.name = "cross-commutation";
  for (int i = 1; i <= 3 && report.passed(); ++i) {
    for (int j = 4; j <= 6 && report.passed(); ++j) {
      for (int len = 0; len <= max_len && report.passed(); ++len) {
        for_each_hash_free(len, [&](const Word& w) {
          if (!report.passed()) return;
          ++report.comparisons;
          if (star_map(i, star_map(j, w)) != star_map(j, star_map(i, w))) {
            fail(report, "g" + std::to_string(i) + " and g" + std::to_string(j) +
                             " fail to commute on \"" + format_word(w) + "\"");
          }
        });
      }
      const SlidingBlockCode ci = SlidingBlockCode::generator(i);
      const SlidingBlockCode cj = SlidingBlockCode::generator(j);
      for (int len = 3; len <= max_len && report.passed(); ++len) {
        for_each_word(len, [&](const Word& w) {
          if (!report.passed()) return;
          ++report.comparisons;
          if (apply_windowed(ci, apply_windowed(cj, w)) !=
              apply_windowed(cj, apply_windowed(ci, w))) {
            fail(report, "windowed g" + std::to_string(i) + ", g" + std::to_string(j) +
                             " disagree on \"" + format_word(w) + "\"");
          }
        });
      }
    }
  }
  if (report.passed()) {
    report.detail = "9 generator pairs on " + std::to_string(report.comparisons) + " words";
  }
  report.millis = elapsed_ms(start);
  return report;
}

CheckReport audit_noncommutation_witness() {
  auto start = Clock::now();
  CheckReport report;
  report.name = "within-triple-noncommutation";
  report.status = CheckReport::Status::Fail;
  report.detail = "no witness found";
  for (int len = 1; len <= 3 && !report.passed(); ++len) {
    for_each_hash_free(len, [&](const Word& w) {
      if (report.passed()) return;
      for (int i = 1; i <= 3 && !report.passed(); ++i) {
        for (int j = i + 1; j <= 3; ++j) {
          ++report.comparisons;
          if (star_map(i, star_map(j, w)) != star_map(j, star_map(i, w))) {
            report.status = CheckReport::Status::Pass;
            report.detail = "g" + std::to_string(i) + ", g" + std::to_string(j) +
                            " differ on \"" + format_word(w) + "\"";
            return;
          }
        }
      }
    });
  }
  report.millis = elapsed_ms(start);
  return report;
}

CheckReport audit_star_consistency(int max_len) {
  auto start = Clock::now();
  std::vector<CheckReport> parts;
  for (int gen = 1; gen <= 6; ++gen) parts.push_back(verify_star_consistency(gen, max_len));
  return merge("star-consistency", start, std::move(parts));
}

CheckReport audit_group_axioms(int max_norm) {
  auto start = Clock::now();
  CheckReport report;
  report.name = "group-axioms";
  const std::vector<GroupElement> elements = enumerate_elements(max_norm);
  const GroupElement identity;
  for (const GroupElement& g : elements) {
    if (multiply(identity, g) != g || multiply(g, identity) != g) {
      fail(report, "identity law fails for " + g.format());
    }
    if (multiply(g, inverse(g)) != identity || multiply(inverse(g), g) != identity) {
      fail(report, "inverse law fails for " + g.format());
    }
    if (!report.passed()) break;
  }
  for (std::size_t a = 0; a < elements.size() && report.passed(); ++a) {
    for (std::size_t b = 0; b < elements.size() && report.passed(); ++b) {
      const GroupElement ab = multiply(elements[a], elements[b]);
      for (std::size_t c = 0; c < elements.size(); ++c) {
        ++report.comparisons;
        if (multiply(ab, elements[c]) !=
            multiply(elements[a], multiply(elements[b], elements[c]))) {
          fail(report, "associativity fails for " + elements[a].format() + ", " +
                           elements[b].format() + ", " + elements[c].format());
          break;
        }
      }
    }
  }
  if (report.passed()) {
    report.detail = std::to_string(elements.size()) + " normal forms, " +
                    std::to_string(report.comparisons) + " associativity triples";
  }
  report.millis = elapsed_ms(start);
  return report;
}

CheckReport audit_freeness(int max_norm, int moved_count) {
  auto start = Clock::now();
  CheckReport report;
  report.name = "freeness";
  long long witnesses = 0;
  for (const GroupElement& g : enumerate_elements(max_norm)) {
    if (g.is_identity()) continue;
    try {
      claim1_witness(g);
      ++witnesses;
    } catch (const std::exception& e) {
      fail(report, e.what());
      break;
    }
  }
  if (report.passed()) {
    for (int gen = 1; gen <= 6 && report.passed(); ++gen) {
      std::vector<Word> moved = moved_words(GroupElement::generator(gen), moved_count);
      std::set<Word> distinct(moved.begin(), moved.end());
      if (static_cast<int>(distinct.size()) < moved_count) {
        fail(report, "g" + std::to_string(gen) + ": only " + std::to_string(distinct.size()) +
                         " distinct moved words");
      }
    }
  }
  if (report.passed()) {
    report.detail = std::to_string(witnesses) + " verified witnesses up to norm " +
                    std::to_string(max_norm) + ", " + std::to_string(moved_count) +
                    " moved words per generator";
  }
  report.comparisons = witnesses;
  report.millis = elapsed_ms(start);
  return report;
}

CheckReport audit_equivariance(const std::vector<ForbiddenSet>& suite, int window,
                               long long budget) {
  auto start = Clock::now();
  std::vector<std::future<CheckReport>> futures;
  for (std::size_t r = 0; r < suite.size(); ++r) {
    for (int gen = 1; gen <= 6; ++gen) {
      futures.push_back(std::async(std::launch::async, [&suite, r, gen, window, budget] {
        return verify_equivariance(gen, suite[r], window, budget);
      }));
    }
  }
  std::vector<CheckReport> parts;
  parts.reserve(futures.size());
  for (auto& f : futures) parts.push_back(f.get());
  return merge("equivariance", start, std::move(parts));
}

CheckReport audit_suffix_agreement(const RhoTable& rho) {
  CheckReport report = check_suffix_agreement(rho);
  report.name = "suffix";
  return report;
}

CheckReport audit_intertwining(const RhoTable& rho, int max_len) {
  auto start = Clock::now();
  std::vector<CheckReport> parts;
  for (int gen = 1; gen <= 6; ++gen) parts.push_back(verify_intertwining(rho, gen, max_len));
  return merge("intertwining", start, std::move(parts));
}

CheckReport audit_hinverse(const RhoTable& rho, int samples, unsigned seed) {
  auto start = Clock::now();
  std::vector<CheckReport> parts;
  for (int gen = 1; gen <= 6; ++gen) parts.push_back(verify_h_inverse(rho, gen, samples, seed));
  return merge("hinverse", start, std::move(parts));
}

CheckReport audit_roundtrip(const RhoTable& rho, int max_len) {
  auto start = Clock::now();
  CheckReport report;
  report.name = "roundtrip";
  for (int len = 0; len <= max_len && report.passed(); ++len) {
    for_each_word(len, [&](const Word& w) {
      if (!report.passed()) return;
      ++report.comparisons;
      const std::vector<Decoded> results = decode(rho, encode(rho, w));
      const Decoded expected{0, w, 0, 0};
      if (std::find(results.begin(), results.end(), expected) == results.end()) {
        fail(report, "decode(encode(w)) misses the aligned parse for \"" + format_word(w) + "\"");
      }
    });
  }
  if (report.passed()) report.detail = std::to_string(report.comparisons) + " words round-tripped";
  report.millis = elapsed_ms(start);
  return report;
}

CheckReport audit_correspondence(const RhoTable& rho, const std::vector<ForbiddenSet>& suite,
                                 int max_v_len, long long budget) {
  auto start = Clock::now();
  std::vector<std::future<CheckReport>> futures;
  for (std::size_t r = 0; r < suite.size(); ++r) {
    futures.push_back(std::async(std::launch::async, [&rho, &suite, r, max_v_len, budget] {
      return verify_forbidden_correspondence(rho, suite[r], max_v_len, budget);
    }));
  }
  std::vector<CheckReport> parts;
  for (auto& f : futures) parts.push_back(f.get());
  return merge("correspondence", start, std::move(parts));
}

CheckReport audit_sync_window(const RhoTable& rho) {
  auto start = Clock::now();
  CheckReport report;
  report.name = "sync";
  try {
    const SyncWindowResult result = sync_window(rho);
    if (result.window > 2 * kBlockLen - 1) {
      fail(report, "window " + std::to_string(result.window) + " exceeds 43");
    }
    if (report.passed() && result.window > 1) {
      if (static_cast<int>(result.ambiguous_witness.size()) != result.window - 1 ||
          phases(rho, result.ambiguous_witness).size() < 2) {
        fail(report, "minimality certificate invalid");
      }
    }
    if (report.passed()) {
      // Every 43-bit factor of a bounded encoding has exactly one phase.
      for_each_word(4, [&](const Word& u) {
        if (!report.passed()) return;
        const BinaryWord stream = encode(rho, u);
        const int len = 2 * kBlockLen - 1;
        for (std::size_t p = 0; p + static_cast<std::size_t>(len) <= stream.size(); ++p) {
          ++report.comparisons;
          BinaryWord window(stream.begin() + static_cast<std::ptrdiff_t>(p),
                            stream.begin() + static_cast<std::ptrdiff_t>(p) + len);
          if (phases(rho, window).size() != 1) {
            fail(report, "43-bit factor of encode(\"" + format_word(u) + "\") at offset " +
                             std::to_string(p) + " has phase count != 1");
            return;
          }
        }
      });
    }
    if (report.passed()) {
      report.detail = "sync window " + std::to_string(result.window) +
                      ", ambiguous witness of length " +
                      std::to_string(result.ambiguous_witness.size());
    }
  } catch (const std::exception& e) {
    fail(report, e.what());
  }
  report.millis = elapsed_ms(start);
  return report;
}

CheckReport audit_mutation_sensitivity(const RhoTable& rho) {
  auto start = Clock::now();
  CheckReport report;
  report.name = "mutation";

  auto detected = [&rho](Symbol s, int pos) {
    const RhoTable mutant = rho.with_flipped_bit(s, pos);
    try {
      if (!check_unique_readability(mutant).passed()) return true;
      if (!check_suffix_agreement(mutant).passed()) return true;
      for (int gen = 1; gen <= 6; ++gen) {
        if (!verify_intertwining(mutant, gen, 3).passed()) return true;
        if (!verify_h_inverse(mutant, gen, 5, 7u).passed()) return true;
      }
      if (!audit_roundtrip(mutant, 2).passed()) return true;
    } catch (const std::exception&) {
      // A conjugacy-layer check erroring out on a corrupted table
      // counts as detection.
      return true;
    }
    return false;
  };

  std::vector<std::future<std::vector<std::string>>> futures;
  for (int id = 0; id < Symbol::kCount; ++id) {
    futures.push_back(std::async(std::launch::async, [&detected, id] {
      std::vector<std::string> undetected;
      for (int pos = 0; pos < kBlockLen; ++pos) {
        if (!detected(Symbol::from_id(id), pos)) {
          undetected.push_back(format_symbol(Symbol::from_id(id)) + "[" + std::to_string(pos) +
                               "]");
        }
      }
      return undetected;
    }));
  }
  std::vector<std::string> undetected;
  for (auto& f : futures) {
    for (std::string& entry : f.get()) undetected.push_back(std::move(entry));
  }
  report.comparisons = static_cast<long long>(Symbol::kCount) * kBlockLen;
  if (!undetected.empty()) {
    std::string detail = "undetected flips:";
    for (const std::string& entry : undetected) detail += " " + entry;
    fail(report, detail);
  } else {
    report.detail = "all " + std::to_string(report.comparisons) + " single-bit flips detected";
  }
  report.millis = elapsed_ms(start);
  return report;
}

std::vector<CheckReport> run_audit(const AuditOptions& options,
                                   const std::function<void(const CheckReport&)>& on_report) {
  RhoTable rho = RhoTable::standard();
  if (options.rho_flip) rho = rho.with_flipped_bit(options.rho_flip->first, options.rho_flip->second);
  const std::vector<ForbiddenSet> suite =
      options.forbidden_suite ? *options.forbidden_suite : default_forbidden_suite(options.seed);

  auto selected = [&options](const std::string& name) {
    if (options.suites.empty()) return true;
    return std::find(options.suites.begin(), options.suites.end(), name) != options.suites.end();
  };

  std::vector<CheckReport> reports;
  auto emit = [&](CheckReport report) {
    if (on_report) on_report(report);
    reports.push_back(std::move(report));
  };

  if (selected("eq3")) emit(audit_eq3(rho));
  if (selected("involution")) emit(audit_involution(options.involution_len));
  if (selected("commutation")) {
    emit(audit_cross_commutation(options.commutation_len));
    emit(audit_noncommutation_witness());
  }
  if (selected("star")) emit(audit_star_consistency(options.star_len));
  if (selected("group")) emit(audit_group_axioms(options.axioms_norm));
  if (selected("freeness")) emit(audit_freeness(options.freeness_norm, options.moved_count));
  if (selected("equivariance")) {
    emit(audit_equivariance(suite, options.equivariance_window, options.budget));
  }
  if (selected("suffix")) emit(audit_suffix_agreement(rho));
  if (selected("intertwining")) emit(audit_intertwining(rho, options.intertwining_len));
  if (selected("hinverse")) emit(audit_hinverse(rho, options.hinverse_samples, options.seed));
  if (selected("roundtrip")) emit(audit_roundtrip(rho, options.roundtrip_len));
  if (selected("correspondence")) {
    emit(audit_correspondence(rho, suite, options.correspondence_vlen, options.budget));
  }
  if (selected("sync")) emit(audit_sync_window(rho));
  if (selected("mutation")) emit(audit_mutation_sensitivity(rho));
  return reports;
}

}  // namespace hashshift
