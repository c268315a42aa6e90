#include "hashshift/subshift.hpp"

#include <algorithm>
#include <chrono>
#include <istream>

#include "hashshift/blockcode.hpp"

namespace hashshift {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

ForbiddenSet::ForbiddenSet(std::vector<Word> members) {
  for (const Word& w : members) {
    if (!is_hash_free_odd(w)) {
      throw std::invalid_argument("ForbiddenSet: member \"" + format_word(w) +
                                  "\" is not hash-free of odd length");
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
}

bool ForbiddenSet::contains(const Word& w) const {
  return std::binary_search(members_.begin(), members_.end(), w);
}

ForbiddenSet ForbiddenSet::load(std::istream& in) {
  std::vector<Word> members;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line.rfind("//", 0) == 0) continue;
    Word w;
    try {
      w = parse_word(line);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_number) + ": " + e.what());
    }
    if (w.empty()) continue;
    if (!is_hash_free_odd(w)) {
      throw ParseError("line " + std::to_string(line_number) + ": word \"" + format_word(w) +
                       "\" must be hash-free of odd length");
    }
    members.push_back(std::move(w));
  }
  return ForbiddenSet(std::move(members));
}

std::string ForbiddenSet::save() const {
  std::string out;
  for (const Word& w : members_) {
    out += format_word(w);
    out += '\n';
  }
  return out;
}

bool is_admissible(const ForbiddenSet& R, const Word& u) {
  for (const Word& w : R.members()) {
    const std::size_t need = w.size() + 2;
    if (u.size() < need) continue;
    for (std::size_t start = 0; start + need <= u.size(); ++start) {
      if (!u[start].is_hash() || !u[start + need - 1].is_hash()) continue;
      bool eq = true;
      for (std::size_t k = 0; k < w.size() && eq; ++k) eq = u[start + 1 + k] == w[k];
      if (eq) return false;
    }
  }
  return true;
}

std::vector<Word> language(const ForbiddenSet& R, int n, long long budget) {
  std::vector<Word> out;
  for_each_admissible(R, n, [&](const Word& w) { out.push_back(w); }, budget);
  return out;
}

ForbiddenSet act_on_R(const GroupElement& g, const ForbiddenSet& R) {
  std::vector<Word> images;
  images.reserve(R.size());
  for (const Word& w : R.members()) images.push_back(act(g, w));
  return ForbiddenSet(std::move(images));
}

CheckReport verify_equivariance(int i, const ForbiddenSet& R, int n, long long budget) {
  if (n < 1) throw std::invalid_argument("verify_equivariance: n < 1");
  auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.name = "equivariance g" + std::to_string(i) + " n=" + std::to_string(n);

  const ForbiddenSet transported = act_on_R(GroupElement::generator(i), R);
  const std::size_t slots = static_cast<std::size_t>(pow13(n));
  std::vector<bool> image_side(slots, false);
  std::vector<bool> language_side(slots, false);

  const LocalRule& g = generator_rule(i);
  for_each_admissible(
      R, n + 1,
      [&](const Word& u) {
        std::uint64_t idx = 0;
        for (std::size_t k = 0; k + 1 < u.size(); ++k) {
          idx = idx * 13 + static_cast<std::uint64_t>(g(u[k], u[k + 1]).id());
        }
        image_side[idx] = true;
      },
      budget);
  for_each_admissible(
      transported, n, [&](const Word& u) { language_side[word_index(u)] = true; }, budget);

  report.comparisons = static_cast<long long>(slots);
  for (std::size_t idx = 0; idx < slots; ++idx) {
    if (image_side[idx] != language_side[idx]) {
      report.status = CheckReport::Status::Fail;
      report.detail = "word \"" + format_word(word_from_index(idx, n)) + "\" in " +
                      (image_side[idx] ? "image only" : "transported language only");
      break;
    }
  }
  if (report.passed()) {
    long long count = static_cast<long long>(
        std::count(language_side.begin(), language_side.end(), true));
    report.detail = "languages agree on " + std::to_string(count) + " words of length " +
                    std::to_string(n);
  }
  report.millis = elapsed_ms(start);
  return report;
}

}  // namespace hashshift
