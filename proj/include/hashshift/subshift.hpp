#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "hashshift/alphabet.hpp"
#include "hashshift/enumerate.hpp"
#include "hashshift/group.hpp"
#include "hashshift/report.hpp"

namespace hashshift {

// Raised when an enumeration would exceed the configured budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultBudget = pow13(7);

// Finite set of hash-free odd-length words; determines the subshift
// that forbids every pattern # w #.
class ForbiddenSet {
 public:
  ForbiddenSet() = default;
  explicit ForbiddenSet(std::vector<Word> members);  // validates, sorts, dedups

  const std::vector<Word>& members() const { return members_; }
  bool contains(const Word& w) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }

  // One word per line; blank lines and lines starting with "//" are
  // ignored.  Rejects invalid words with a line-numbered ParseError.
  static ForbiddenSet load(std::istream& in);
  std::string save() const;

  friend bool operator==(const ForbiddenSet&, const ForbiddenSet&) = default;

 private:
  std::vector<Word> members_;  // sorted, unique
};

// True iff no factor of u equals # w # for some member w.  Because
// padding with plain letters creates no new '#', this local check is
// exactly membership in the finite-window language of the subshift.
bool is_admissible(const ForbiddenSet& R, const Word& u);

// All admissible words of length n, sorted by symbol id.
std::vector<Word> language(const ForbiddenSet& R, int n, long long budget = kDefaultBudget);

// Depth-first enumeration of the admissible words of length n with
// incremental forbidden-suffix matching; visits in symbol-id order.
template <typename Visitor>
void for_each_admissible(const ForbiddenSet& R, int n, Visitor&& visit,
                         long long budget = kDefaultBudget) {
  if (n < 0) throw std::invalid_argument("for_each_admissible: negative length");
  if (pow13(n) > budget) throw BudgetError("language enumeration budget exceeded");
  Word w;
  w.reserve(static_cast<std::size_t>(n));
  auto ends_forbidden = [&](const Word& cur) {
    // Only appending '#' can complete a pattern # w #.
    if (!cur.back().is_hash()) return false;
    const std::size_t p = cur.size() - 1;
    for (const Word& m : R.members()) {
      const std::size_t need = m.size() + 2;
      if (cur.size() < need) continue;
      if (!cur[p - m.size() - 1].is_hash()) continue;
      bool eq = true;
      for (std::size_t k = 0; k < m.size() && eq; ++k) {
        eq = cur[p - m.size() + k] == m[k];
      }
      if (eq) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      visit(static_cast<const Word&>(w));
      return;
    }
    for (int id = 0; id < Symbol::kCount; ++id) {
      w.push_back(Symbol::from_id(id));
      if (!ends_forbidden(w)) self(self, depth + 1);
      w.pop_back();
    }
  };
  rec(rec, 0);
}

// Image of R under the action of g; same cardinality, still a valid
// forbidden set by length preservation.
ForbiddenSet act_on_R(const GroupElement& g, const ForbiddenSet& R);

// Compares { windowed g_i image of u : u admissible of length n+1 }
// with the length-n language of the transported forbidden set.
CheckReport verify_equivariance(int i, const ForbiddenSet& R, int n,
                                long long budget = kDefaultBudget);

}  // namespace hashshift
