#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hashshift/alphabet.hpp"

namespace hashshift {

// Normal form for (Z2*Z2*Z2)^2: a reduced word over {1,2,3} paired
// with a reduced word over {4,5,6}.  Reduced means no two adjacent
// letters are equal; the identity is the pair of empty words.
class GroupElement {
 public:
  GroupElement() = default;  // identity

  // Validates letter ranges and freely reduces each factor.
  static GroupElement from_factors(std::vector<int> left, std::vector<int> right);
  static GroupElement generator(int i);  // 1..6

  // Text format: left letters, '|', right letters, space separated.
  // The identity is "|".
  static GroupElement parse(std::string_view text);
  std::string format() const;

  const std::vector<int>& left() const { return left_; }
  const std::vector<int>& right() const { return right_; }
  bool is_identity() const { return left_.empty() && right_.empty(); }
  int total_length() const { return static_cast<int>(left_.size() + right_.size()); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<int> left_;
  std::vector<int> right_;
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);

// Action on hash-free words: star_map for each generator letter,
// rightmost first, right factor before left factor.
Word act(const GroupElement& g, const Word& w);

// All normal forms with total factor length <= max_total_length,
// identity included, in a deterministic order.
std::vector<GroupElement> enumerate_elements(int max_total_length);

// Freeness witness: prefix extended by the marked letters of the
// leading factor.  Verifies by evaluation that the result is moved by
// g, with the expected plain letter at position |prefix|, and throws
// on any violation.
Word claim1_witness(const GroupElement& g, const Word& prefix = {});

// `count` distinct verified moved words for g, from prefixes of
// increasing length.
std::vector<Word> moved_words(const GroupElement& g, int count);

}  // namespace hashshift
