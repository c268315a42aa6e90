#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hashshift/alphabet.hpp"
#include "hashshift/report.hpp"

namespace hashshift {

// Window-2 local map over ordered symbol pairs, materialized as a full
// 169-entry table.  The label marks the rule as one of the generator
// rules g_1..g_6.
class LocalRule {
 public:
  static LocalRule from_function(const std::function<Symbol(Symbol, Symbol)>& f,
                                 std::optional<int> label = std::nullopt);

  Symbol operator()(Symbol first, Symbol second) const {
    return Symbol::from_id(table_[static_cast<std::size_t>(first.id()) * Symbol::kCount +
                                  static_cast<std::size_t>(second.id())]);
  }

  std::optional<int> label() const { return label_; }

 private:
  LocalRule() = default;
  std::array<std::uint8_t, Symbol::kCount * Symbol::kCount> table_{};
  std::optional<int> label_;
};

// The generator rule g_i: flips a_i <-> tilde a_i when the successor is
// '#' or a plain letter from the same triple ({1,2,3} or {4,5,6})
// other than i; every other pair is fixed on its first symbol.
LocalRule make_generator_rule(int i);
const LocalRule& generator_rule(int i);  // cached

// Sliding block code with a total rule over symbol m-tuples.
class SlidingBlockCode {
 public:
  static SlidingBlockCode identity();                   // window 1
  static SlidingBlockCode from_rule(const LocalRule&);  // window 2
  static SlidingBlockCode generator(int i);             // window 2, rule g_i

  int window() const { return window_; }
  Symbol apply(std::span<const Symbol> tuple) const;

 private:
  SlidingBlockCode(int window, std::vector<std::uint8_t> table)
      : window_(window), table_(std::move(table)) {}
  friend SlidingBlockCode compose_codes(const SlidingBlockCode&, const SlidingBlockCode&);

  int window_;
  std::vector<std::uint8_t> table_;  // 13^window entries, big-endian tuple index
};

// Left-aligned application: output position k reads w[k, k+window).
// Output length is |w| - window + 1; requires |w| >= window.
Word apply_windowed(const SlidingBlockCode& code, const Word& w);

// f*_i on hash-free words: g_i applied to successive pairs with a
// virtual trailing '#'.  Length-preserving; the empty word is fixed.
Word star_map(int i, const Word& w);

// Composition outer . inner as one code of window
// window(outer) + window(inner) - 1.
SlidingBlockCode compose_codes(const SlidingBlockCode& outer, const SlidingBlockCode& inner);

// Checks apply_windowed(g_i, # w # x) == # f*_i(w) # for every
// hash-free w with |w| <= max_len and every trailing context symbol x.
CheckReport verify_star_consistency(int i, int max_len);

}  // namespace hashshift
