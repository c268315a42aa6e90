#pragma once

#include <cstdint>
#include <utility>

#include "hashshift/alphabet.hpp"

namespace hashshift {

constexpr long long pow_ll(long long base, int n) {
  long long v = 1;
  for (int k = 0; k < n; ++k) v *= base;
  return v;
}

constexpr long long pow13(int n) { return pow_ll(13, n); }
constexpr long long pow12(int n) { return pow_ll(12, n); }

// Big-endian base-13 index of a word; inverse below.
std::uint64_t word_index(const Word& w);
Word word_from_index(std::uint64_t index, int len);

// Big-endian base-12 index of a hash-free word.
std::uint64_t hash_free_index(const Word& w);
Word hash_free_from_index(std::uint64_t index, int len);

// Visits every word of the given length over the full 13-symbol
// alphabet, in symbol-id order.  The word passed to the visitor is a
// scratch buffer; copy it if it must outlive the call.
template <typename Visitor>
void for_each_word(int len, Visitor&& visit) {
  Word w;
  w.reserve(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == len) {
      visit(static_cast<const Word&>(w));
      return;
    }
    for (int id = 0; id < Symbol::kCount; ++id) {
      w.push_back(Symbol::from_id(id));
      self(self, depth + 1);
      w.pop_back();
    }
  };
  rec(rec, 0);
}

// Same, restricted to the 12 hash-free symbols.
template <typename Visitor>
void for_each_hash_free(int len, Visitor&& visit) {
  Word w;
  w.reserve(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == len) {
      visit(static_cast<const Word&>(w));
      return;
    }
    for (int id = 0; id < 12; ++id) {
      w.push_back(Symbol::from_id(id));
      self(self, depth + 1);
      w.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace hashshift
