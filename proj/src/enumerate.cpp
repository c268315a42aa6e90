#include "hashshift/enumerate.hpp"

namespace hashshift {

std::uint64_t word_index(const Word& w) {
  std::uint64_t v = 0;
  for (Symbol s : w) v = v * 13 + static_cast<std::uint64_t>(s.id());
  return v;
}

Word word_from_index(std::uint64_t index, int len) {
  Word w(static_cast<std::size_t>(len), Symbol::hash());
  for (int k = len - 1; k >= 0; --k) {
    w[static_cast<std::size_t>(k)] = Symbol::from_id(static_cast<int>(index % 13));
    index /= 13;
  }
  return w;
}

std::uint64_t hash_free_index(const Word& w) {
  std::uint64_t v = 0;
  for (Symbol s : w) v = v * 12 + static_cast<std::uint64_t>(s.id());
  return v;
}

Word hash_free_from_index(std::uint64_t index, int len) {
  Word w(static_cast<std::size_t>(len), Symbol::plain(1));
  for (int k = len - 1; k >= 0; --k) {
    w[static_cast<std::size_t>(k)] = Symbol::from_id(static_cast<int>(index % 12));
    index /= 12;
  }
  return w;
}

}  // namespace hashshift
