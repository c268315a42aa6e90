#include <random>

#include "doctest.h"
#include "hashshift/alphabet.hpp"

using namespace hashshift;

TEST_CASE("symbol construction and identity") {
  CHECK(Symbol::plain(1).id() == 0);
  CHECK(Symbol::tilde(1).id() == 6);
  CHECK(Symbol::hash().id() == 12);
  CHECK(Symbol::plain(3).kind() == SymbolKind::Plain);
  CHECK(Symbol::tilde(5).kind() == SymbolKind::Tilde);
  CHECK(Symbol::hash().kind() == SymbolKind::Hash);
  CHECK(Symbol::tilde(4).index() == 4);
  CHECK_THROWS_AS(Symbol::plain(0), std::invalid_argument);
  CHECK_THROWS_AS(Symbol::plain(7), std::invalid_argument);
  CHECK_THROWS_AS(Symbol::hash().index(), std::logic_error);

  // Exactly 13 distinct values.
  for (int a = 0; a < Symbol::kCount; ++a) {
    for (int b = 0; b < Symbol::kCount; ++b) {
      CHECK((Symbol::from_id(a) == Symbol::from_id(b)) == (a == b));
    }
  }
}

TEST_CASE("parse_word") {
  Word w = parse_word("a1 t2 #");
  REQUIRE(w.size() == 3);
  CHECK(w[0] == Symbol::plain(1));
  CHECK(w[1] == Symbol::tilde(2));
  CHECK(w[2] == Symbol::hash());

  CHECK(parse_word("").empty());
  CHECK(parse_word("   \t ").empty());
  CHECK_THROWS_AS(parse_word("a7"), ParseError);
  CHECK_THROWS_AS(parse_word("a1 b2"), ParseError);
  CHECK_THROWS_WITH(parse_word("a1 x"), doctest::Contains("position 2"));
}

TEST_CASE("format_word") {
  CHECK(format_word({Symbol::plain(1), Symbol::hash()}) == "a1 #");
  CHECK(format_word({}) == "");
  CHECK(format_word({Symbol::tilde(6)}) == "t6");
}

TEST_CASE("parse/format round trip on random words") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> len_dist(0, 8);
  std::uniform_int_distribution<int> sym_dist(0, Symbol::kCount - 1);
  for (int trial = 0; trial < 500; ++trial) {
    Word w;
    const int len = len_dist(rng);
    for (int k = 0; k < len; ++k) w.push_back(Symbol::from_id(sym_dist(rng)));
    CHECK(parse_word(format_word(w)) == w);
  }
}

TEST_CASE("shift_word") {
  Word w = parse_word("a1 a2 #");
  CHECK(shift_word(w) == parse_word("a2 #"));
  CHECK(shift_word(parse_word("#")).empty());
  CHECK_THROWS_AS(shift_word({}), std::invalid_argument);

  // k-fold shift drops the first k symbols.
  Word long_word = parse_word("a1 t3 # a4 t6 a2");
  Word cur = long_word;
  for (std::size_t k = 1; k <= long_word.size(); ++k) {
    cur = shift_word(cur);
    CHECK(cur == Word(long_word.begin() + static_cast<std::ptrdiff_t>(k), long_word.end()));
  }
  CHECK(cur.empty());
}

TEST_CASE("is_hash_free_odd") {
  CHECK(is_hash_free_odd(parse_word("a1")));
  CHECK_FALSE(is_hash_free_odd(parse_word("a1 a2")));
  CHECK_FALSE(is_hash_free_odd(parse_word("a1 # a2")));
  CHECK_FALSE(is_hash_free_odd({}));
  CHECK(is_hash_free_odd(parse_word("t4 a1 t2")));
}
