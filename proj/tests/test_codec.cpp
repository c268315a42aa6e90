#include <algorithm>
#include <set>

#include "doctest.h"
#include "hashshift/codec.hpp"
#include "hashshift/enumerate.hpp"
#include "hashshift/blockcode.hpp"

using namespace hashshift;

namespace {
Symbol a(int i) { return Symbol::plain(i); }
Symbol t(int i) { return Symbol::tilde(i); }
const RhoTable& rho() {
  static const RhoTable table = RhoTable::standard();
  return table;
}
}  // namespace

TEST_CASE("rho table entries") {
  CHECK(format_bits(rho().entry(a(1))) == "1101000000000000001100");
  CHECK(format_bits(rho().entry(Symbol::hash())) == "1111111111011111111111");
  CHECK(format_bits(rho().entry(t(6))) == "1101001111000000000000");
  CHECK(format_bits(rho().entry(a(6))) == "1101000011000000000000");
  CHECK(format_bits(rho().entry(t(1))) == "1101001100000000001100");

  std::set<std::string> distinct;
  for (int id = 0; id < Symbol::kCount; ++id) {
    const BinaryWord& entry = rho().entry(Symbol::from_id(id));
    CHECK(entry.size() == kBlockLen);
    distinct.insert(format_bits(entry));
  }
  CHECK(distinct.size() == Symbol::kCount);
}

TEST_CASE("bit parsing") {
  CHECK(parse_bits("0110") == BinaryWord{0, 1, 1, 0});
  CHECK(parse_bits("").empty());
  CHECK(format_bits(parse_bits("1101")) == "1101");
  CHECK_THROWS_AS(parse_bits("10a1"), ParseError);
}

TEST_CASE("encode") {
  CHECK(encode(rho(), {}).empty());
  CHECK(encode(rho(), {a(1)}) == rho().entry(a(1)));
  BinaryWord two = encode(rho(), {a(1), Symbol::hash()});
  CHECK(two.size() == 44);
  CHECK(BinaryWord(two.begin(), two.begin() + 22) == rho().entry(a(1)));
  CHECK(BinaryWord(two.begin() + 22, two.end()) == rho().entry(Symbol::hash()));
}

TEST_CASE("unique readability sweep") {
  CheckReport report = check_unique_readability(rho());
  CHECK(report.passed());
  CHECK(report.comparisons == 46137);

  // Spot case: rho(#) against the interior of rho(#)rho(#) at offset 1.
  BinaryWord pair = encode(rho(), {Symbol::hash(), Symbol::hash()});
  CHECK(BinaryWord(pair.begin() + 1, pair.begin() + 23) != rho().entry(Symbol::hash()));
  // Offset 22 reproduces the second block verbatim and lies outside the
  // swept offset range.
  BinaryWord pair_a = encode(rho(), {a(1), a(1)});
  CHECK(BinaryWord(pair_a.begin() + 22, pair_a.end()) == rho().entry(a(1)));
}

TEST_CASE("suffix agreement and tilde discrimination") {
  CheckReport report = check_suffix_agreement(rho());
  CHECK(report.passed());
  CHECK(report.comparisons == 84 + 12);
  for (int i = 1; i <= 6; ++i) {
    const BinaryWord& plain = rho().entry(a(i));
    const BinaryWord& tilde = rho().entry(t(i));
    for (int m = 8; m < 22; ++m) {
      CHECK(BinaryWord(plain.begin() + m, plain.end()) ==
            BinaryWord(tilde.begin() + m, tilde.end()));
    }
    CHECK(plain[6] != tilde[6]);
    CHECK(plain[7] != tilde[7]);
  }
}

TEST_CASE("phases") {
  auto p = phases(rho(), rho().entry(a(1)));
  CHECK(std::find(p.begin(), p.end(), 0) != p.end());

  CHECK(phases(rho(), {}).size() == 22);

  // The all-zero block parses at no phase.
  BinaryWord zeros(22, 0);
  CHECK(phases(rho(), zeros).empty());
}

TEST_CASE("decode") {
  const Word w = {a(1), Symbol::hash()};
  auto results = decode(rho(), encode(rho(), w));
  const Decoded expected{0, w, 0, 0};
  CHECK(std::find(results.begin(), results.end(), expected) != results.end());

  CHECK(decode(rho(), BinaryWord(22, 0)).empty());

  auto empty_results = decode(rho(), {});
  REQUIRE(empty_results.size() == 22);
  for (const Decoded& d : empty_results) {
    CHECK(d.word.empty());
    CHECK(d.leading_partial == 0);
    CHECK(d.trailing_partial == 0);
  }
}

TEST_CASE("decode round trip on all short words") {
  for (int len = 0; len <= 3; ++len) {
    for_each_word(len, [&](const Word& w) {
      auto results = decode(rho(), encode(rho(), w));
      const Decoded expected{0, w, 0, 0};
      CHECK(std::find(results.begin(), results.end(), expected) != results.end());
    });
  }
}

TEST_CASE("apply_h at phase 0") {
  CHECK(apply_h(rho(), encode(rho(), {a(1), a(2)}), 0, 1) == rho().entry(t(1)));
  CHECK(apply_h(rho(), encode(rho(), {a(2), a(3)}), 0, 1) == rho().entry(a(2)));
}

TEST_CASE("apply_h with a leading fragment") {
  // Phase 8: the 14-bit fragment is copied verbatim.
  const BinaryWord& block1 = rho().entry(a(1));
  BinaryWord y(block1.begin() + 8, block1.end());
  const BinaryWord& block2 = rho().entry(a(2));
  const BinaryWord& block3 = rho().entry(a(3));
  y.insert(y.end(), block2.begin(), block2.end());
  y.insert(y.end(), block3.begin(), block3.end());
  REQUIRE(y.size() == 58);

  BinaryWord image = apply_h(rho(), y, 8, 1);
  REQUIRE(image.size() == 36);
  CHECK(BinaryWord(image.begin(), image.begin() + 14) == BinaryWord(y.begin(), y.begin() + 14));
  CHECK(BinaryWord(image.begin() + 14, image.end()) == rho().entry(a(2)));

  // Phase 3: the fragment resolves its block symbol and is rewritten.
  BinaryWord y3(block1.begin() + 3, block1.end());
  y3.insert(y3.end(), block2.begin(), block2.end());
  y3.insert(y3.end(), block3.begin(), block3.end());
  BinaryWord image3 = apply_h(rho(), y3, 3, 1);
  const BinaryWord& flipped = rho().entry(t(1));  // g1(a1 a2) = t1
  CHECK(BinaryWord(image3.begin(), image3.begin() + 19) ==
        BinaryWord(flipped.begin() + 3, flipped.end()));
  CHECK(BinaryWord(image3.begin() + 19, image3.end()) == rho().entry(a(2)));
}

TEST_CASE("apply_h errors") {
  BinaryWord y = encode(rho(), {a(1), a(2)});
  y.pop_back();
  CHECK_THROWS_AS(apply_h(rho(), y, 0, 1), std::invalid_argument);      // trailing partial
  CHECK_THROWS_AS(apply_h(rho(), encode(rho(), {a(1)}), 0, 1), std::invalid_argument);
  BinaryWord garbage(44, 0);
  CHECK_THROWS_AS(apply_h(rho(), garbage, 0, 1), DecodeError);

  // Two blocks survive one application but not a second.
  BinaryWord inner = apply_h(rho(), encode(rho(), {a(1), a(2)}), 0, 1);
  CHECK_THROWS_AS(apply_h(rho(), inner, 0, 1), std::invalid_argument);
}

TEST_CASE("verify_intertwining") {
  CHECK(verify_intertwining(rho(), 1, 3).passed());
  CHECK(verify_intertwining(rho(), 6, 3).passed());
  CHECK(verify_intertwining(rho(), 2, 2).passed());
}

TEST_CASE("verify_h_inverse") {
  CHECK(verify_h_inverse(rho(), 1, 10, 42).passed());
  CHECK(verify_h_inverse(rho(), 3, 1, 0).passed());
}

TEST_CASE("apply_h commutes with the one-bit shift") {
  // Exhaustive over a sub-alphabet; compares the shifted image with the
  // image of the shifted input on their common domain.
  const std::vector<Symbol> sub = {a(1), a(2), t(1), Symbol::hash()};
  std::vector<Word> words;
  for (Symbol s0 : sub)
    for (Symbol s1 : sub)
      for (Symbol s2 : sub)
        for (Symbol s3 : sub) words.push_back({s0, s1, s2, s3});
  for (const Word& u : words) {
    const BinaryWord stream = encode(rho(), u);
    for (int phase = 0; phase < 21; ++phase) {
      const BinaryWord y(stream.begin() + phase, stream.end());
      const int lead = (22 - phase) % 22;
      if ((static_cast<int>(y.size()) - lead) / 22 < 3) continue;
      BinaryWord shifted(y.begin() + 1, y.end());
      BinaryWord lhs = apply_h(rho(), shifted, phase + 1, 1);
      BinaryWord rhs = apply_h(rho(), y, phase, 1);
      CHECK(lhs == BinaryWord(rhs.begin() + 1, rhs.end()));
    }
  }
}

TEST_CASE("phi_language") {
  auto bits1 = phi_language(rho(), ForbiddenSet(), 1);
  CHECK(bits1 == std::vector<BinaryWord>{{0}, {1}});

  auto bits22 = phi_language(rho(), ForbiddenSet(), 22);
  for (int id = 0; id < Symbol::kCount; ++id) {
    CHECK(std::binary_search(bits22.begin(), bits22.end(), rho().entry(Symbol::from_id(id))));
  }

  ForbiddenSet R({parse_word("a1")});
  auto bits66 = phi_language(rho(), R, 66);
  BinaryWord forbidden = encode(rho(), parse_word("# a1 #"));
  BinaryWord allowed = encode(rho(), parse_word("# a2 #"));
  CHECK_FALSE(std::binary_search(bits66.begin(), bits66.end(), forbidden));
  CHECK(std::binary_search(bits66.begin(), bits66.end(), allowed));
}

TEST_CASE("verify_forbidden_correspondence") {
  CHECK(verify_forbidden_correspondence(rho(), ForbiddenSet({parse_word("a1")}), 1).passed());
  CHECK(verify_forbidden_correspondence(rho(), ForbiddenSet(), 1).passed());
}

TEST_CASE("mutation hook flips exactly one bit") {
  RhoTable mutant = rho().with_flipped_bit(a(1), 0);
  CHECK(mutant.entry(a(1))[0] == 0);
  CHECK(BinaryWord(mutant.entry(a(1)).begin() + 1, mutant.entry(a(1)).end()) ==
        BinaryWord(rho().entry(a(1)).begin() + 1, rho().entry(a(1)).end()));
  CHECK(mutant.entry(a(2)) == rho().entry(a(2)));
  CHECK_THROWS_AS(rho().with_flipped_bit(a(1), 22), std::invalid_argument);
}
