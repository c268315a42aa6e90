#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hashshift/alphabet.hpp"
#include "hashshift/report.hpp"
#include "hashshift/subshift.hpp"

namespace hashshift {

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using BinaryWord = std::vector<std::uint8_t>;  // entries 0 or 1

constexpr int kBlockLen = 22;

std::string format_bits(const BinaryWord& b);
BinaryWord parse_bits(std::string_view text);

// The 22-bit substitution:
//   a_i       -> 110100 (00)^(7-i) 11 (00)^i
//   tilde a_i -> 11010011 (00)^(6-i) 11 (00)^i
//   #         -> (11)^5 01 (11)^5
// All 13 entries are pairwise distinct.
class RhoTable {
 public:
  static RhoTable standard();

  const BinaryWord& entry(Symbol s) const { return entries_[static_cast<std::size_t>(s.id())]; }

  // Symbol whose entry equals the 22-bit block, if any.
  std::optional<Symbol> block_symbol(const std::uint8_t* block) const;

  // Copy with one bit flipped; mutation-testing hook.
  RhoTable with_flipped_bit(Symbol s, int pos) const;

 private:
  std::array<BinaryWord, Symbol::kCount> entries_{};
};

// Concatenation of entries; length 22 * |w|.
BinaryWord encode(const RhoTable& rho, const Word& w);

// Exhaustive sweep of rho(a) != (rho(a')rho(a''))[n, n+22) over all
// 13^3 triples and offsets 1 <= n < 22.
CheckReport check_unique_readability(const RhoTable& rho);

// rho(a_i) and rho(tilde a_i) share their [m,22) suffix for every
// 8 <= m < 22 and differ at positions 6 and 7.
CheckReport check_suffix_agreement(const RhoTable& rho);

// Phases n in 0..21 at which y parses against the block grid: full
// blocks are entries, the leading fragment is a suffix of some entry,
// the trailing fragment a prefix of some entry.  A fragment shorter
// than its block is matched as an infix at offset n.
std::vector<int> phases(const RhoTable& rho, const BinaryWord& y);

struct Decoded {
  int phase;
  Word word;  // symbols of the full blocks
  int leading_partial;
  int trailing_partial;

  friend bool operator==(const Decoded&, const Decoded&) = default;
};

// One entry per consistent phase, in phase order.
std::vector<Decoded> decode(const RhoTable& rho, const BinaryWord& y);

struct SyncWindowResult {
  int window;                    // least length forcing a unique phase
  BinaryWord ambiguous_witness;  // (window-1)-bit factor with >= 2 phases
};

// Least L such that every length-L factor of encode(u), |u| <= 4, has
// exactly one phase; exhaustive oracle over all 13^4 words.
SyncWindowResult sync_window(const RhoTable& rho);

// All length-n binary factors of encodings of admissible words.
std::vector<BinaryWord> phi_language(const RhoTable& rho, const ForbiddenSet& R, int n,
                                     long long budget = kDefaultBudget);

// One step of the conjugacy map at phase n with local rule g_i: emits
// rho(g_i(b c)) for consecutive block symbols, consuming one block of
// lookahead.  For 1 <= n < 8 the leading fragment resolves its block
// symbol uniquely; for 8 <= n < 22 it is copied verbatim.  Requires a
// zero trailing fragment and at least 2 full blocks.
BinaryWord apply_h(const RhoTable& rho, const BinaryWord& y, int phase, int gen);

// apply_h(encode(u), 0, i) == encode(windowed g_i image of u) for all
// words u with 2 <= |u| <= max_len.
CheckReport verify_intertwining(const RhoTable& rho, int gen, int max_len);

// Double application of apply_h restores the input minus two lookahead
// blocks, on seeded random words across all phases.
CheckReport verify_h_inverse(const RhoTable& rho, int gen, int samples, unsigned seed);

// For every hash-free odd v with |v| <= max_v_len: # v # is
// inadmissible iff encode(# v #) occurs in no window of any encoded
// admissible word.
CheckReport verify_forbidden_correspondence(const RhoTable& rho, const ForbiddenSet& R,
                                            int max_v_len, long long budget = kDefaultBudget);

}  // namespace hashshift
