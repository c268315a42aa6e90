#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hashshift {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SymbolKind : std::uint8_t { Plain, Tilde, Hash };

// One of the 13 alphabet symbols: a_1..a_6 (plain), their marked
// variants (tilde), and the separator '#'.  Stored as a dense id
// 0..12 (plain 0..5, tilde 6..11, hash 12) so tables over symbols are
// flat arrays.
class Symbol {
 public:
  static constexpr int kCount = 13;

  static Symbol plain(int index);
  static Symbol tilde(int index);
  static Symbol hash() noexcept { return Symbol(12); }
  static Symbol from_id(int id);

  SymbolKind kind() const noexcept;
  int index() const;  // 1..6; throws for '#'
  int id() const noexcept { return id_; }
  bool is_hash() const noexcept { return id_ == 12; }
  bool is_tilde() const noexcept { return id_ >= 6 && id_ < 12; }

  friend constexpr auto operator<=>(Symbol, Symbol) noexcept = default;

 private:
  explicit constexpr Symbol(std::uint8_t id) noexcept : id_(id) {}
  std::uint8_t id_;
};

// Finite words are plain vectors of symbols with structural equality.
using Word = std::vector<Symbol>;

// Token spelling: a1..a6, t1..t6, '#'.
std::string format_symbol(Symbol s);
std::optional<Symbol> parse_symbol(std::string_view token);

// Whitespace-separated tokens; empty text is the empty word.
// Unknown tokens raise ParseError naming the token and its position.
Word parse_word(std::string_view text);
std::string format_word(const Word& w);

// Drops the first symbol.  Requires a nonempty word.
Word shift_word(const Word& w);

bool is_hash_free(const Word& w);
bool is_hash_free_odd(const Word& w);

}  // namespace hashshift
