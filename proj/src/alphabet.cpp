#include "hashshift/alphabet.hpp"

#include <sstream>

namespace hashshift {

Symbol Symbol::plain(int index) {
  if (index < 1 || index > 6) throw std::invalid_argument("Symbol::plain: index out of 1..6");
  return Symbol(static_cast<std::uint8_t>(index - 1));
}

Symbol Symbol::tilde(int index) {
  if (index < 1 || index > 6) throw std::invalid_argument("Symbol::tilde: index out of 1..6");
  return Symbol(static_cast<std::uint8_t>(index + 5));
}

Symbol Symbol::from_id(int id) {
  if (id < 0 || id >= kCount) throw std::invalid_argument("Symbol::from_id: id out of 0..12");
  return Symbol(static_cast<std::uint8_t>(id));
}

SymbolKind Symbol::kind() const noexcept {
  if (id_ == 12) return SymbolKind::Hash;
  return id_ < 6 ? SymbolKind::Plain : SymbolKind::Tilde;
}

int Symbol::index() const {
  if (id_ == 12) throw std::logic_error("Symbol::index: '#' has no index");
  return id_ < 6 ? id_ + 1 : id_ - 5;
}

std::string format_symbol(Symbol s) {
  if (s.is_hash()) return "#";
  char prefix = s.is_tilde() ? 't' : 'a';
  return std::string{prefix, static_cast<char>('0' + s.index())};
}

std::optional<Symbol> parse_symbol(std::string_view token) {
  if (token == "#") return Symbol::hash();
  if (token.size() != 2) return std::nullopt;
  int index = token[1] - '0';
  if (index < 1 || index > 6) return std::nullopt;
  if (token[0] == 'a') return Symbol::plain(index);
  if (token[0] == 't') return Symbol::tilde(index);
  return std::nullopt;
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  int position = 0;
  while (in >> token) {
    ++position;
    auto s = parse_symbol(token);
    if (!s) {
      throw ParseError("unknown token '" + token + "' at position " + std::to_string(position));
    }
    w.push_back(*s);
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += format_symbol(w[k]);
  }
  return out;
}

Word shift_word(const Word& w) {
  if (w.empty()) throw std::invalid_argument("shift_word: empty word");
  return Word(w.begin() + 1, w.end());
}

bool is_hash_free(const Word& w) {
  for (Symbol s : w)
    if (s.is_hash()) return false;
  return true;
}

bool is_hash_free_odd(const Word& w) { return (w.size() % 2 == 1) && is_hash_free(w); }

}  // namespace hashshift
