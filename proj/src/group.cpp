#include "hashshift/group.hpp"

#include <sstream>

#include "hashshift/blockcode.hpp"

namespace hashshift {

namespace {

// Free reduction in Z2*Z2*Z2: cancel adjacent equal letters.
std::vector<int> reduce(const std::vector<int>& letters) {
  std::vector<int> out;
  out.reserve(letters.size());
  for (int letter : letters) {
    if (!out.empty() && out.back() == letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  }
  return out;
}

void check_range(const std::vector<int>& letters, int lo, int hi, const char* which) {
  for (int letter : letters) {
    if (letter < lo || letter > hi) {
      throw std::invalid_argument(std::string("GroupElement: ") + which + " factor letter " +
                                  std::to_string(letter) + " out of " + std::to_string(lo) + ".." +
                                  std::to_string(hi));
    }
  }
}

}  // namespace

GroupElement GroupElement::from_factors(std::vector<int> left, std::vector<int> right) {
  check_range(left, 1, 3, "left");
  check_range(right, 4, 6, "right");
  GroupElement g;
  g.left_ = reduce(left);
  g.right_ = reduce(right);
  return g;
}

GroupElement GroupElement::generator(int i) {
  if (i < 1 || i > 6) throw std::invalid_argument("GroupElement::generator: index out of 1..6");
  if (i <= 3) return from_factors({i}, {});
  return from_factors({}, {i});
}

GroupElement GroupElement::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<int> left, right;
  bool seen_bar = false;
  while (in >> token) {
    if (token == "|") {
      if (seen_bar) throw ParseError("group element: multiple '|' separators");
      seen_bar = true;
      continue;
    }
    int letter;
    try {
      std::size_t used = 0;
      letter = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("group element: bad letter '" + token + "'");
    }
    (seen_bar ? right : left).push_back(letter);
  }
  if (!seen_bar) throw ParseError("group element: missing '|' separator");
  try {
    return from_factors(std::move(left), std::move(right));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string GroupElement::format() const {
  std::string out;
  for (int letter : left_) {
    out += std::to_string(letter);
    out += ' ';
  }
  out += '|';
  for (int letter : right_) {
    out += ' ';
    out += std::to_string(letter);
  }
  return out;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  std::vector<int> left = g.left();
  left.insert(left.end(), h.left().begin(), h.left().end());
  std::vector<int> right = g.right();
  right.insert(right.end(), h.right().begin(), h.right().end());
  return GroupElement::from_factors(std::move(left), std::move(right));
}

GroupElement inverse(const GroupElement& g) {
  std::vector<int> left(g.left().rbegin(), g.left().rend());
  std::vector<int> right(g.right().rbegin(), g.right().rend());
  return GroupElement::from_factors(std::move(left), std::move(right));
}

Word act(const GroupElement& g, const Word& w) {
  if (!is_hash_free(w)) throw std::invalid_argument("act: word contains '#'");
  Word out = w;
  for (auto it = g.right().rbegin(); it != g.right().rend(); ++it) out = star_map(*it, out);
  for (auto it = g.left().rbegin(); it != g.left().rend(); ++it) out = star_map(*it, out);
  return out;
}

std::vector<GroupElement> enumerate_elements(int max_total_length) {
  // Reduced sequences over a 3-letter set, grouped by length.
  auto reduced_factors = [](int lo, int max_len) {
    std::vector<std::vector<std::vector<int>>> by_len(static_cast<std::size_t>(max_len) + 1);
    by_len[0].push_back({});
    for (int len = 1; len <= max_len; ++len) {
      for (const auto& shorter : by_len[static_cast<std::size_t>(len - 1)]) {
        for (int letter = lo; letter < lo + 3; ++letter) {
          if (!shorter.empty() && shorter.back() == letter) continue;
          auto extended = shorter;
          extended.push_back(letter);
          by_len[static_cast<std::size_t>(len)].push_back(std::move(extended));
        }
      }
    }
    return by_len;
  };
  auto lefts = reduced_factors(1, max_total_length);
  auto rights = reduced_factors(4, max_total_length);
  std::vector<GroupElement> out;
  for (int total = 0; total <= max_total_length; ++total) {
    for (int n = 0; n <= total; ++n) {
      int m = total - n;
      for (const auto& lf : lefts[static_cast<std::size_t>(n)]) {
        for (const auto& rf : rights[static_cast<std::size_t>(m)]) {
          out.push_back(GroupElement::from_factors(lf, rf));
        }
      }
    }
  }
  return out;
}

Word claim1_witness(const GroupElement& g, const Word& prefix) {
  if (g.is_identity()) throw std::invalid_argument("claim1_witness: identity element");
  const bool use_left = !g.left().empty();
  const std::vector<int>& factor = use_left ? g.left() : g.right();
  for (Symbol s : prefix) {
    bool ok = s.kind() == SymbolKind::Plain &&
              (use_left ? s.index() <= 3 : s.index() >= 4);
    if (!ok) {
      throw std::invalid_argument("claim1_witness: prefix letter " + format_symbol(s) +
                                  " outside the acting triple");
    }
  }
  Word v = prefix;
  for (int letter : factor) v.push_back(Symbol::tilde(letter));
  Word image = act(g, v);
  if (image == v || image.at(prefix.size()) != Symbol::plain(factor.front())) {
    throw std::logic_error("claim1_witness: verification failed for " + g.format() +
                           " on \"" + format_word(v) + "\"");
  }
  return v;
}

std::vector<Word> moved_words(const GroupElement& g, int count) {
  if (g.is_identity()) throw std::invalid_argument("moved_words: identity element");
  if (count < 1) throw std::invalid_argument("moved_words: count < 1");
  const int base = !g.left().empty() ? 1 : 4;  // prefix alphabet a_base..a_base+2
  std::vector<Word> out;
  Word prefix;
  for (int len = 0; static_cast<int>(out.size()) < count; ++len) {
    prefix.assign(static_cast<std::size_t>(len), Symbol::plain(base));
    // Odometer over the 3-letter prefix alphabet.
    while (true) {
      out.push_back(claim1_witness(g, prefix));
      if (static_cast<int>(out.size()) == count) break;
      int pos = len - 1;
      while (pos >= 0 && prefix[static_cast<std::size_t>(pos)].index() == base + 2) {
        prefix[static_cast<std::size_t>(pos)] = Symbol::plain(base);
        --pos;
      }
      if (pos < 0) break;
      prefix[static_cast<std::size_t>(pos)] =
          Symbol::plain(prefix[static_cast<std::size_t>(pos)].index() + 1);
    }
  }
  return out;
}

}  // namespace hashshift
