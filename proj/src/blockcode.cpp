#include "hashshift/blockcode.hpp"

#include <chrono>
#include <sstream>

#include "hashshift/enumerate.hpp"

namespace hashshift {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// Successor symbols that trigger the a_i <-> tilde a_i flip: '#' plus
// the plain letters of i's own triple, excluding i itself.
bool in_flip_set(int i, Symbol c) {
  if (c.is_hash()) return true;
  if (c.kind() != SymbolKind::Plain) return false;
  int j = c.index();
  if (i <= 3) return j >= 1 && j <= 3 && j != i;
  return j >= 4 && j <= 6 && j != i;
}

}  // namespace

LocalRule LocalRule::from_function(const std::function<Symbol(Symbol, Symbol)>& f,
                                   std::optional<int> label) {
  LocalRule rule;
  rule.label_ = label;
  for (int a = 0; a < Symbol::kCount; ++a) {
    for (int b = 0; b < Symbol::kCount; ++b) {
      Symbol out = f(Symbol::from_id(a), Symbol::from_id(b));
      rule.table_[static_cast<std::size_t>(a) * Symbol::kCount + static_cast<std::size_t>(b)] =
          static_cast<std::uint8_t>(out.id());
    }
  }
  return rule;
}

LocalRule make_generator_rule(int i) {
  if (i < 1 || i > 6) throw std::invalid_argument("make_generator_rule: index out of 1..6");
  return LocalRule::from_function(
      [i](Symbol b, Symbol c) {
        if (!b.is_hash() && b.index() == i && in_flip_set(i, c)) {
          return b.is_tilde() ? Symbol::plain(i) : Symbol::tilde(i);
        }
        return b;
      },
      i);
}

const LocalRule& generator_rule(int i) {
  static const std::array<LocalRule, 6> rules = {
      make_generator_rule(1), make_generator_rule(2), make_generator_rule(3),
      make_generator_rule(4), make_generator_rule(5), make_generator_rule(6)};
  if (i < 1 || i > 6) throw std::invalid_argument("generator_rule: index out of 1..6");
  return rules[static_cast<std::size_t>(i - 1)];
}

SlidingBlockCode SlidingBlockCode::identity() {
  std::vector<std::uint8_t> table(Symbol::kCount);
  for (int id = 0; id < Symbol::kCount; ++id) table[static_cast<std::size_t>(id)] =
      static_cast<std::uint8_t>(id);
  return SlidingBlockCode(1, std::move(table));
}

SlidingBlockCode SlidingBlockCode::from_rule(const LocalRule& rule) {
  std::vector<std::uint8_t> table(static_cast<std::size_t>(pow13(2)));
  for (int a = 0; a < Symbol::kCount; ++a) {
    for (int b = 0; b < Symbol::kCount; ++b) {
      table[static_cast<std::size_t>(a) * Symbol::kCount + static_cast<std::size_t>(b)] =
          static_cast<std::uint8_t>(rule(Symbol::from_id(a), Symbol::from_id(b)).id());
    }
  }
  return SlidingBlockCode(2, std::move(table));
}

SlidingBlockCode SlidingBlockCode::generator(int i) { return from_rule(generator_rule(i)); }

Symbol SlidingBlockCode::apply(std::span<const Symbol> tuple) const {
  if (static_cast<int>(tuple.size()) != window_) {
    throw std::invalid_argument("SlidingBlockCode::apply: tuple size != window");
  }
  std::size_t idx = 0;
  for (Symbol s : tuple) idx = idx * Symbol::kCount + static_cast<std::size_t>(s.id());
  return Symbol::from_id(table_[idx]);
}

Word apply_windowed(const SlidingBlockCode& code, const Word& w) {
  const int m = code.window();
  if (static_cast<int>(w.size()) < m) {
    throw std::invalid_argument("apply_windowed: word shorter than window");
  }
  Word out;
  out.reserve(w.size() - static_cast<std::size_t>(m) + 1);
  for (std::size_t k = 0; k + static_cast<std::size_t>(m) <= w.size(); ++k) {
    out.push_back(code.apply(std::span<const Symbol>(w.data() + k, static_cast<std::size_t>(m))));
  }
  return out;
}

Word star_map(int i, const Word& w) {
  if (!is_hash_free(w)) throw std::invalid_argument("star_map: word contains '#'");
  const LocalRule& g = generator_rule(i);
  Word out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) {
    Symbol next = (k + 1 < w.size()) ? w[k + 1] : Symbol::hash();
    out.push_back(g(w[k], next));
  }
  return out;
}

SlidingBlockCode compose_codes(const SlidingBlockCode& outer, const SlidingBlockCode& inner) {
  const int m = outer.window() + inner.window() - 1;
  std::vector<std::uint8_t> table(static_cast<std::size_t>(pow13(m)));
  Word tuple(static_cast<std::size_t>(m), Symbol::plain(1));
  auto rec = [&](auto&& self, int depth, std::size_t idx) -> void {
    if (depth == m) {
      Word mid = apply_windowed(inner, tuple);  // length outer.window()
      table[idx] = static_cast<std::uint8_t>(
          outer.apply(std::span<const Symbol>(mid.data(), mid.size())).id());
      return;
    }
    for (int id = 0; id < Symbol::kCount; ++id) {
      tuple[static_cast<std::size_t>(depth)] = Symbol::from_id(id);
      self(self, depth + 1, idx * Symbol::kCount + static_cast<std::size_t>(id));
    }
  };
  rec(rec, 0, 0);
  return SlidingBlockCode(m, std::move(table));
}

CheckReport verify_star_consistency(int i, int max_len) {
  if (max_len < 1) throw std::invalid_argument("verify_star_consistency: max_len < 1");
  auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.name = "star-consistency g" + std::to_string(i);
  const SlidingBlockCode code = SlidingBlockCode::generator(i);
  for (int len = 0; len <= max_len && report.passed(); ++len) {
    for_each_hash_free(len, [&](const Word& w) {
      if (!report.passed()) return;
      Word expected;
      expected.reserve(w.size() + 2);
      expected.push_back(Symbol::hash());
      Word starred = star_map(i, w);
      expected.insert(expected.end(), starred.begin(), starred.end());
      expected.push_back(Symbol::hash());
      for (int ctx = 0; ctx < Symbol::kCount; ++ctx) {
        Word input;
        input.reserve(w.size() + 3);
        input.push_back(Symbol::hash());
        input.insert(input.end(), w.begin(), w.end());
        input.push_back(Symbol::hash());
        input.push_back(Symbol::from_id(ctx));
        ++report.comparisons;
        if (apply_windowed(code, input) != expected) {
          report.status = CheckReport::Status::Fail;
          report.detail = "mismatch for w = \"" + format_word(w) + "\", context " +
                          format_symbol(Symbol::from_id(ctx));
          return;
        }
      }
    });
  }
  if (report.passed()) {
    report.detail = std::to_string(report.comparisons) + " windowed evaluations";
  }
  report.millis = elapsed_ms(start);
  return report;
}

}  // namespace hashshift
