#include "hashshift/codec.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <random>
#include <sstream>

#include "hashshift/blockcode.hpp"
#include "hashshift/enumerate.hpp"

namespace hashshift {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

void append_bits(BinaryWord& out, std::string_view bits) {
  for (char c : bits) out.push_back(static_cast<std::uint8_t>(c - '0'));
}

void append_pairs(BinaryWord& out, std::string_view pair, int times) {
  for (int k = 0; k < times; ++k) append_bits(out, pair);
}

bool equal_range(const std::uint8_t* a, const std::uint8_t* b, std::size_t len) {
  return std::memcmp(a, b, len) == 0;
}

// True when fragment equals entry[offset, offset+len).
bool matches_at(const BinaryWord& entry, int offset, const std::uint8_t* fragment,
                std::size_t len) {
  if (offset + static_cast<int>(len) > kBlockLen) return false;
  return equal_range(entry.data() + offset, fragment, len);
}

}  // namespace

std::string format_bits(const BinaryWord& b) {
  std::string out(b.size(), '0');
  for (std::size_t k = 0; k < b.size(); ++k) out[k] = static_cast<char>('0' + b[k]);
  return out;
}

BinaryWord parse_bits(std::string_view text) {
  BinaryWord out;
  out.reserve(text.size());
  for (std::size_t k = 0; k < text.size(); ++k) {
    char c = text[k];
    if (c != '0' && c != '1') {
      throw ParseError("bad bit '" + std::string(1, c) + "' at position " + std::to_string(k + 1));
    }
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

RhoTable RhoTable::standard() {
  RhoTable rho;
  for (int i = 1; i <= 6; ++i) {
    BinaryWord plain;
    append_bits(plain, "110100");
    append_pairs(plain, "00", 7 - i);
    append_bits(plain, "11");
    append_pairs(plain, "00", i);
    rho.entries_[static_cast<std::size_t>(Symbol::plain(i).id())] = std::move(plain);

    BinaryWord tilde;
    append_bits(tilde, "11010011");
    append_pairs(tilde, "00", 6 - i);
    append_bits(tilde, "11");
    append_pairs(tilde, "00", i);
    rho.entries_[static_cast<std::size_t>(Symbol::tilde(i).id())] = std::move(tilde);
  }
  BinaryWord hash;
  append_pairs(hash, "11", 5);
  append_bits(hash, "01");
  append_pairs(hash, "11", 5);
  rho.entries_[static_cast<std::size_t>(Symbol::hash().id())] = std::move(hash);
  return rho;
}

std::optional<Symbol> RhoTable::block_symbol(const std::uint8_t* block) const {
  for (int id = 0; id < Symbol::kCount; ++id) {
    if (equal_range(entries_[static_cast<std::size_t>(id)].data(), block, kBlockLen)) {
      return Symbol::from_id(id);
    }
  }
  return std::nullopt;
}

RhoTable RhoTable::with_flipped_bit(Symbol s, int pos) const {
  if (pos < 0 || pos >= kBlockLen) {
    throw std::invalid_argument("with_flipped_bit: position out of 0..21");
  }
  RhoTable mutant = *this;
  mutant.entries_[static_cast<std::size_t>(s.id())][static_cast<std::size_t>(pos)] ^= 1;
  return mutant;
}

BinaryWord encode(const RhoTable& rho, const Word& w) {
  BinaryWord out;
  out.reserve(w.size() * kBlockLen);
  for (Symbol s : w) {
    const BinaryWord& block = rho.entry(s);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

CheckReport check_unique_readability(const RhoTable& rho) {
  auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.name = "unique-readability";
  BinaryWord pair(2 * kBlockLen);
  for (int a1 = 0; a1 < Symbol::kCount && report.passed(); ++a1) {
    for (int a2 = 0; a2 < Symbol::kCount && report.passed(); ++a2) {
      const BinaryWord& first = rho.entry(Symbol::from_id(a1));
      const BinaryWord& second = rho.entry(Symbol::from_id(a2));
      std::copy(first.begin(), first.end(), pair.begin());
      std::copy(second.begin(), second.end(), pair.begin() + kBlockLen);
      for (int a0 = 0; a0 < Symbol::kCount && report.passed(); ++a0) {
        const BinaryWord& target = rho.entry(Symbol::from_id(a0));
        for (int offset = 1; offset < kBlockLen; ++offset) {
          ++report.comparisons;
          if (equal_range(target.data(), pair.data() + offset, kBlockLen)) {
            report.status = CheckReport::Status::Fail;
            report.detail = "rho(" + format_symbol(Symbol::from_id(a0)) + ") = (rho(" +
                            format_symbol(Symbol::from_id(a1)) + ")rho(" +
                            format_symbol(Symbol::from_id(a2)) + "))[" + std::to_string(offset) +
                            "," + std::to_string(offset + kBlockLen) + ")";
            break;
          }
        }
      }
    }
  }
  if (report.passed()) {
    report.detail = std::to_string(report.comparisons) + " comparisons, 0 violations";
  }
  report.millis = elapsed_ms(start);
  return report;
}

CheckReport check_suffix_agreement(const RhoTable& rho) {
  auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.name = "suffix-agreement";
  for (int i = 1; i <= 6 && report.passed(); ++i) {
    const BinaryWord& plain = rho.entry(Symbol::plain(i));
    const BinaryWord& tilde = rho.entry(Symbol::tilde(i));
    for (int m = 8; m < kBlockLen; ++m) {
      ++report.comparisons;
      if (!equal_range(plain.data() + m, tilde.data() + m,
                       static_cast<std::size_t>(kBlockLen - m))) {
        report.status = CheckReport::Status::Fail;
        report.detail = "rho(a" + std::to_string(i) + ") and rho(t" + std::to_string(i) +
                        ") disagree on [" + std::to_string(m) + ",22)";
        break;
      }
    }
    if (!report.passed()) break;
    // Positions 6 and 7 must discriminate the tilde mark.
    for (int pos = 6; pos <= 7; ++pos) {
      ++report.comparisons;
      if (plain[static_cast<std::size_t>(pos)] == tilde[static_cast<std::size_t>(pos)]) {
        report.status = CheckReport::Status::Fail;
        report.detail = "rho(a" + std::to_string(i) + ") and rho(t" + std::to_string(i) +
                        ") agree at position " + std::to_string(pos);
        break;
      }
    }
  }
  if (report.passed()) report.detail = std::to_string(report.comparisons) + " checks";
  report.millis = elapsed_ms(start);
  return report;
}

namespace {

// Parse attempt at one phase; shared by phases() and decode().
std::optional<Decoded> try_parse(const RhoTable& rho, const BinaryWord& y, int phase) {
  const int lead = (kBlockLen - phase) % kBlockLen;
  Decoded result{phase, {}, 0, 0};
  if (static_cast<int>(y.size()) <= lead) {
    if (y.empty()) return result;
    // Fragment inside a single block at offset `phase`.
    for (int id = 0; id < Symbol::kCount; ++id) {
      if (matches_at(rho.entry(Symbol::from_id(id)), phase, y.data(), y.size())) {
        result.leading_partial = static_cast<int>(y.size());
        return result;
      }
    }
    return std::nullopt;
  }
  if (lead > 0) {
    bool ok = false;
    for (int id = 0; id < Symbol::kCount && !ok; ++id) {
      ok = matches_at(rho.entry(Symbol::from_id(id)), phase, y.data(),
                      static_cast<std::size_t>(lead));
    }
    if (!ok) return std::nullopt;
    result.leading_partial = lead;
  }
  std::size_t pos = static_cast<std::size_t>(lead);
  while (pos + kBlockLen <= y.size()) {
    auto symbol = rho.block_symbol(y.data() + pos);
    if (!symbol) return std::nullopt;
    result.word.push_back(*symbol);
    pos += kBlockLen;
  }
  const std::size_t trail = y.size() - pos;
  if (trail > 0) {
    bool ok = false;
    for (int id = 0; id < Symbol::kCount && !ok; ++id) {
      ok = matches_at(rho.entry(Symbol::from_id(id)), 0, y.data() + pos, trail);
    }
    if (!ok) return std::nullopt;
    result.trailing_partial = static_cast<int>(trail);
  }
  return result;
}

}  // namespace

std::vector<int> phases(const RhoTable& rho, const BinaryWord& y) {
  std::vector<int> out;
  for (int n = 0; n < kBlockLen; ++n) {
    if (try_parse(rho, y, n)) out.push_back(n);
  }
  return out;
}

std::vector<Decoded> decode(const RhoTable& rho, const BinaryWord& y) {
  std::vector<Decoded> out;
  for (int n = 0; n < kBlockLen; ++n) {
    if (auto d = try_parse(rho, y, n)) out.push_back(std::move(*d));
  }
  return out;
}

SyncWindowResult sync_window(const RhoTable& rho) {
  // Scans every factor of every length-4 encoding for phase ambiguity.
  // Returns the first ambiguous factor found, or nullopt when length L
  // forces a unique phase everywhere.
  auto find_ambiguous = [&rho](int length) -> std::optional<BinaryWord> {
    std::optional<BinaryWord> found;
    BinaryWord stream;
    for_each_word(4, [&](const Word& u) {
      if (found) return;
      stream = encode(rho, u);
      for (std::size_t p = 0; p + static_cast<std::size_t>(length) <= stream.size(); ++p) {
        BinaryWord window(stream.begin() + static_cast<std::ptrdiff_t>(p),
                          stream.begin() + static_cast<std::ptrdiff_t>(p) + length);
        int consistent = 0;
        for (int n = 0; n < kBlockLen && consistent < 2; ++n) {
          if (try_parse(rho, window, n)) ++consistent;
        }
        if (consistent >= 2) {
          found = std::move(window);
          return;
        }
      }
    });
    return found;
  };

  BinaryWord witness;
  for (int length = 1; length <= 2 * kBlockLen - 1; ++length) {
    auto ambiguous = find_ambiguous(length);
    if (!ambiguous) return SyncWindowResult{length, std::move(witness)};
    witness = std::move(*ambiguous);
  }
  throw std::logic_error("sync_window: no synchronizing length up to 43");
}

std::vector<BinaryWord> phi_language(const RhoTable& rho, const ForbiddenSet& R, int n,
                                     long long budget) {
  if (n < 1) throw std::invalid_argument("phi_language: n < 1");
  const int word_len = (n + kBlockLen - 1) / kBlockLen + 1;
  std::vector<BinaryWord> out;
  for_each_admissible(
      R, word_len,
      [&](const Word& u) {
        BinaryWord stream = encode(rho, u);
        for (std::size_t p = 0; p + static_cast<std::size_t>(n) <= stream.size(); ++p) {
          out.emplace_back(stream.begin() + static_cast<std::ptrdiff_t>(p),
                           stream.begin() + static_cast<std::ptrdiff_t>(p) + n);
        }
      },
      budget);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BinaryWord apply_h(const RhoTable& rho, const BinaryWord& y, int phase, int gen) {
  if (phase < 0 || phase >= kBlockLen) throw std::invalid_argument("apply_h: phase out of 0..21");
  const int lead = (kBlockLen - phase) % kBlockLen;
  if (static_cast<int>(y.size()) < lead ||
      (static_cast<int>(y.size()) - lead) % kBlockLen != 0) {
    throw std::invalid_argument("apply_h: trailing partial block");
  }
  const int blocks = (static_cast<int>(y.size()) - lead) / kBlockLen;
  if (blocks < 2) throw std::invalid_argument("apply_h: fewer than 2 full blocks");

  Word symbols;
  symbols.reserve(static_cast<std::size_t>(blocks));
  for (int k = 0; k < blocks; ++k) {
    auto s = rho.block_symbol(y.data() + lead + static_cast<std::ptrdiff_t>(k) * kBlockLen);
    if (!s) {
      throw DecodeError("apply_h: block " + std::to_string(k) + " is not a code block");
    }
    symbols.push_back(*s);
  }

  const LocalRule& g = generator_rule(gen);
  BinaryWord out;
  out.reserve(y.size() - kBlockLen);
  if (phase >= 8) {
    // Suffix agreement makes the image fragment equal the input one.
    out.insert(out.end(), y.begin(), y.begin() + lead);
  } else if (phase >= 1) {
    Symbol fragment_symbol = Symbol::hash();
    int candidates = 0;
    for (int id = 0; id < Symbol::kCount; ++id) {
      if (matches_at(rho.entry(Symbol::from_id(id)), phase, y.data(),
                     static_cast<std::size_t>(lead))) {
        fragment_symbol = Symbol::from_id(id);
        ++candidates;
      }
    }
    if (candidates != 1) {
      throw DecodeError("apply_h: leading fragment resolves to " + std::to_string(candidates) +
                        " symbols");
    }
    const BinaryWord& image = rho.entry(g(fragment_symbol, symbols.front()));
    out.insert(out.end(), image.begin() + phase, image.end());
  }
  for (int k = 0; k + 1 < blocks; ++k) {
    const BinaryWord& image = rho.entry(g(symbols[static_cast<std::size_t>(k)],
                                          symbols[static_cast<std::size_t>(k) + 1]));
    out.insert(out.end(), image.begin(), image.end());
  }
  return out;
}

CheckReport verify_intertwining(const RhoTable& rho, int gen, int max_len) {
  if (max_len < 2) throw std::invalid_argument("verify_intertwining: max_len < 2");
  auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.name = "intertwining g" + std::to_string(gen);
  const SlidingBlockCode code = SlidingBlockCode::generator(gen);
  for (int len = 2; len <= max_len && report.passed(); ++len) {
    for_each_word(len, [&](const Word& u) {
      if (!report.passed()) return;
      ++report.comparisons;
      BinaryWord lhs = apply_h(rho, encode(rho, u), 0, gen);
      BinaryWord rhs = encode(rho, apply_windowed(code, u));
      if (lhs != rhs) {
        report.status = CheckReport::Status::Fail;
        report.detail = "mismatch for u = \"" + format_word(u) + "\"";
      }
    });
  }
  if (report.passed()) report.detail = std::to_string(report.comparisons) + " words checked";
  report.millis = elapsed_ms(start);
  return report;
}

CheckReport verify_h_inverse(const RhoTable& rho, int gen, int samples, unsigned seed) {
  if (samples < 1) throw std::invalid_argument("verify_h_inverse: samples < 1");
  auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.name = "h-inverse g" + std::to_string(gen);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> length_dist(4, 8);
  std::uniform_int_distribution<int> symbol_dist(0, Symbol::kCount - 1);
  long long skipped = 0;
  for (int trial = 0; trial < samples && report.passed(); ++trial) {
    const int len = length_dist(rng);
    Word u;
    u.reserve(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) u.push_back(Symbol::from_id(symbol_dist(rng)));
    const BinaryWord stream = encode(rho, u);
    for (int phase = 0; phase < kBlockLen && report.passed(); ++phase) {
      const BinaryWord y(stream.begin() + phase, stream.end());
      const int lead = (kBlockLen - phase) % kBlockLen;
      const int blocks = (static_cast<int>(y.size()) - lead) / kBlockLen;
      if (blocks < 3) {
        // Inner application would leave fewer than 2 blocks.
        ++skipped;
        continue;
      }
      ++report.comparisons;
      BinaryWord twice = apply_h(rho, apply_h(rho, y, phase, gen), phase, gen);
      BinaryWord expected(y.begin(), y.end() - 2 * kBlockLen);
      if (twice != expected) {
        report.status = CheckReport::Status::Fail;
        report.detail = "double application differs for u = \"" + format_word(u) +
                        "\", phase " + std::to_string(phase);
      }
    }
  }
  if (report.passed()) {
    report.detail = std::to_string(report.comparisons) + " checks, " + std::to_string(skipped) +
                    " skipped";
  }
  report.millis = elapsed_ms(start);
  return report;
}

CheckReport verify_forbidden_correspondence(const RhoTable& rho, const ForbiddenSet& R,
                                            int max_v_len, long long budget) {
  auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.name = "forbidden-correspondence";
  const BinaryWord& hash_block = rho.entry(Symbol::hash());
  for (int v_len = 1; v_len <= max_v_len && report.passed(); v_len += 2) {
    const int pattern_len = v_len + 2;          // # v #
    const int stream_len = pattern_len + 1;      // one symbol of slack for sliding
    std::vector<bool> present(static_cast<std::size_t>(pow12(v_len)), false);
    for_each_admissible(
        R, stream_len,
        [&](const Word& u) {
          const BinaryWord stream = encode(rho, u);
          const std::size_t window = static_cast<std::size_t>(pattern_len) * kBlockLen;
          for (std::size_t p = 0; p + window <= stream.size(); ++p) {
            // Candidate windows equal encode(# v #) for hash-free v.
            if (std::memcmp(stream.data() + p, hash_block.data(), kBlockLen) != 0) continue;
            if (std::memcmp(stream.data() + p + window - kBlockLen, hash_block.data(),
                            kBlockLen) != 0) {
              continue;
            }
            Word v;
            bool ok = true;
            for (int k = 1; ok && k <= v_len; ++k) {
              auto s = rho.block_symbol(stream.data() + p +
                                        static_cast<std::size_t>(k) * kBlockLen);
              ok = s.has_value() && !s->is_hash();
              if (ok) v.push_back(*s);
            }
            if (ok) present[hash_free_index(v)] = true;
          }
        },
        budget);
    for (std::uint64_t idx = 0; idx < present.size() && report.passed(); ++idx) {
      ++report.comparisons;
      const Word v = hash_free_from_index(idx, v_len);
      const bool forbidden = R.contains(v);
      if (forbidden == present[idx]) {
        report.status = CheckReport::Status::Fail;
        report.detail = "v = \"" + format_word(v) + "\" is " +
                        (forbidden ? "forbidden yet its encoding occurs"
                                   : "admissible yet its encoding never occurs");
      }
    }
  }
  if (report.passed()) report.detail = std::to_string(report.comparisons) + " words checked";
  report.millis = elapsed_ms(start);
  return report;
}

}  // namespace hashshift
