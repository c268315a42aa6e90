#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hashshift/audit.hpp"
#include "hashshift/blockcode.hpp"
#include "hashshift/codec.hpp"
#include "hashshift/group.hpp"
#include "hashshift/subshift.hpp"

namespace {

using namespace hashshift;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::unique_ptr<std::istream> open_input(const std::string& path) {
  if (path.empty() || path == "-") return nullptr;  // nullptr means std::cin
  auto file = std::make_unique<std::ifstream>(path);
  if (!*file) throw std::runtime_error("cannot open '" + path + "'");
  return file;
}

std::istream& resolve(const std::unique_ptr<std::istream>& stream) {
  return stream ? *stream : std::cin;
}

ForbiddenSet load_forbidden(const std::string& path) {
  auto stream = open_input(path);
  return ForbiddenSet::load(resolve(stream));
}

int run_verify(const AuditOptions& options, bool json_output) {
  bool all_passed = true;
  run_audit(options, [&](const CheckReport& report) {
    all_passed = all_passed && report.passed();
    if (json_output) {
      nlohmann::json line = {
          {"name", report.name},
          {"status", report.status == CheckReport::Status::Pass
                         ? "pass"
                         : (report.status == CheckReport::Status::Fail ? "fail" : "skip")},
          {"detail", report.detail},
          {"comparisons", report.comparisons},
          {"ms", report.millis},
      };
      std::cout << line.dump() << '\n';
    } else {
      std::cout << to_line(report) << '\n';
    }
  });
  return all_passed ? 0 : kExitFail;
}

int run_encode(const std::string& input_path) {
  auto stream = open_input(input_path);
  const RhoTable rho = RhoTable::standard();
  std::string line;
  int line_number = 0;
  while (std::getline(resolve(stream), line)) {
    ++line_number;
    Word w;
    try {
      w = parse_word(line);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_number) + ": " + e.what());
    }
    std::cout << format_bits(encode(rho, w)) << '\n';
  }
  return 0;
}

int run_decode(const std::string& input_path) {
  auto stream = open_input(input_path);
  const RhoTable rho = RhoTable::standard();
  std::string line;
  int line_number = 0;
  while (std::getline(resolve(stream), line)) {
    ++line_number;
    BinaryWord y;
    try {
      y = parse_bits(line);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_number) + ": " + e.what());
    }
    for (const Decoded& d : decode(rho, y)) {
      std::cout << d.phase;
      if (!d.word.empty()) std::cout << ' ' << format_word(d.word);
      std::cout << ' ' << d.leading_partial << ' ' << d.trailing_partial << '\n';
    }
  }
  return 0;
}

int run_language(const std::string& forbidden_path, int len, long long budget) {
  const ForbiddenSet R =
      forbidden_path.empty() ? ForbiddenSet() : load_forbidden(forbidden_path);
  for (const Word& w : language(R, len, budget)) std::cout << format_word(w) << '\n';
  return 0;
}

int run_act(const std::string& gamma_text, const std::string& input_path) {
  const GroupElement g = GroupElement::parse(gamma_text);
  auto stream = open_input(input_path);
  const ForbiddenSet R = ForbiddenSet::load(resolve(stream));
  std::cout << act_on_R(g, R).save();
  return 0;
}

int run_witness(const std::string& gamma_text, const std::string& prefix_text, int count) {
  const GroupElement g = GroupElement::parse(gamma_text);
  if (count <= 1) {
    const Word prefix = parse_word(prefix_text);
    const Word v = claim1_witness(g, prefix);
    std::cout << format_word(v) << '\n' << format_word(act(g, v)) << '\n';
  } else {
    for (const Word& v : moved_words(g, count)) {
      std::cout << format_word(v) << '\n' << format_word(act(g, v)) << '\n';
    }
  }
  return 0;
}

int run_sync_window() {
  const SyncWindowResult result = sync_window(RhoTable::standard());
  std::cout << result.window << '\n' << format_bits(result.ambiguous_witness) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-window verification toolkit for marked subshifts and their binary codec"};
  app.require_subcommand(1);

  // verify
  AuditOptions options;
  bool json_output = false;
  int max_len = -1;
  int max_norm = -1;
  std::string forbidden_path;
  std::vector<std::string> flip_tokens;
  auto* verify = app.add_subcommand("verify", "Run the verification audit");
  verify->add_option("--suite", options.suites, "Suites to run (default: all)")
      ->check(CLI::IsMember(audit_suite_names()));
  verify->add_option("--max-len", max_len, "Cap on bounded word-length sweeps");
  verify->add_option("--max-norm", max_norm, "Cap on group normal-form length sweeps");
  verify->add_option("--forbidden", forbidden_path, "Forbidden-set file replacing the suite");
  verify->add_option("--seed", options.seed, "Seed for randomized trials (default 42)");
  verify->add_flag("--json", json_output, "Emit one JSON object per check");
  verify->add_option("--flip-rho", flip_tokens,
                     "Corrupt one code-table bit: symbol token and position (test hook)")
      ->expected(2);

  // encode / decode
  std::string input_path;
  auto* encode_cmd = app.add_subcommand("encode", "Encode word lines to bit lines");
  encode_cmd->add_option("--input", input_path, "Input file (default stdin)");
  auto* decode_cmd = app.add_subcommand("decode", "Decode bit lines at every consistent phase");
  decode_cmd->add_option("--input", input_path, "Input file (default stdin)");

  // language
  int len = 1;
  auto* language_cmd = app.add_subcommand("language", "List admissible words of a given length");
  language_cmd->add_option("--len", len, "Word length")->required();
  language_cmd->add_option("--forbidden", forbidden_path, "Forbidden-set file (default: empty set)");

  // act
  std::string gamma_text;
  auto* act_cmd = app.add_subcommand("act", "Apply a group element to a forbidden set");
  act_cmd->add_option("--gamma", gamma_text, "Group element, e.g. \"1 2 | 4\"")->required();
  act_cmd->add_option("--input", input_path, "Forbidden-set file (default stdin)");

  // witness
  std::string prefix_text;
  int count = 1;
  auto* witness_cmd = app.add_subcommand("witness", "Emit verified moved words for an element");
  witness_cmd->add_option("--gamma", gamma_text, "Group element")->required();
  witness_cmd->add_option("--prefix", prefix_text, "Witness prefix (word tokens)");
  witness_cmd->add_option("--count", count, "Number of moved words");

  auto* sync_cmd = app.add_subcommand("sync-window", "Compute the phase synchronization window");
  (void)sync_cmd;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (max_len >= 0) {
        options.involution_len = max_len;
        options.commutation_len = max_len;
        options.star_len = std::min(max_len, 4);
        options.intertwining_len = std::max(2, std::min(max_len, 5));
        options.roundtrip_len = std::min(max_len, 5);
        options.equivariance_window = std::min(max_len, 6);
        options.correspondence_vlen = std::min(max_len, 3);
      }
      if (max_norm >= 0) {
        options.freeness_norm = max_norm;
        options.axioms_norm = std::min(max_norm, 4);
      }
      if (!forbidden_path.empty()) {
        options.forbidden_suite = std::vector<ForbiddenSet>{load_forbidden(forbidden_path)};
      }
      if (!flip_tokens.empty()) {
        auto symbol = parse_symbol(flip_tokens[0]);
        if (!symbol) throw ParseError("--flip-rho: unknown symbol '" + flip_tokens[0] + "'");
        options.rho_flip = {*symbol, std::stoi(flip_tokens[1])};
      }
      return run_verify(options, json_output);
    }
    if (encode_cmd->parsed()) return run_encode(input_path);
    if (decode_cmd->parsed()) return run_decode(input_path);
    if (language_cmd->parsed()) return run_language(forbidden_path, len, kDefaultBudget);
    if (act_cmd->parsed()) return run_act(gamma_text, input_path);
    if (witness_cmd->parsed()) return run_witness(gamma_text, prefix_text, count);
    if (sync_cmd->parsed()) return run_sync_window();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
