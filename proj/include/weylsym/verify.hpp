#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylsym/lie_structure.hpp"
#include "weylsym/rational.hpp"

namespace weylsym {

/// Malformed configuration or input file (exit status 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { verify_theorem, verify_iota, cancellation, span_dim, bernoulli };
enum class OutputFormat { text, json };

std::string command_name(Command c);

struct RunConfig {
  Command command = Command::verify_theorem;
  std::size_t n = 3;
  std::size_t k = 3;
  unsigned max_order = 2;
  std::optional<unsigned> order;  // truncation D; per-command default when absent
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::optional<std::string> sc_path;
  OutputFormat output = OutputFormat::text;
  Rational sparsity = make_rational(1, 2);
  unsigned jobs = 1;  // worker threads; does not affect the report

  /// Throws InputError when a field is out of range.
  void validate() const;
  /// D actually used by the command.
  unsigned effective_order() const;
};

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> word;  // 0-based letters
  bool passed = true;
  std::size_t residual_terms = 0;
  std::optional<std::string> first_offending;  // "coef*monomial"
  std::vector<std::pair<std::string, std::string>> details;
};

struct VerificationReport {
  RunConfig config;
  std::vector<TrialRecord> trials;
  std::vector<std::pair<unsigned, Rational>> bernoulli_table;
  std::size_t failures = 0;
};

/// Reads the structure-constants JSON format (1-based indices):
///   {"n": 3, "entries": [{"k": 3, "i": 1, "j": 2, "num": 1, "den": 1}],
///    "complete": true}
/// With "complete" (default true) an entry whose mirror (j, i) is absent is
/// completed antisymmetrically. The table is then validated; invalid tables
/// raise InputError listing the violations.
StructureConstants parse_structure_constants(const std::string& text);
StructureConstants load_structure_constants(const std::string& path);

/// Executes the configured suite. Deterministic in the config.
VerificationReport run(const RunConfig& config);

std::string render_text(const VerificationReport& report);
std::string render_json(const VerificationReport& report);
std::string render(const VerificationReport& report);

/// 0 when every trial passed, 1 otherwise.
int exit_status(const VerificationReport& report);

}  // namespace weylsym
