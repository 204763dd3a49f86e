#pragma once

// The five origami-kz commands as library functions returning JSON, shared by
// the command line tool and the Python module.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "origami/io.hpp"

namespace origami {

inline constexpr const char* kToolVersion = "0.3.0";

/// 0 ok, 1 internal error, 2 unparsable input, 3 disconnected surface,
/// 4 Veech group not SL(2,Z), 5 undecided certificate, 6 census too large.
enum class ExitCode : int {
  Ok = 0,
  Internal = 1,
  ParseFailure = 2,
  NotTransitive = 3,
  NotVeechFull = 4,
  Undecided = 5,
  CensusLimit = 6,
};

ExitCode exit_code_for(ErrorCode code);

struct CommandResult {
  Json output;
  ExitCode exit_code = ExitCode::Ok;
};

using Direction = std::array<long, 2>;

struct AnalyzeOptions {
  std::vector<Direction> directions{{1, 0}, {0, 1}, {1, 2}};
  std::size_t orbit_limit = 100000;
};

struct CertifyOptions {
  bool density = true;
  bool arithmeticity = true;
  bool congruence_mod2 = true;
  std::optional<std::string> pinching_word;
  std::optional<std::string> unipotent_word;
  std::optional<std::string> transvection_word;
  std::vector<Direction> directions{{1, 0}, {0, 1}, {1, 2}};
  std::size_t search_depth = 12;
  std::size_t galois_primes = 100;
  std::size_t pinching_search_length = 6;
};

struct LyapunovCommandOptions {
  LyapunovOptions estimate;
  /// conjugate both generators by this restricted word before estimating
  std::optional<std::string> conjugate_by;
};

Json describe(const Origami& o);

CommandResult cmd_analyze(const Origami& o, const AnalyzeOptions& options = {});
/// Throws NotInVeechGroup unless the Veech group is SL(2,Z).
CommandResult cmd_monodromy(const Origami& o);
CommandResult cmd_certify(const Origami& o, const CertifyOptions& options = {});
/// Density and mod-2 certificates for explicit generators over the alphabet "TS".
CommandResult cmd_certify_generators(const IntMatrix& t, const IntMatrix& s, const IntMatrix& form,
                                     const CertifyOptions& options = {});
CommandResult cmd_lyapunov(const Origami& o, const LyapunovCommandOptions& options = {});
/// Throws DomainError above kCensusMaxSquares.
CommandResult cmd_census(std::size_t max_squares, unsigned threads = 0);

/// Generic fallbacks used when no word is supplied.
std::optional<std::string> search_pinching_word(const std::vector<IntMatrix>& generators, std::size_t max_length,
                                                std::size_t galois_primes);
std::optional<std::string> search_unipotent_word(const std::vector<IntMatrix>& generators, const IntMatrix& form);

}  // namespace origami
