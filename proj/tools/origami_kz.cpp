// origami-kz: invariants, monodromy and certificates for square-tiled surfaces.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cache.hpp"
#include "origami/commands.hpp"

using namespace origami;
using origami::cli::ResultCache;
using origami::cli::RunRecord;

namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success (all certificate verdicts true)\n"
    "  1  internal error\n"
    "  2  input could not be parsed (file, JSON, cycle notation, word)\n"
    "  3  h and v do not generate a transitive group\n"
    "  4  affine group not identified with SL(2,Z) (Veech group is not all of SL(2,Z))\n"
    "  5  a certificate is Undecided / NoWitnessFound\n"
    "  6  census request above the hard cap of 9 squares\n";

struct Global {
  std::string cache_dir;
  bool no_cache = false;
  std::string out;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file '" + path + "'");
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ParseError("input file '" + path + "' is not valid JSON");
  return j;
}

Direction parse_direction(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw ParseError("direction must look like p,q: '" + s + "'");
  try {
    return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ParseError("direction must look like p,q: '" + s + "'");
  }
}

std::string now_utc() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::filesystem::path cache_directory(const Global& g) {
  if (!g.cache_dir.empty()) return g.cache_dir;
  if (const char* env = std::getenv("ORIGAMI_KZ_CACHE"); env && *env) return env;
  return ".origami-kz-cache";
}

int emit(const Global& g, const Json& result) {
  std::string text = result.dump(2) + "\n";
  if (!g.out.empty()) {
    std::filesystem::path out(g.out);
    auto tmp = out;
    tmp += ".tmp";
    {
      std::ofstream f(tmp);
      f << text;
      if (!f) throw ParseError("cannot write '" + g.out + "'");
    }
    std::filesystem::rename(tmp, out);
  } else {
    std::cout << text;
  }
  return 0;
}

// Runs `compute` through the cache and prints the result.
template <class F>
int run_cached(const Global& g, const std::string& command, const Json& input, const Json& params, F compute) {
  RunRecord rec;
  rec.input_hash = cli::sha256_hex(input.dump());
  rec.command = command;
  rec.parameters = params;
  rec.tool_version = kToolVersion;
  std::optional<ResultCache> cache;
  if (!g.no_cache) cache.emplace(cache_directory(g));
  if (cache)
    if (auto hit = cache->lookup(rec)) {
      emit(g, hit->result);
      return hit->exit_code;
    }
  CommandResult r = compute();
  rec.result = r.output;
  rec.exit_code = static_cast<int>(r.exit_code);
  rec.timestamp = now_utc();
  if (cache) {
    try {
      cache->store(rec);
    } catch (const std::exception& e) {
      std::cerr << "warning: cache write failed: " << e.what() << "\n";
    }
  }
  emit(g, r.output);
  return rec.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"origami-kz: Kontsevich-Zorich monodromy of square-tiled surfaces"};
  app.footer(kExitCodes);
  app.require_subcommand(1);
  Global g;
  app.add_option("--cache-dir", g.cache_dir, "cache directory (default $ORIGAMI_KZ_CACHE or ./.origami-kz-cache)");
  app.add_flag("--no-cache", g.no_cache, "neither read nor write the result cache");
  app.add_option("--out", g.out, "write the JSON result to this path instead of stdout");
  app.set_version_flag("--version", kToolVersion);

  std::string input_path;
  std::vector<std::string> directions;

  auto* analyze = app.add_subcommand("analyze", "stratum, Veech group, cylinders, homological dimensions");
  analyze->add_option("input", input_path, "origami JSON file {name, h, v, n}")->required();
  analyze->add_option("--direction", directions, "direction p,q (repeatable; default 1,0 0,1 1,2)");

  auto* monodromy = app.add_subcommand("monodromy", "action of T and S on homology");
  monodromy->add_option("input", input_path, "origami JSON file")->required();

  CertifyOptions copt;
  bool want_density = false, want_arith = false, want_mod2 = false;
  std::string pin, uni, trans;
  auto* certify = app.add_subcommand("certify", "Zariski density, arithmeticity and mod-2 certificates");
  certify->add_option("input", input_path, "origami JSON file, or {generators: {T, S}, form} for explicit matrices")
      ->required();
  certify->add_flag("--density", want_density, "run the Galois-pinching density certificate");
  certify->add_flag("--arithmeticity", want_arith, "run the three-transvection arithmeticity certificate");
  certify->add_flag("--congruence-mod2", want_mod2, "compute the mod-2 image");
  certify->add_option("--pinching-word", pin, "word in T,S (lowercase = inverse) for the pinching matrix");
  certify->add_option("--unipotent-word", uni, "word in T,S for the unipotent matrix");
  certify->add_option("--transvection-word", trans, "word in A,B,C for the arithmeticity witness");
  certify->add_option("--direction", directions, "three directions p,q for the transvections");
  certify->add_option("--search-depth", copt.search_depth, "bounded witness search depth")->check(CLI::PositiveNumber);
  certify->add_option("--galois-primes", copt.galois_primes, "prime budget for the Galois order")
      ->check(CLI::PositiveNumber);

  LyapunovCommandOptions lopt;
  std::string conj;
  auto* lyap = app.add_subcommand("lyapunov", "Monte Carlo Lyapunov exponents of the zero-holonomy cocycle");
  lyap->add_option("input", input_path, "origami JSON file")->required();
  lyap->add_option("--iters", lopt.estimate.iterations, "continued-fraction digits per trial (>= 1000)");
  lyap->add_option("--trials", lopt.estimate.trials, "independent trials");
  lyap->add_option("--seed", lopt.estimate.seed, "master seed");
  lyap->add_option("--digit-cap", lopt.estimate.digit_cap, "cap on continued-fraction digits");
  lyap->add_option("--threads", lopt.estimate.threads, "worker threads (0 = all cores)");
  lyap->add_option("--conjugate-by", conj, "conjugate the generators by this word in T,S first");

  std::size_t max_squares = 0;
  unsigned census_threads = 0;
  auto* census = app.add_subcommand("census", "reduced origamis with Veech group SL(2,Z), up to 9 squares");
  census->add_option("--max-squares", max_squares, "largest square count (<= 9)")->required();
  census->add_option("--threads", census_threads, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::ParseFailure);
  }

  try {
    std::vector<Direction> dirs;
    for (const auto& d : directions) dirs.push_back(parse_direction(d));

    if (census->parsed()) {
      if (max_squares > kCensusMaxSquares) {
        std::cerr << "error: census is capped at " << kCensusMaxSquares << " squares (requested " << max_squares
                  << ")\n";
        return static_cast<int>(ExitCode::CensusLimit);
      }
      if (max_squares == 0) throw ParseError("--max-squares must be positive");
      return run_cached(g, "census", Json(nullptr), Json{{"max_squares", max_squares}},
                        [&] { return cmd_census(max_squares, census_threads); });
    }

    Json input = read_json_file(input_path);

    if (certify->parsed() && input.is_object() && input.contains("generators")) {
      if (want_density || want_arith || want_mod2) {
        copt.density = want_density;
        copt.arithmeticity = want_arith;
        copt.congruence_mod2 = want_mod2;
      }
      if (!pin.empty()) copt.pinching_word = pin;
      if (!uni.empty()) copt.unipotent_word = uni;
      IntMatrix t = decode_int_matrix(input.at("generators").at("T"));
      IntMatrix s = decode_int_matrix(input.at("generators").at("S"));
      IntMatrix form = decode_int_matrix(input.at("form"));
      Json params{{"density", copt.density},          {"arithmeticity", copt.arithmeticity},
                  {"congruence_mod2", copt.congruence_mod2}, {"pinching_word", pin},
                  {"unipotent_word", uni},            {"galois_primes", copt.galois_primes}};
      return run_cached(g, "certify", input, params, [&] { return cmd_certify_generators(t, s, form, copt); });
    }

    OrigamiInput oin = parse_origami_input(input);
    Origami o = to_origami(oin);
    Json canonical_input = encode(oin);

    if (analyze->parsed()) {
      AnalyzeOptions aopt;
      if (!dirs.empty()) aopt.directions = dirs;
      Json params{{"directions", aopt.directions}};
      return run_cached(g, "analyze", canonical_input, params, [&] { return cmd_analyze(o, aopt); });
    }
    if (monodromy->parsed())
      return run_cached(g, "monodromy", canonical_input, Json::object(), [&] { return cmd_monodromy(o); });
    if (certify->parsed()) {
      if (want_density || want_arith || want_mod2) {
        copt.density = want_density;
        copt.arithmeticity = want_arith;
        copt.congruence_mod2 = want_mod2;
      }
      if (!pin.empty()) copt.pinching_word = pin;
      if (!uni.empty()) copt.unipotent_word = uni;
      if (!trans.empty()) copt.transvection_word = trans;
      if (!dirs.empty()) copt.directions = dirs;
      Json params{{"density", copt.density},
                  {"arithmeticity", copt.arithmeticity},
                  {"congruence_mod2", copt.congruence_mod2},
                  {"pinching_word", pin},
                  {"unipotent_word", uni},
                  {"transvection_word", trans},
                  {"directions", copt.directions},
                  {"search_depth", copt.search_depth},
                  {"galois_primes", copt.galois_primes}};
      return run_cached(g, "certify", canonical_input, params, [&] { return cmd_certify(o, copt); });
    }
    if (lyap->parsed()) {
      if (!conj.empty()) lopt.conjugate_by = conj;
      Json params{{"iterations", lopt.estimate.iterations}, {"trials", lopt.estimate.trials},
                  {"seed", lopt.estimate.seed},             {"digit_cap", lopt.estimate.digit_cap},
                  {"conjugate_by", conj}};
      return run_cached(g, "lyapunov", canonical_input, params, [&] { return cmd_lyapunov(o, lopt); });
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::ParseFailure);
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return static_cast<int>(ExitCode::ParseFailure);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(exit_code_for(e.code()));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::Internal);
  }
  return static_cast<int>(ExitCode::Internal);
}
