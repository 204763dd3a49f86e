#include "origami/commands.hpp"

#include "origami/error.hpp"
#include "origami/fixtures.hpp"
#include "origami/linalg.hpp"

namespace origami {

ExitCode exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedCycles:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::MalformedWord:
    case ErrorCode::InvalidInput:
    case ErrorCode::ShapeMismatch:
      return ExitCode::ParseFailure;
    case ErrorCode::RequiresTransitive: return ExitCode::NotTransitive;
    case ErrorCode::NotInVeechGroup: return ExitCode::NotVeechFull;
    default: return ExitCode::Internal;
  }
}

namespace {

Json header(const char* command, const Origami* o) {
  Json j{{"command", command}, {"tool_version", kToolVersion}};
  if (o) j["origami"] = describe(*o);
  return j;
}

std::vector<std::size_t> row_lengths(const Origami& o) {
  std::vector<std::size_t> rows;
  for (const auto& c : o.h().cycles(true)) rows.push_back(c.size());
  std::sort(rows.rbegin(), rows.rend());
  return rows;
}

Integer symplectic_residual(const IntMatrix& m, const IntMatrix& g) {
  IntMatrix r = m.transpose() * g * m - g;
  Integer worst = 0;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (abs(r(i, j)) > worst) worst = abs(r(i, j));
  return worst;
}

bool is_unipotent_nontrivial(const IntMatrix& b) {
  const std::size_t n = b.rows();
  IntMatrix nil = b - IntMatrix::identity(n);
  return !nil.is_zero() && power(nil, static_cast<long>(n)).is_zero();
}

// words over "TSts" without cancelling neighbours, shortest first
std::vector<std::string> reduced_words(std::size_t max_length) {
  std::vector<std::string> out, layer{""};
  auto inverse_of = [](char c) { return static_cast<char>(std::islower(c) ? std::toupper(c) : std::tolower(c)); };
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char c : std::string("TSts"))
        if (w.empty() || w.back() != inverse_of(c)) next.push_back(w + c);
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

Json density_json(const std::vector<IntMatrix>& gens, const IntMatrix& form, const CertifyOptions& opt,
                  const std::string& default_pinching, const std::string& default_unipotent, bool defaults_trusted,
                  bool& decided) {
  Json out;
  std::string pin = opt.pinching_word.value_or(default_pinching);
  std::string uni = opt.unipotent_word.value_or(default_unipotent);
  Json transcript = Json::array();
  auto attempt = [&](const std::string& p, const std::string& u) {
    DensityCertificate c = density_certificate(gens, form, p, u);
    transcript.push_back(Json{{"pinching_word", p}, {"unipotent_word", u}, {"verdict", c.verdict}});
    return c;
  };
  std::optional<DensityCertificate> cert;
  if (defaults_trusted || opt.pinching_word || opt.unipotent_word) cert = attempt(pin, uni);
  const bool overridden = opt.pinching_word || opt.unipotent_word;
  if ((!cert || !cert->verdict) && !overridden) {
    auto p = search_pinching_word(gens, opt.pinching_search_length, opt.galois_primes);
    auto u = search_unipotent_word(gens, form);
    out["search"] = Json{{"pinching_word", p ? Json(*p) : Json(nullptr)}, {"unipotent_word", u ? Json(*u) : Json(nullptr)},
                         {"max_length", opt.pinching_search_length}};
    if (p && u) cert = attempt(*p, *u);
  }
  if (cert) {
    out["certificate"] = encode(*cert);
    out["verdict"] = cert->verdict;
    decided = decided && cert->verdict;
  } else {
    out["certificate"] = nullptr;
    out["verdict"] = false;
    decided = false;
  }
  out["transcript"] = transcript;
  out["status"] = cert && cert->verdict ? "Certified" : "Undecided";
  return out;
}

Json congruence_json(const std::vector<IntMatrix>& gens, const IntMatrix& form, bool& decided) {
  if (form.rows() == 0 || form.rows() > 8)
    return Json{{"status", "NotApplicable"}, {"reason", "mod-2 closure supports forms of size 2..8"}};
  try {
    CongruenceImageReport r = congruence_image_mod2(gens, form);
    Json j = encode(r);
    j["status"] = "Computed";
    return j;
  } catch (const Error& e) {
    decided = false;
    return Json{{"status", "Undecided"}, {"error", std::string(to_string(e.code()))}, {"reason", e.what()}};
  }
}

}  // namespace

Json describe(const Origami& o) {
  return Json{{"name", o.name()}, {"n", o.size()}, {"h", format_cycles(o.h())}, {"v", format_cycles(o.v())}};
}

std::optional<std::string> search_pinching_word(const std::vector<IntMatrix>& generators, std::size_t max_length,
                                                std::size_t galois_primes) {
  if (generators.empty() || generators.front().rows() == 0) return std::nullopt;
  std::vector<std::string> candidates = reduced_words(max_length);
  for (int k = 2; k <= 30; ++k) candidates.push_back("STST^" + std::to_string(k));
  for (const auto& w : candidates) {
    IntMatrix a = evaluate_word(w, "TS", generators);
    IntPolynomial f = char_poly(a);
    // cheap filters before the Galois scan
    if (!is_reciprocal(f) || count_real_roots(f).real_roots != f.degree()) continue;
    if (!is_irreducible_over_Z(f).irreducible) continue;
    if (galois_pinching(a, galois_primes).verdict) return w;
  }
  return std::nullopt;
}

std::optional<std::string> search_unipotent_word(const std::vector<IntMatrix>& generators, const IntMatrix& form) {
  if (generators.empty() || generators.front().rows() == 0) return std::nullopt;
  const std::size_t n = form.rows();
  const std::string letters = "TS";
  for (std::size_t g = 0; g < generators.size() && g < letters.size(); ++g)
    for (long k = 1; k <= 60; ++k) {
      IntMatrix b = power(generators[g], k);
      if (!is_unipotent_nontrivial(b)) continue;
      IntMatrix nil = b - IntMatrix::identity(n);
      bool lagrangian = 2 * rank(nil) == n && (nil.transpose() * form * nil).is_zero();
      if (!lagrangian) return std::string(1, letters[g]) + (k > 1 ? "^" + std::to_string(k) : "");
    }
  return std::nullopt;
}

CommandResult cmd_analyze(const Origami& o, const AnalyzeOptions& opt) {
  CommandResult res;
  Json& j = res.output = header("analyze", &o);
  Stratum s = stratum(o);
  j["stratum"] = s.zero_orders;
  j["stratum_label"] = s.label();
  j["genus"] = s.genus;
  j["commutator"] = format_cycles(commutator(o.h(), o.v()));
  bool full = is_veech_full(o);
  j["veech_full"] = full;
  if (full) {
    Origami t = apply_veech_generator(VeechGenerator::T, o), sg = apply_veech_generator(VeechGenerator::S, o);
    j["conjugators"] = Json{{"T", format_cycles(*simultaneous_conjugator(t.h(), t.v(), o.h(), o.v()))},
                            {"S", format_cycles(*simultaneous_conjugator(sg.h(), sg.v(), o.h(), o.v()))}};
  }
  OrbitGraph orbit = sl2z_orbit(o, opt.orbit_limit);
  j["orbit_size"] = orbit.nodes.size();
  j["orbit_truncated"] = orbit.truncated;
  j["reduced"] = is_reduced(o);
  j["automorphisms"] = automorphism_count(o);
  CylinderDecomposition hor = horizontal_cylinders(o);
  Json cyl = Json::array();
  for (const auto& c : hor.cylinders) cyl.push_back(Json{{"circumference", c.circumference}, {"height", c.height}});
  j["horizontal_cylinders"] = cyl;
  j["horizontal_circumferences"] = hor.circumferences();
  j["horizontal_rows"] = row_lengths(o);
  Json dirs = Json::array();
  for (const auto& d : opt.directions) {
    CylinderDecomposition cd = cylinders_in_direction(o, d[0], d[1]);
    Json x = encode(cd);
    x["homological_dimension"] = homological_dimension(o, cd);
    dirs.push_back(x);
  }
  j["directions"] = dirs;
  return res;
}

CommandResult cmd_monodromy(const Origami& o) {
  require(is_veech_full(o), ErrorCode::NotInVeechGroup, "affine group not identified with SL(2,Z)");
  CommandResult res;
  Json& j = res.output = header("monodromy", &o);
  MonodromyPair mp = induced_matrices(o);
  const std::size_t dim = mp.restricted_T.rows();
  j["genus"] = mp.genus();
  j["homology_rank"] = mp.basis.rank();
  j["zero_holonomy_rank"] = dim;
  j["gram"] = encode(mp.basis.gram);
  j["gram_determinant"] = encode(determinant(mp.basis.gram));
  j["full"] = Json{{"T", encode(mp.full_T)},
                   {"S", encode(mp.full_S)},
                   {"charpoly_T", encode(char_poly(mp.full_T))},
                   {"charpoly_S", encode(char_poly(mp.full_S))},
                   {"symplectic_residual_T", encode(symplectic_residual(mp.full_T, mp.basis.gram))},
                   {"symplectic_residual_S", encode(symplectic_residual(mp.full_S, mp.basis.gram))}};
  j["tautological"] = Json{{"T", encode(mp.tautological_T)}, {"S", encode(mp.tautological_S)}};
  j["zero_holonomy_basis"] = encode(mp.split.zero_holonomy);
  j["tautological_basis"] = encode(mp.split.tautological);
  if (dim == 0) {
    j["restricted"] = nullptr;
    j["note"] = "zero-holonomy subspace is trivial; the restricted monodromy is empty";
    return res;
  }
  IntPolynomial cT = char_poly(mp.restricted_T), cS = char_poly(mp.restricted_S);
  SymplecticNormalForm nf = symplectic_normalize(mp.restricted_gram());
  Json div = Json::array();
  for (const auto& d : nf.divisors) div.push_back(encode(d));
  IntMatrix t6 = power(mp.restricted_T, 6) - IntMatrix::identity(dim);
  j["restricted"] = Json{{"T", encode(mp.restricted_T)},
                         {"S", encode(mp.restricted_S)},
                         {"gram", encode(mp.restricted_gram())},
                         {"gram_determinant", encode(determinant(mp.restricted_gram()))},
                         {"gram_divisors", div},
                         {"charpoly_T", encode(cT)},
                         {"charpoly_S", encode(cS)},
                         {"charpoly_T_text", cT.to_string()},
                         {"charpoly_S_text", cS.to_string()},
                         {"symplectic_residual_T", encode(symplectic_residual(mp.restricted_T, mp.restricted_gram()))},
                         {"symplectic_residual_S", encode(symplectic_residual(mp.restricted_S, mp.restricted_gram()))},
                         {"rank_T6_minus_I", rank(t6)},
                         {"TsT_fourth_power_is_identity",
                          power(monodromy_of_word(mp, "TsT"), 4) == IntMatrix::identity(dim)}};
  if (is_flagship(o)) {
    const ReferenceFixtures& f = reference_fixtures();
    j["fixture_match"] = Json{{"charpoly_T", cT == char_poly(f.alpha_T)}, {"charpoly_S", cS == char_poly(f.alpha_S)}};
  } else {
    j["fixture_match"] = nullptr;
  }
  return res;
}

CommandResult cmd_certify(const Origami& o, const CertifyOptions& opt) {
  require(is_veech_full(o), ErrorCode::NotInVeechGroup, "affine group not identified with SL(2,Z)");
  CommandResult res;
  Json& j = res.output = header("certify", &o);
  MonodromyPair mp = induced_matrices(o);
  const bool flagship = is_flagship(o);
  j["flagship"] = flagship;
  bool decided = true;
  std::vector<IntMatrix> gens{mp.restricted_T, mp.restricted_S};
  const std::size_t dim = mp.restricted_T.rows();
  if (dim == 0) {
    j["note"] = "zero-holonomy subspace is trivial; nothing to certify";
    return res;
  }
  if (opt.density) {
    std::string pin = flagship ? reference_fixtures().pinching_word : "STST^20";
    std::string uni = flagship ? reference_fixtures().unipotent_word : "T^6";
    j["density"] = density_json(gens, mp.restricted_gram(), opt, pin, uni, flagship, decided);
  }
  if (opt.arithmeticity) {
    Json a;
    std::string word = opt.transvection_word.value_or(flagship ? reference_fixtures().transvection_word : "ABabC^3a");
    try {
      require(opt.directions.size() == 3, ErrorCode::InvalidInput, "arithmeticity needs exactly three directions");
      std::array<Direction, 3> dirs{opt.directions[0], opt.directions[1], opt.directions[2]};
      ArithmeticityCertificate c = arithmeticity_certificate(o, mp, dirs, word, opt.search_depth);
      a = encode(c);
      decided = decided && c.verdict;
      if (flagship) {
        // the reference w vectors in epsilon coordinates, with the twist coefficients computed above
        const ReferenceFixtures& f = reference_fixtures();
        std::array<Rational, 3> coef{c.coefficients[0], c.coefficients[1], c.coefficients[2]};
        ArithmeticityCertificate fc = arithmeticity_certificate(f.w, coef, f.omega0, word, opt.search_depth);
        Json fj = encode(fc);
        Json cmp = Json::array();
        for (int k = 0; k < 3; ++k) cmp.push_back(fc.transvections[k] == to_rational(f.transvections[k]));
        fj["matches_reference_transvections"] = cmp;
        a["fixture_route"] = fj;
      }
    } catch (const Error& e) {
      a = Json{{"status", "Undecided"}, {"verdict", false}, {"error", std::string(to_string(e.code()))}, {"reason", e.what()}};
      decided = false;
    }
    j["arithmeticity"] = a;
  }
  if (opt.congruence_mod2) j["congruence_mod2"] = congruence_json(gens, mp.restricted_gram(), decided);
  j["all_verdicts_true"] = decided;
  res.exit_code = decided ? ExitCode::Ok : ExitCode::Undecided;
  return res;
}

CommandResult cmd_certify_generators(const IntMatrix& t, const IntMatrix& s, const IntMatrix& form,
                                     const CertifyOptions& opt) {
  require(t.is_square() && s.rows() == t.rows() && s.cols() == t.cols() && form.rows() == t.rows() &&
              form.cols() == t.cols(),
          ErrorCode::ShapeMismatch, "generators and form must be square of equal size");
  require(is_skew_symmetric(form) && determinant(form) != 0, ErrorCode::DegenerateForm,
          "form must be skew-symmetric and nondegenerate");
  require(preserves_form(t, form) && preserves_form(s, form), ErrorCode::FormViolation,
          "generators do not preserve the form");
  CommandResult res;
  Json& j = res.output = header("certify", nullptr);
  j["generators"] = Json{{"T", encode(t)}, {"S", encode(s)}, {"form", encode(form)}};
  bool decided = true;
  std::vector<IntMatrix> gens{t, s};
  if (opt.density) j["density"] = density_json(gens, form, opt, "STST^20", "T^6", true, decided);
  if (opt.arithmeticity)
    j["arithmeticity"] = Json{{"status", "NotApplicable"}, {"reason", "needs cylinder data of a surface"}};
  if (opt.congruence_mod2) j["congruence_mod2"] = congruence_json(gens, form, decided);
  j["all_verdicts_true"] = decided;
  res.exit_code = decided ? ExitCode::Ok : ExitCode::Undecided;
  return res;
}

CommandResult cmd_lyapunov(const Origami& o, const LyapunovCommandOptions& opt) {
  require(is_veech_full(o), ErrorCode::NotInVeechGroup, "affine group not identified with SL(2,Z)");
  CommandResult res;
  Json& j = res.output = header("lyapunov", &o);
  MonodromyPair mp = induced_matrices(o);
  IntMatrix t = mp.restricted_T, s = mp.restricted_S;
  if (opt.conjugate_by) {
    IntMatrix p = monodromy_of_word(mp, *opt.conjugate_by);
    IntMatrix pinv = inverse_unimodular(p);
    t = p * t * pinv;
    s = p * s * pinv;
    j["conjugated_by"] = *opt.conjugate_by;
  }
  LyapunovEstimate e = estimate_exponents(t, s, mp.tautological_T, mp.tautological_S, opt.estimate);
  j["estimate"] = encode(e);
  if (is_flagship(o)) j["reference"] = reference_fixtures().lyapunov;
  return res;
}

CommandResult cmd_census(std::size_t max_squares, unsigned threads) {
  CommandResult res;
  res.output = header("census", nullptr);
  res.output["census"] = encode(veech_full_census(max_squares, threads));
  return res;
}

}  // namespace origami
