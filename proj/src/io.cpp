#include "origami/io.hpp"

#include <limits>

#include "origami/error.hpp"

namespace origami {

namespace {

template <class V>
Json encode_vector(const V& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

template <class M>
Json encode_matrix(const M& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(encode_vector(m.row(i)));
  return a;
}

Json encode_directions(const std::array<long, 2>& d) { return Json::array({d[0], d[1]}); }

}  // namespace

Json encode(const Integer& x) {
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return x.get_str();
}

Json encode(const Rational& value) {
  Rational x = value;
  x.canonicalize();
  if (x.get_den() == 1) return encode(Integer(x.get_num()));
  return x.get_str();
}

Json encode(const IntVector& v) { return encode_vector(v); }
Json encode(const RatVector& v) { return encode_vector(v); }
Json encode(const IntMatrix& m) { return encode_matrix(m); }
Json encode(const RatMatrix& m) { return encode_matrix(m); }
Json encode(const IntPolynomial& f) { return encode_vector(f.coefficients()); }

Integer decode_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  fail(ErrorCode::InvalidInput, "expected an integer, got " + j.dump());
}

IntVector decode_int_vector(const Json& j) {
  require(j.is_array(), ErrorCode::InvalidInput, "expected an integer array");
  IntVector v;
  for (const auto& x : j) v.push_back(decode_integer(x));
  return v;
}

IntMatrix decode_int_matrix(const Json& j) {
  require(j.is_array(), ErrorCode::InvalidInput, "expected a matrix (array of rows)");
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(decode_int_vector(r));
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorCode::ShapeMismatch, "ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rows[i][k];
  }
  return m;
}

IntPolynomial decode_polynomial(const Json& j) { return IntPolynomial(decode_int_vector(j)); }

OrigamiInput parse_origami_input(const Json& j) {
  require(j.is_object(), ErrorCode::InvalidInput, "origami input must be a JSON object");
  for (const char* key : {"h", "v"})
    require(j.contains(key) && j[key].is_string(), ErrorCode::InvalidInput,
            std::string("origami input needs a string field '") + key + "'");
  OrigamiInput in;
  in.name = j.value("name", std::string{});
  in.h = j["h"].get<std::string>();
  in.v = j["v"].get<std::string>();
  if (j.contains("n")) {
    require(j["n"].is_number_unsigned() && j["n"].get<std::size_t>() > 0, ErrorCode::InvalidInput,
            "'n' must be a positive integer");
    in.n = j["n"].get<std::size_t>();
  }
  return in;
}

Json encode(const OrigamiInput& in) {
  Json j{{"name", in.name}, {"h", in.h}, {"v", in.v}};
  if (in.n) j["n"] = *in.n;
  return j;
}

Origami to_origami(const OrigamiInput& in) {
  std::optional<std::size_t> degree = in.n;
  if (!degree) {
    // without n, the degree is the largest point mentioned in either string
    Permutation h = parse_cycles(in.h), v = parse_cycles(in.v);
    degree = std::max<std::size_t>({h.degree(), v.degree(), 1});
  }
  return Origami(parse_cycles(in.h, degree), parse_cycles(in.v, degree), in.name);
}

Json encode(const Stratum& s) {
  return Json{{"zero_orders", s.zero_orders}, {"label", s.label()}, {"genus", s.genus}};
}

Json encode(const CylinderDecomposition& d, bool with_waists) {
  Json cyl = Json::array();
  for (const auto& c : d.cylinders) {
    Json x{{"circumference", c.circumference}, {"height", c.height}, {"bottom_row", c.bottom_row}};
    if (with_waists) x["waist"] = encode(c.waist);
    cyl.push_back(x);
  }
  return Json{{"direction", encode_directions(d.direction)},
              {"cylinders", cyl},
              {"circumferences", d.circumferences()},
              {"area", d.area()}};
}

Json encode(const SturmReport& r) {
  Json chain = Json::array();
  for (const auto& f : r.chain) chain.push_back(encode(f));
  return Json{{"real_roots", r.real_roots},
              {"squarefree", r.squarefree},
              {"sign_changes_at_minus_infinity", r.sign_changes_at_minus_infinity},
              {"sign_changes_at_plus_infinity", r.sign_changes_at_plus_infinity},
              {"chain", chain}};
}

std::string format_cycle_type(const CycleType& t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + "]";
}

Json encode(const IrreducibilityReport& r) {
  Json patterns = Json::array();
  for (const auto& [p, degs] : r.patterns) patterns.push_back(Json{{"prime", p}, {"degrees", degs}});
  Json j{{"irreducible", r.irreducible}, {"method", r.method}, {"patterns", patterns}};
  j["certifying_prime"] = r.certifying_prime ? Json(*r.certifying_prime) : Json(nullptr);
  j["factor"] = r.factor ? encode(*r.factor) : Json(nullptr);
  return j;
}

Json encode(const GaloisReport& r) {
  Json witnesses = Json::array();
  for (const auto& [p, t] : r.witnesses) witnesses.push_back(Json{{"prime", p}, {"cycle_type", t}});
  Json observed = Json::array();
  for (const auto& t : r.observed_types) observed.push_back(t);
  return Json{{"order", r.order},
              {"status", r.status},
              {"maximal_order", r.maximal_order},
              {"candidate_orders", r.candidate_orders},
              {"primes_used", r.primes_used},
              {"observed_cycle_types", observed},
              {"witnesses", witnesses}};
}

Json encode(const GaloisPinchingReport& r) {
  Json j{{"charpoly", encode(r.charpoly)},
         {"charpoly_text", r.charpoly.to_string()},
         {"reciprocal", r.reciprocal},
         {"irreducible", encode(r.irreducibility)},
         {"real_roots", encode(r.sturm)},
         {"verdict", r.verdict}};
  j["galois"] = r.galois ? encode(*r.galois) : Json(nullptr);
  j["galois_order"] = r.galois ? Json(r.galois->order) : Json(nullptr);
  return j;
}

Json encode(const DensityCertificate& c) {
  return Json{{"pinching_word", c.pinching_word},
              {"pinching_matrix", encode(c.pinching_matrix)},
              {"pinching_report", encode(c.pinching_report)},
              {"unipotent_word", c.unipotent_word},
              {"unipotent_matrix", encode(c.unipotent_matrix)},
              {"unipotent_rank", c.unipotent_rank},
              {"unipotent", c.unipotent},
              {"lagrangian_image", c.lagrangian_image},
              {"verdict", c.verdict}};
}

Json encode(const DirectionData& d) {
  Json classes = Json::array();
  for (int k = 0; k < 2; ++k)
    classes.push_back(Json{{"cycle", encode(d.class_cycles[k])},
                           {"twists", encode(d.class_twists[k])},
                           {"height", encode(d.class_heights[k])}});
  Json mult = Json::array();
  for (const auto& m : d.multiplicities) mult.push_back(encode(m));
  return Json{{"direction", encode_directions(d.direction)},
              {"circumferences", d.circumferences},
              {"heights", d.heights},
              {"cylinder_class", d.cylinder_class},
              {"multiplicities", mult},
              {"classes", classes},
              {"w", encode(d.w)},
              {"coefficient", encode(d.coefficient)}};
}

Json encode(const ArithmeticityCertificate& c) {
  Json dirs = Json::array();
  for (const auto& d : c.directions) dirs.push_back(encode(d));
  Json w = Json::array(), coef = Json::array(), pairings = Json::array(), trans = Json::array();
  for (int k = 0; k < 3; ++k) {
    w.push_back(encode(c.w[k]));
    coef.push_back(encode(c.coefficients[k]));
    Json row = Json::array();
    for (int l = 0; l < 3; ++l) row.push_back(encode(c.w_pairings[k][l]));
    pairings.push_back(row);
    trans.push_back(encode(c.transvections[k]));
  }
  Json j{{"directions", dirs},
         {"w", w},
         {"coefficients", coef},
         {"w_pairings", pairings},
         {"e", encode(c.e)},
         {"transvections", trans},
         {"reference_word", c.reference_word},
         {"reference_word_matrix", encode(c.reference_word_matrix)},
         {"reference_word_is_witness", c.reference_word_is_witness},
         {"witness_word", c.witness_word},
         {"witness_matrix", encode(c.witness_matrix)},
         {"search_used", c.search_used},
         {"search_depth", c.search_depth},
         {"search_nodes", c.search_nodes},
         {"verdict", c.verdict},
         {"status", c.status}};
  if (c.e_in_w) {
    Json e = Json::array();
    for (const auto& x : *c.e_in_w) e.push_back(encode(x));
    j["e_in_w"] = e;
  } else {
    j["e_in_w"] = nullptr;
  }
  return j;
}

Json encode(const CongruenceImageReport& r) {
  Json div = Json::array();
  for (const auto& d : r.divisors) div.push_back(encode(d));
  return Json{{"modulus", r.modulus},
              {"ambient_order", encode(r.ambient_order)},
              {"image_order", encode(r.image_order)},
              {"index", encode(r.index)},
              {"generator_count", r.generator_count},
              {"form_divisors", div},
              {"used_overlattice", r.used_overlattice},
              {"lagrange_identity", r.image_order * r.index == r.ambient_order}};
}

Json encode(const LyapunovEstimate& e) {
  return Json{{"exponents", e.exponents},
              {"standard_errors", e.standard_errors},
              {"spectrum", e.spectrum},
              {"inverse_transpose_exponents", e.inverse_transpose_exponents},
              {"tautological_exponents", e.tautological_exponents},
              {"volume_residual", e.volume_residual},
              {"iterations", e.iterations},
              {"trials", e.trials},
              {"total_digit_steps", e.total_digit_steps()},
              {"digit_cap", e.digit_cap},
              {"seed", e.seed}};
}

Json encode(const CensusResult& r) {
  Json hits = Json::array();
  for (const auto& hit : r.hits)
    hits.push_back(Json{{"squares", hit.origami.size()},
                        {"h", format_cycles(hit.origami.h())},
                        {"v", format_cycles(hit.origami.v())},
                        {"stratum", encode(hit.stratum)},
                        {"genus", hit.stratum.genus}});
  return Json{{"max_squares", r.max_squares},
              {"count", r.hits.size()},
              {"hits", hits},
              {"candidates_examined", r.candidates},
              {"veech_full_unreduced_classes", r.veech_full_unreduced}};
}

}  // namespace origami
