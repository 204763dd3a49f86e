#include "origami/fixtures.hpp"

namespace origami {

namespace detail {
extern const char* const kReferenceFixturesJson;
}

namespace {

ReferenceFixtures load() {
  Json j = Json::parse(detail::kReferenceFixturesJson);
  const Json& o = j.at("origami");
  const std::size_t n = o.at("n").get<std::size_t>();
  ReferenceFixtures f(j, Origami(parse_cycles(o.at("h").get<std::string>(), n),
                             parse_cycles(o.at("v").get<std::string>(), n), o.at("name").get<std::string>()));
  f.psi = parse_cycles(o.at("psi").get<std::string>(), n);
  f.phi = parse_cycles(o.at("phi").get<std::string>(), n);
  f.stratum = o.at("stratum").get<std::vector<std::size_t>>();
  f.genus = o.at("genus").get<std::size_t>();
  f.horizontal_circumferences = o.at("horizontal_circumferences").get<std::vector<std::size_t>>();
  f.omega = decode_int_matrix(j.at("omega"));
  f.omega_determinant_claim = decode_integer(j.at("omega_determinant_claim"));
  for (const auto& hol : j.at("gamma_holonomies")) f.gamma_holonomies.push_back({decode_integer(hol[0]), decode_integer(hol[1])});
  f.epsilon = decode_int_matrix(j.at("epsilon_in_gamma")).transpose();
  f.omega0 = f.epsilon.transpose() * f.omega * f.epsilon;
  f.alpha_T = decode_int_matrix(j.at("alpha_T"));
  f.alpha_S = decode_int_matrix(j.at("alpha_S"));
  f.pinching_word = j.at("pinching_word").get<std::string>();
  f.unipotent_word = j.at("unipotent_word").get<std::string>();
  f.f_A = decode_polynomial(j.at("f_A"));
  f.galois_order = j.at("galois_order").get<std::size_t>();
  f.unipotent_image_dimension = j.at("unipotent_image_dimension").get<std::size_t>();
  for (int k = 0; k < 3; ++k) {
    f.w[k] = decode_int_vector(j.at("w_in_epsilon").at(k));
    f.transvections[k] = decode_int_matrix(j.at("transvections").at(k));
    f.directions[k] = {j.at("directions").at(k).at(0).get<long>(), j.at("directions").at(k).at(1).get<long>()};
  }
  f.e_in_w = decode_int_vector(j.at("e_in_w"));
  f.transvection_word = j.at("transvection_word").get<std::string>();
  f.transvection_word_matrix = decode_int_matrix(j.at("transvection_word_matrix"));
  f.theta = decode_int_matrix(j.at("theta"));
  f.theta_form = decode_int_matrix(j.at("theta_form"));
  f.lyapunov = j.at("lyapunov").get<std::vector<double>>();
  return f;
}

}  // namespace

const std::string& reference_fixtures_json() {
  static const std::string s = detail::kReferenceFixturesJson;
  return s;
}

const ReferenceFixtures& reference_fixtures() {
  static const ReferenceFixtures f = load();
  return f;
}

bool is_flagship(const Origami& o) {
  const Origami& flagship = reference_fixtures().origami;
  return o.size() == flagship.size() && canonical_form(o) == canonical_form(flagship);
}

}  // namespace origami
