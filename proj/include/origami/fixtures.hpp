#pragma once

// Reference data for the flagship genus-4 origami O, compiled into the library
// from data/reference_fixtures.json.

#include <array>
#include <string>
#include <vector>

#include "origami/io.hpp"

namespace origami {

struct ReferenceFixtures {
  ReferenceFixtures(Json j, Origami o) : raw(std::move(j)), origami(std::move(o)) {}

  Json raw;
  Origami origami;
  Permutation psi;  // psi T(h,v) psi^-1 = (h,v)
  Permutation phi;  // phi S(h,v) phi^-1 = (h,v)
  std::vector<std::size_t> stratum;
  std::size_t genus = 0;
  std::vector<std::size_t> horizontal_circumferences;
  IntMatrix omega;           // 8x8 pairing of the gamma basis
  Integer omega_determinant_claim;
  std::vector<Holonomy> gamma_holonomies;
  IntMatrix epsilon;         // 8x6, columns = epsilon_k in gamma coordinates
  IntMatrix omega0;          // epsilon^T omega epsilon
  IntMatrix alpha_T, alpha_S;
  std::string pinching_word, unipotent_word;
  IntPolynomial f_A;
  std::size_t galois_order = 0;
  std::size_t unipotent_image_dimension = 0;
  std::array<IntVector, 3> w;  // epsilon coordinates
  IntVector e_in_w;
  std::array<IntMatrix, 3> transvections;
  std::string transvection_word;
  IntMatrix transvection_word_matrix;
  std::array<std::array<long, 2>, 3> directions{};
  IntMatrix theta, theta_form;
  std::vector<double> lyapunov;
};

const std::string& reference_fixtures_json();
const ReferenceFixtures& reference_fixtures();

/// True when o is simultaneously conjugate to the flagship surface.
bool is_flagship(const Origami& o);

}  // namespace origami
