#pragma once

// Certificates for the monodromy group: Galois pinching + unipotent (Zariski
// density), transvections in three directions (arithmeticity), mod-2 image.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "origami/galois.hpp"
#include "origami/monodromy.hpp"
#include "origami/polynomial.hpp"
#include "origami/words.hpp"

namespace origami {

struct GaloisPinchingReport {
  IntPolynomial charpoly;
  bool reciprocal = false;
  IrreducibilityReport irreducibility;
  SturmReport sturm;
  std::optional<GaloisReport> galois;  // only for irreducible reciprocal inputs
  bool verdict = false;
};

GaloisPinchingReport galois_pinching(const IntMatrix& a, std::size_t galois_prime_budget = 100);

struct DensityCertificate {
  std::string pinching_word;
  IntMatrix pinching_matrix;
  GaloisPinchingReport pinching_report;
  std::string unipotent_word;
  IntMatrix unipotent_matrix;
  std::size_t unipotent_rank = 0;  // rank(B - I)
  bool unipotent = false;          // B != I and (B - I) nilpotent
  bool lagrangian_image = false;
  bool verdict = false;
};

/// generators over `alphabet`; both words must evaluate to form-preserving matrices.
DensityCertificate density_certificate(const std::vector<IntMatrix>& generators, const IntMatrix& form,
                                       const std::string& pinching_word, const std::string& unipotent_word,
                                       std::string_view alphabet = "TS");
DensityCertificate density_certificate(const MonodromyPair& mp, const std::string& pinching_word,
                                       const std::string& unipotent_word);

struct Waist {
  IntVector cls;
  Integer twists;
};

/// X ↦ X + Σ k ⟨X, c⟩ c with ⟨x, y⟩ = xᵀ G y. Throws NotParallel if two waists pair nontrivially.
IntMatrix multitwist_operator(const std::vector<Waist>& waists, const IntMatrix& form);

Rational pairing(const RatVector& x, const RatVector& y, const IntMatrix& form);

/// e = -(⟨w3,w2⟩/⟨w1,w2⟩) w1 - (⟨w3,w1⟩/⟨w2,w1⟩) w2 + w3
RatVector annihilator(const IntVector& w1, const IntVector& w2, const IntVector& w3, const IntMatrix& form);

/// Matrix of X ↦ X + c⟨X,w⟩w on span(basis), column j = image of basis[j].
RatMatrix transvection_in_basis(const IntVector& w, const Rational& c, const std::vector<RatVector>& basis,
                                const IntMatrix& form);

/// Twist data of one rational direction with homological dimension 2.
struct DirectionData {
  std::array<long, 2> direction{1, 0};
  std::vector<std::size_t> circumferences, heights;
  std::vector<std::size_t> cylinder_class;  // 0 = long class, 1 = short class
  std::vector<Integer> multiplicities;      // lcm(moduli) * h / l per cylinder
  std::array<Integer, 2> class_twists{0, 0};   // K1, K2
  std::array<Integer, 2> class_heights{0, 0};  // H1, H2
  std::array<IntVector, 2> class_cycles;       // waist classes in H_1 basis coordinates
  IntVector w;                                 // K1 c1 - K2 (H1/H2) c2, zero-holonomy coordinates
  Rational coefficient;                        // 1 / (K1 + K2 (H1/H2)^2)
};

DirectionData direction_data(const Origami& o, const MonodromyPair& mp, long p, long q);

struct ArithmeticityCertificate {
  std::vector<DirectionData> directions;  // empty when built from explicit vectors
  std::array<IntVector, 3> w;
  std::array<Rational, 3> coefficients;
  std::array<std::array<Integer, 3>, 3> w_pairings;
  RatVector e;
  std::optional<std::array<Rational, 3>> e_in_w;  // e = a w1 + b w2 + c w3
  std::array<RatMatrix, 3> transvections;         // basis {w1, w3, e}
  std::string reference_word;
  RatMatrix reference_word_matrix;
  bool reference_word_is_witness = false;
  std::string witness_word;
  RatMatrix witness_matrix;
  bool search_used = false;
  std::size_t search_depth = 0;
  std::size_t search_nodes = 0;
  bool verdict = false;
  std::string status;  // "Certified" or "NoWitnessFound"
};

/// Transvection words use the alphabet "ABC" for C_{w1}, C_{w2}, C_{w3}.
ArithmeticityCertificate arithmeticity_certificate(const std::array<IntVector, 3>& w,
                                                   const std::array<Rational, 3>& coefficients, const IntMatrix& form,
                                                   const std::string& reference_word = "ABabC^3a",
                                                   std::size_t search_depth = 12);
ArithmeticityCertificate arithmeticity_certificate(const Origami& o, const MonodromyPair& mp,
                                                   const std::array<std::array<long, 2>, 3>& directions,
                                                   const std::string& reference_word = "ABabC^3a",
                                                   std::size_t search_depth = 12);

/// A nontrivial unipotent lower-triangular matrix whose only off-diagonal entries sit in the last row.
bool is_e_row_unipotent(const RatMatrix& m);

/// Bounded search for a product of generators (and inverses) that is e-row unipotent.
struct WitnessSearch {
  std::optional<std::string> word;
  std::optional<RatMatrix> matrix;
  std::size_t nodes = 0;
};
WitnessSearch search_e_row_witness(const std::vector<RatMatrix>& generators, std::string_view alphabet,
                                   std::size_t depth);

struct CongruenceImageReport {
  unsigned modulus = 2;
  Integer ambient_order;
  Integer image_order;
  Integer index;
  std::size_t generator_count = 0;
  std::vector<Integer> divisors;  // symplectic divisors of the input form
  bool used_overlattice = false;
};

/// |Sp(2m, F_q)| = q^{m^2} Π (q^{2i} - 1)
Integer symplectic_group_order(unsigned m, unsigned long q);

/// Reduces the generators mod 2 in a symplectic basis of the form (or of an
/// invariant unimodular overlattice when the form has square divisors) and
/// closes the generated subgroup of Sp(2m, F_2).
CongruenceImageReport congruence_image_mod2(const std::vector<IntMatrix>& generators, const IntMatrix& form);

struct FiniteGroupResult {
  bool finite = false;
  std::size_t order = 0;  // when finite; elements seen otherwise
};
FiniteGroupResult detect_finite_group(const std::vector<IntMatrix>& generators, std::size_t element_budget);

}  // namespace origami
