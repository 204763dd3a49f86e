#include "origami/certificates.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "origami/cylinders.hpp"
#include "origami/error.hpp"
#include "origami/linalg.hpp"

namespace origami {

GaloisPinchingReport galois_pinching(const IntMatrix& a, std::size_t galois_prime_budget) {
  GaloisPinchingReport rep;
  rep.charpoly = char_poly(a);
  rep.reciprocal = is_reciprocal(rep.charpoly);
  rep.irreducibility = is_irreducible_over_Z(rep.charpoly);
  rep.sturm = count_real_roots(rep.charpoly);
  const long d = rep.charpoly.degree();
  if (rep.reciprocal && rep.irreducibility.irreducible && d % 2 == 0 && d >= 2 && d <= 6)
    rep.galois = galois_order_reciprocal(rep.charpoly, galois_prime_budget);
  rep.verdict = rep.reciprocal && rep.irreducibility.irreducible && rep.sturm.real_roots == d && rep.galois &&
                rep.galois->certified() && rep.galois->order == rep.galois->maximal_order;
  return rep;
}

DensityCertificate density_certificate(const std::vector<IntMatrix>& generators, const IntMatrix& form,
                                       const std::string& pinching_word, const std::string& unipotent_word,
                                       std::string_view alphabet) {
  DensityCertificate c;
  c.pinching_word = pinching_word;
  c.unipotent_word = unipotent_word;
  c.pinching_matrix = evaluate_word(pinching_word, alphabet, generators);
  c.unipotent_matrix = evaluate_word(unipotent_word, alphabet, generators);
  require(preserves_form(c.pinching_matrix, form) && preserves_form(c.unipotent_matrix, form),
          ErrorCode::FormViolation, "word does not preserve the symplectic form");
  c.pinching_report = galois_pinching(c.pinching_matrix);

  const std::size_t n = form.rows();
  IntMatrix nil = c.unipotent_matrix - IntMatrix::identity(n);
  c.unipotent_rank = rank(nil);
  c.unipotent = !nil.is_zero() && power(nil, static_cast<long>(n)).is_zero();
  c.lagrangian_image = 2 * c.unipotent_rank == n && (nil.transpose() * form * nil).is_zero();
  c.verdict = c.pinching_report.verdict && c.unipotent && !c.lagrangian_image;
  return c;
}

DensityCertificate density_certificate(const MonodromyPair& mp, const std::string& pinching_word,
                                       const std::string& unipotent_word) {
  return density_certificate({mp.restricted_T, mp.restricted_S}, mp.restricted_gram(), pinching_word, unipotent_word,
                             "TS");
}

IntMatrix multitwist_operator(const std::vector<Waist>& waists, const IntMatrix& form) {
  const std::size_t n = form.rows();
  for (std::size_t i = 0; i < waists.size(); ++i) {
    require(waists[i].cls.size() == n, ErrorCode::ShapeMismatch, "waist class has the wrong length");
    for (std::size_t j = i + 1; j < waists.size(); ++j) {
      IntVector gc = form * waists[j].cls;
      Integer s = 0;
      for (std::size_t k = 0; k < n; ++k) s += waists[i].cls[k] * gc[k];
      require(s == 0, ErrorCode::NotParallel, "waist classes " + std::to_string(i) + " and " + std::to_string(j) +
                                                  " intersect");
    }
  }
  IntMatrix c = IntMatrix::identity(n);
  for (const auto& w : waists) {
    // <X, c> = (G c) . X, so the term is k c (G c)^T
    IntVector gc = form * w.cls;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(i, j) += w.twists * w.cls[i] * gc[j];
  }
  return c;
}

Rational pairing(const RatVector& x, const RatVector& y, const IntMatrix& form) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (form(i, j) != 0) s += x[i] * Rational(form(i, j)) * y[j];
  }
  return s;
}

RatVector annihilator(const IntVector& w1, const IntVector& w2, const IntVector& w3, const IntMatrix& form) {
  RatVector a = to_rational(w1), b = to_rational(w2), c = to_rational(w3);
  Rational p12 = pairing(a, b, form), p21 = pairing(b, a, form);
  require(p12 != 0 && p21 != 0, ErrorCode::DegenerateConfiguration, "<w1, w2> = 0");
  Rational x = -pairing(c, b, form) / p12;
  Rational y = -pairing(c, a, form) / p21;
  RatVector e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = x * a[i] + y * b[i] + c[i];
  return e;
}

RatMatrix transvection_in_basis(const IntVector& w, const Rational& c, const std::vector<RatVector>& basis,
                                const IntMatrix& form) {
  const std::size_t n = form.rows();
  RatVector wr = to_rational(w);
  RatMatrix b = RatMatrix::from_columns(basis, n);
  std::vector<RatVector> images;
  for (const auto& x : basis) {
    Rational t = c * pairing(x, wr, form);
    RatVector y = x;
    for (std::size_t i = 0; i < n; ++i) y[i] += t * wr[i];
    images.push_back(std::move(y));
  }
  auto coords = coordinates_in(b, RatMatrix::from_columns(images, n));
  require(coords.has_value(), ErrorCode::DegenerateConfiguration, "transvection does not preserve the span");
  return *coords;
}

DirectionData direction_data(const Origami& o, const MonodromyPair& mp, long p, long q) {
  DirectionData d;
  d.direction = {p, q};
  CylinderDecomposition cd = cylinders_in_direction(o, p, q);
  std::vector<IntVector> classes;
  std::vector<std::size_t> raw_class;
  for (const auto& cyl : cd.cylinders) {
    IntVector x = homology_coordinates(cyl.waist, mp.basis, mp.complex);
    auto it = std::find(classes.begin(), classes.end(), x);
    raw_class.push_back(static_cast<std::size_t>(it - classes.begin()));
    if (it == classes.end()) classes.push_back(std::move(x));
  }
  require(classes.size() == 2, ErrorCode::DegenerateConfiguration,
          "direction (" + std::to_string(p) + "," + std::to_string(q) + ") has " + std::to_string(classes.size()) +
              " waist classes; two are required");
  // class 0 is the one with the longer cylinders
  std::size_t long_raw = 0;
  for (std::size_t k = 0; k < cd.cylinders.size(); ++k)
    if (cd.cylinders[k].circumference > cd.cylinders[long_raw].circumference) long_raw = k;
  const std::size_t long_class = raw_class[long_raw];

  Integer m = 1;
  for (const auto& cyl : cd.cylinders) {
    Integer l = static_cast<unsigned long>(cyl.circumference), h = static_cast<unsigned long>(cyl.height), g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), h.get_mpz_t());
    Integer reduced = l / g;
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), reduced.get_mpz_t());
  }
  for (std::size_t k = 0; k < cd.cylinders.size(); ++k) {
    const auto& cyl = cd.cylinders[k];
    std::size_t cls = raw_class[k] == long_class ? 0 : 1;
    Integer mult = m * static_cast<unsigned long>(cyl.height) / static_cast<unsigned long>(cyl.circumference);
    d.circumferences.push_back(cyl.circumference);
    d.heights.push_back(cyl.height);
    d.cylinder_class.push_back(cls);
    d.multiplicities.push_back(mult);
    d.class_twists[cls] += mult;
    d.class_heights[cls] += static_cast<unsigned long>(cyl.height);
  }
  d.class_cycles[0] = classes[long_class];
  d.class_cycles[1] = classes[1 - long_class];

  const auto& [k1, k2] = d.class_twists;
  const auto& [h1, h2] = d.class_heights;
  Integer g;
  mpz_gcd(g.get_mpz_t(), h1.get_mpz_t(), h2.get_mpz_t());
  IntVector w(mp.basis.rank());
  for (std::size_t i = 0; i < w.size(); ++i)
    w[i] = (h2 * k1 * d.class_cycles[0][i] - h1 * k2 * d.class_cycles[1][i]) / g;
  auto coords = coordinates_in(to_rational(mp.split.zero_holonomy), to_rational(IntMatrix::from_columns({w}, w.size())));
  require(coords.has_value(), ErrorCode::InternalInvariantViolation, "twist vector has nonzero holonomy");
  d.w = to_integer(coords->column(0));
  d.coefficient = Rational(g * g, k1 * h2 * h2 + k2 * h1 * h1);
  d.coefficient.canonicalize();
  return d;
}

bool is_e_row_unipotent(const RatMatrix& m) {
  if (!m.is_square() || m.rows() < 2) return false;
  const std::size_t n = m.rows();
  bool nontrivial = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = m(i, j);
      if (i == j) {
        if (x != 1) return false;
      } else if (i == n - 1 && j < n - 1) {
        if (x != 0) nontrivial = true;
      } else if (x != 0) {
        return false;
      }
    }
  return nontrivial;
}

namespace {

RatMatrix evaluate_rational(const std::vector<WordLetter>& letters, const std::vector<RatMatrix>& gens,
                            std::size_t n) {
  RatMatrix acc = RatMatrix::identity(n);
  for (const auto& l : letters) {
    RatMatrix base = l.exponent < 0 ? inverse(gens.at(l.generator)) : gens.at(l.generator);
    for (long k = 0; k < std::labs(l.exponent); ++k) acc = acc * base;
  }
  return acc;
}

std::string matrix_key(const RatMatrix& m, std::size_t rows, std::size_t cols) {
  std::string s;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) s += m(i, j).get_str() + ",";
  return s;
}

std::vector<WordLetter> simplify(const std::vector<WordLetter>& w) {
  std::vector<WordLetter> out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().generator == l.generator) {
      out.back().exponent += l.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

}  // namespace

WitnessSearch search_e_row_witness(const std::vector<RatMatrix>& generators, std::string_view alphabet,
                                   std::size_t depth) {
  WitnessSearch res;
  if (generators.empty()) return res;
  const std::size_t n = generators.front().rows();
  std::vector<RatMatrix> steps;
  std::vector<WordLetter> step_letters;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    steps.push_back(generators[g]);
    step_letters.push_back({g, 1});
    steps.push_back(inverse(generators[g]));
    step_letters.push_back({g, -1});
  }
  struct Node {
    RatMatrix m;
    std::vector<WordLetter> word;
  };
  std::map<std::string, std::size_t> by_block;  // upper-left block -> node
  std::unordered_set<std::string> seen;
  std::vector<Node> nodes{{RatMatrix::identity(n), {}}};
  seen.insert(matrix_key(nodes[0].m, n, n));
  by_block[matrix_key(nodes[0].m, n - 1, n - 1)] = 0;
  std::size_t begin = 0;
  const std::size_t half = (depth + 1) / 2;
  for (std::size_t level = 0; level < half; ++level) {
    std::size_t end = nodes.size();
    for (std::size_t idx = begin; idx < end; ++idx) {
      for (std::size_t s = 0; s < steps.size(); ++s) {
        RatMatrix y = nodes[idx].m * steps[s];
        std::string key = matrix_key(y, n, n);
        if (!seen.insert(key).second) continue;
        std::vector<WordLetter> word = nodes[idx].word;
        word.push_back(step_letters[s]);
        word = simplify(word);
        ++res.nodes;
        std::string block = matrix_key(y, n - 1, n - 1);
        auto it = by_block.find(block);
        if (it != by_block.end()) {
          const Node& x = nodes[it->second];
          // y x^-1 has identity block and a nonzero last row
          std::vector<WordLetter> inv_x;
          for (auto r = x.word.rbegin(); r != x.word.rend(); ++r) inv_x.push_back({r->generator, -r->exponent});
          std::vector<WordLetter> full = word;
          full.insert(full.end(), inv_x.begin(), inv_x.end());
          full = simplify(full);
          if (word_length(full) <= depth) {
            RatMatrix w = evaluate_rational(full, generators, n);
            if (is_e_row_unipotent(w)) {
              res.word = format_word(full, alphabet);
              res.matrix = w;
              return res;
            }
          }
        } else {
          by_block.emplace(block, nodes.size());
        }
        nodes.push_back({std::move(y), std::move(word)});
      }
    }
    begin = end;
  }
  return res;
}

ArithmeticityCertificate arithmeticity_certificate(const std::array<IntVector, 3>& w,
                                                   const std::array<Rational, 3>& coefficients, const IntMatrix& form,
                                                   const std::string& reference_word, std::size_t search_depth) {
  ArithmeticityCertificate c;
  c.w = w;
  c.coefficients = coefficients;
  c.reference_word = reference_word;
  c.search_depth = search_depth;
  const std::size_t n = form.rows();
  for (const auto& x : w) require(x.size() == n, ErrorCode::ShapeMismatch, "w has the wrong length");
  require(rank(IntMatrix::from_columns({w[0], w[1], w[2]}, n)) == 3, ErrorCode::DegenerateConfiguration,
          "w1, w2, w3 are linearly dependent");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Rational p = pairing(to_rational(w[i]), to_rational(w[j]), form);
      c.w_pairings[i][j] = p.get_num();
    }
  c.e = annihilator(w[0], w[1], w[2], form);
  {
    Rational p12 = pairing(to_rational(w[0]), to_rational(w[1]), form);
    Rational p21 = -p12;
    c.e_in_w = std::array<Rational, 3>{-pairing(to_rational(w[2]), to_rational(w[1]), form) / p12,
                                       -pairing(to_rational(w[2]), to_rational(w[0]), form) / p21, Rational(1)};
  }
  std::vector<RatVector> basis{to_rational(w[0]), to_rational(w[2]), c.e};
  require(rank(RatMatrix::from_columns(basis, n)) == 3, ErrorCode::DegenerateConfiguration,
          "{w1, w3, e} is not a basis of the span");
  for (std::size_t i = 0; i < 3; ++i) c.transvections[i] = transvection_in_basis(w[i], coefficients[i], basis, form);

  std::vector<RatMatrix> gens(c.transvections.begin(), c.transvections.end());
  auto letters = parse_word(reference_word, "ABC");
  c.reference_word_matrix = evaluate_rational(letters, gens, 3);
  c.reference_word_is_witness = !letters.empty() && is_e_row_unipotent(c.reference_word_matrix);
  if (c.reference_word_is_witness) {
    c.witness_word = reference_word;
    c.witness_matrix = c.reference_word_matrix;
  } else {
    c.search_used = true;
    auto found = search_e_row_witness(gens, "ABC", search_depth);
    c.search_nodes = found.nodes;
    if (found.word) {
      c.witness_word = *found.word;
      c.witness_matrix = *found.matrix;
    }
  }
  c.verdict = is_e_row_unipotent(c.witness_matrix);
  c.status = c.verdict ? "Certified" : "NoWitnessFound";
  return c;
}

ArithmeticityCertificate arithmeticity_certificate(const Origami& o, const MonodromyPair& mp,
                                                   const std::array<std::array<long, 2>, 3>& directions,
                                                   const std::string& reference_word, std::size_t search_depth) {
  std::vector<DirectionData> data;
  for (const auto& d : directions) data.push_back(direction_data(o, mp, d[0], d[1]));
  auto c = arithmeticity_certificate({data[0].w, data[1].w, data[2].w},
                                     {data[0].coefficient, data[1].coefficient, data[2].coefficient},
                                     mp.restricted_gram(), reference_word, search_depth);
  c.directions = std::move(data);
  return c;
}

Integer symplectic_group_order(unsigned m, unsigned long q) {
  Integer order, qq = q, t;
  mpz_pow_ui(order.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(m) * m);
  for (unsigned i = 1; i <= m; ++i) {
    mpz_pow_ui(t.get_mpz_t(), qq.get_mpz_t(), 2UL * i);
    order *= t - 1;
  }
  return order;
}

namespace {

using BitMatrix = std::uint64_t;  // row-major, dimension <= 8

BitMatrix to_bits(const IntMatrix& m) {
  const std::size_t d = m.rows();
  BitMatrix b = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (mpz_odd_p(m(i, j).get_mpz_t())) b |= 1ULL << (i * d + j);
  return b;
}

BitMatrix bit_mul(BitMatrix a, BitMatrix b, std::size_t d) {
  const std::uint64_t row_mask = (1ULL << d) - 1;
  BitMatrix c = 0;
  for (std::size_t i = 0; i < d; ++i) {
    std::uint64_t row = 0, arow = (a >> (i * d)) & row_mask;
    for (std::size_t k = 0; k < d; ++k)
      if (arow >> k & 1ULL) row ^= (b >> (k * d)) & row_mask;
    c |= row << (i * d);
  }
  return c;
}

}  // namespace

CongruenceImageReport congruence_image_mod2(const std::vector<IntMatrix>& generators, const IntMatrix& form) {
  CongruenceImageReport rep;
  const std::size_t d = form.rows();
  require(d % 2 == 0 && d <= 8, ErrorCode::DomainError, "mod-2 closure supports forms of size <= 8");
  for (const auto& g : generators)
    require(g.rows() == d && g.cols() == d && preserves_form(g, form), ErrorCode::FormViolation,
            "generator does not preserve the form");
  const unsigned m = static_cast<unsigned>(d / 2);
  rep.generator_count = generators.size();
  rep.ambient_order = symplectic_group_order(m, 2);
  if (d == 0) {
    rep.image_order = 1;
    rep.index = 1;
    return rep;
  }

  auto sn = symplectic_normalize(form);
  rep.divisors = sn.divisors;
  RatMatrix p = to_rational(sn.change);
  for (std::size_t k = 0; k < m; ++k) {
    Integer s = sqrt(sn.divisors[k]);
    require(s * s == sn.divisors[k], ErrorCode::DegenerateForm,
            "form is not unimodular and its divisors are not squares; no overlattice available");
    if (s == 1) continue;
    rep.used_overlattice = true;
    for (std::size_t i = 0; i < d; ++i) {
      p(i, k) /= Rational(s);
      p(i, m + k) /= Rational(s);
    }
  }
  RatMatrix pinv = inverse(p);
  IntMatrix j = standard_symplectic_form(std::vector<Integer>(m, 1));
  std::vector<BitMatrix> gens;
  for (const auto& g : generators) {
    RatMatrix conj = pinv * to_rational(g) * p;
    IntMatrix gi;
    try {
      gi = to_integer(conj);
    } catch (const Error&) {
      fail(ErrorCode::DegenerateForm, "generators do not preserve the unimodular overlattice");
    }
    require(preserves_form(gi, j), ErrorCode::InternalInvariantViolation, "conjugated generator is not symplectic");
    gens.push_back(to_bits(gi));
  }

  const std::size_t ambient = rep.ambient_order.get_ui();
  std::unordered_set<BitMatrix> seen;
  seen.reserve(ambient + 1);
  BitMatrix id = 0;
  for (std::size_t i = 0; i < d; ++i) id |= 1ULL << (i * d + i);
  std::vector<BitMatrix> queue{id};
  seen.insert(id);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (BitMatrix g : gens) {
      BitMatrix y = bit_mul(queue[head], g, d);
      if (seen.insert(y).second) {
        queue.push_back(y);
        require(queue.size() <= ambient, ErrorCode::InternalInvariantViolation, "closure exceeds |Sp(2m, F_2)|");
      }
    }
  }
  rep.image_order = static_cast<unsigned long>(queue.size());
  require(mpz_divisible_p(rep.ambient_order.get_mpz_t(), rep.image_order.get_mpz_t()) != 0,
          ErrorCode::InternalInvariantViolation, "image order does not divide the ambient order");
  rep.index = rep.ambient_order / rep.image_order;
  return rep;
}

FiniteGroupResult detect_finite_group(const std::vector<IntMatrix>& generators, std::size_t element_budget) {
  FiniteGroupResult res;
  if (generators.empty()) {
    res.finite = true;
    res.order = 1;
    return res;
  }
  const std::size_t n = generators.front().rows();
  for (const auto& g : generators)
    require(g.rows() == n && g.cols() == n, ErrorCode::ShapeMismatch, "generators must be square of equal size");
  auto key = [](const IntMatrix& m) {
    std::string s;
    for (const auto& x : m.data()) s += x.get_str(16) + ",";
    return s;
  };
  std::unordered_set<std::string> seen;
  std::vector<IntMatrix> queue{IntMatrix::identity(n)};
  seen.insert(key(queue[0]));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : generators) {
      IntMatrix y = queue[head] * g;
      if (seen.insert(key(y)).second) {
        if (queue.size() >= element_budget) {
          res.order = queue.size();
          return res;
        }
        queue.push_back(std::move(y));
      }
    }
  }
  res.finite = true;
  res.order = queue.size();
  return res;
}

}  // namespace origami
