#pragma once

// JSON encoding of inputs and reports. Integers that fit in 64 bits are JSON
// numbers, larger ones decimal strings; rationals are numbers when integral,
// "p/q" strings otherwise. Matrices are row-major arrays, polynomials low
// degree first.

#include <nlohmann/json.hpp>

#include "origami/census.hpp"
#include "origami/certificates.hpp"
#include "origami/cylinders.hpp"
#include "origami/lyapunov.hpp"

namespace origami {

using Json = nlohmann::json;

Json encode(const Integer& x);
Json encode(const Rational& x);
Json encode(const IntVector& v);
Json encode(const RatVector& v);
Json encode(const IntMatrix& m);
Json encode(const RatMatrix& m);
Json encode(const IntPolynomial& f);

Integer decode_integer(const Json& j);
IntMatrix decode_int_matrix(const Json& j);
IntVector decode_int_vector(const Json& j);
IntPolynomial decode_polynomial(const Json& j);

struct OrigamiInput {
  std::string name;
  std::string h;
  std::string v;
  std::optional<std::size_t> n;
};

/// {"name", "h", "v", "n"?}; throws InvalidInput on missing fields.
OrigamiInput parse_origami_input(const Json& j);
Json encode(const OrigamiInput& in);
/// Throws MalformedCycles, DegreeMismatch or RequiresTransitive.
Origami to_origami(const OrigamiInput& in);

Json encode(const Stratum& s);
Json encode(const CylinderDecomposition& d, bool with_waists = false);
Json encode(const SturmReport& r);
Json encode(const IrreducibilityReport& r);
Json encode(const GaloisReport& r);
Json encode(const GaloisPinchingReport& r);
Json encode(const DensityCertificate& c);
Json encode(const DirectionData& d);
Json encode(const ArithmeticityCertificate& c);
Json encode(const CongruenceImageReport& r);
Json encode(const LyapunovEstimate& e);
Json encode(const CensusResult& r);

std::string format_cycle_type(const CycleType& t);

}  // namespace origami
