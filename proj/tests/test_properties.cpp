#include <doctest.h>

#include "properties.hpp"

using namespace origami::testing;

namespace {
void require_property(const PropertyResult& r) {
  INFO(r.name << ": " << r.first_failure);
  CHECK(r.cases >= 1000);
  CHECK(r.failures == 0);
}
}  // namespace

TEST_CASE("permutation algebra, 1000 random cases") { require_property(permutation_property(1000, 101)); }
TEST_CASE("surface invariants, 1000 random cases") { require_property(surface_property(1000, 102)); }
TEST_CASE("chain-map property, 1000 random cases") { require_property(chain_map_property(1000, 103)); }
TEST_CASE("pairing well-definedness, 1000 random cases") { require_property(pairing_property(1000, 104)); }
TEST_CASE("symplectic random words, 1000 random cases") { require_property(symplectic_words_property(1000, 105)); }
TEST_CASE("annihilator orthogonality, 1000 random cases") { require_property(annihilator_property(1000, 106)); }
TEST_CASE("multitwist unipotency, 1000 random cases") { require_property(multitwist_property(1000, 107)); }
