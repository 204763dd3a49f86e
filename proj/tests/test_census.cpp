#include <doctest.h>

#include "origami/census.hpp"
#include "origami/error.hpp"

using namespace origami;

TEST_CASE("partitions") {
  CHECK(partitions(1).size() == 1);
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(8).size() == 22);
  CHECK(partitions(4).front() == std::vector<std::size_t>{4});
  CHECK(partitions(4).back() == std::vector<std::size_t>{1, 1, 1, 1});
}

TEST_CASE("small censuses") {
  for (std::size_t n : {1, 6}) {
    CAPTURE(n);
    CensusResult r = veech_full_census(n);
    REQUIRE(r.hits.size() == 1);
    CHECK(r.hits[0].origami.size() == 1);
    CHECK(r.hits[0].stratum.genus == 1);
  }
}

TEST_CASE("eight squares: torus and the eierlegende Wollmilchsau") {
  CensusResult r = veech_full_census(8, 2);
  REQUIRE(r.hits.size() == 2);
  const CensusHit& ew = r.hits[1];
  CHECK(ew.origami.size() == 8);
  CHECK(ew.stratum.genus == 3);
  CHECK(ew.stratum.zero_orders == std::vector<std::size_t>{1, 1, 1, 1});
  Origami reference(parse_cycles("(1,2,3,4)(5,6,7,8)"), parse_cycles("(1,5,3,7)(2,8,4,6)"));
  CHECK(canonical_form(reference) == ew.form);
  // independent of the worker count
  CensusResult single = veech_full_census(8, 1);
  REQUIRE(single.hits.size() == 2);
  CHECK(single.hits[1].form == ew.form);
  CHECK(single.candidates == r.candidates);
}

TEST_CASE("census refuses more than nine squares") {
  try {
    veech_full_census(10);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }
}
