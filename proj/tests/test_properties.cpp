#include "doctest.h"
#include "properties.hpp"

using namespace testing;

TEST_SUITE("properties") {

TEST_CASE("randomized property suites") {
  for (const PropertyResult& r : all_properties(20261015, 1000)) {
    CAPTURE(r.name);
    CAPTURE(r.first_failure);
    CHECK(r.cases >= 1000);
    CHECK(r.failures == 0);
  }
}

}  // TEST_SUITE
