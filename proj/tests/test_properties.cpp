#include <doctest.h>

#include "properties.hpp"

using namespace braidforge::testing;

namespace {

void check(const PropertyResult& r) {
  INFO(r.first_failure);
  CHECK(r.cases == 1000);
  CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("degree and permutation homomorphism laws") { check(degree_permutation_laws(11)); }

TEST_CASE("Hurwitz moves preserve the ordered product") { check(hurwitz_laws(12)); }

TEST_CASE("regeneration degree ledger on random factors") { check(regeneration_ledger(13)); }

TEST_CASE("Artin action group-action laws") { check(artin_action_laws(14)); }
