#include "tvw/bounds.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace tvw;

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(91)); // 7 * 13
}

TEST_CASE("sierksma_number is ((q-1)!)^d") {
    CHECK(sierksma_number(2, 5) == 576);
    CHECK(sierksma_number(3, 3) == 8);
    CHECK(sierksma_number(1, 6) == 120);
    CHECK(sierksma_number(2, 11) == Int("13168189440000"));
    CHECK_THROWS_AS(sierksma_number(0, 3), std::invalid_argument);
}

TEST_CASE("vz_lower_bound ceilings at prime q") {
    CHECK(vz_lower_bound(2, 5) == 11);
    CHECK(vz_lower_bound(2, 7) == 110);
    CHECK(vz_lower_bound(2, 3) == 2);
    CHECK(vz_lower_bound(2, 11) == 35130);
    CHECK(vz_lower_bound(5, 7) == 8627646);
    CHECK_THROWS_AS(vz_lower_bound(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(vz_lower_bound(0, 3), std::invalid_argument);
}

TEST_CASE("winding_lower_bound_d2 ceilings at prime q") {
    CHECK(winding_lower_bound_d2(3) == 2);
    CHECK(winding_lower_bound_d2(5) == 3);
    CHECK(winding_lower_bound_d2(7) == 7);
    CHECK(winding_lower_bound_d2(11) == 49);
    CHECK(winding_lower_bound_d2(13) == 142);
    CHECK_THROWS_AS(winding_lower_bound_d2(6), std::invalid_argument);
}

TEST_CASE("conjectured count dominates the proven bound") {
    for (int q : {2, 3, 5, 7, 11, 13})
        for (int d = 1; d <= 5; ++d) CHECK(sierksma_number(d, q) >= vz_lower_bound(d, q));
}
