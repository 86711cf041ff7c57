#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "rodring/counting.hpp"
#include "rodring/enumerate.hpp"
#include "rodring/json_io.hpp"
#include "rodring/transfer.hpp"

using namespace rodring;

TEST_CASE("plain border counts") {
  CHECK(count_square_border(2).value == 7);
  CHECK(count_square_border(3).value == 47);
  CHECK(count_square_border(4).value == 322);
  CHECK(count_rect_border(2, 3).value == 18);
  CHECK(count_rect_border(3, 3).value == 47);
  CHECK(count_rect_border(3, 4).value == 123);
  CHECK_THROWS_AS(count_square_border(1), std::invalid_argument);
  CHECK_THROWS_AS(count_rect_border(2, 0), std::invalid_argument);

  const CountResult r = count_square_border(3);
  CHECK(r.method == CountMethod::ClosedForm);
  CHECK(r.equivalence == Equivalence::None);
  CHECK(r.spec == BorderSpec{3, 3});

  // The closed form and the transfer matrix count the same rings.
  for (int n = 2; n <= 17; ++n) {
    CHECK(count_square_border(n).value == cycle_count_via_matrix(4 * (n - 1)));
  }
  for (int m = 2; m <= 10; ++m) {
    for (int n = 2; n <= 10; ++n) {
      CHECK(count_rect_border(m, n).value == cycle_count_via_matrix(2 * (m + n - 2)));
    }
  }
}

TEST_CASE("square rotational counts") {
  const long expected[] = {3, 15, 87, 567};
  for (int n = 2; n <= 5; ++n) {
    CHECK(count_square_rotational(n).value == expected[n - 2]);
    CHECK(count_square_rotational_parity_forms(n).value == expected[n - 2]);
  }
  CHECK(count_square_rotational(2).equivalence == Equivalence::Rotational);
  CHECK_THROWS_AS(count_square_rotational(1), std::invalid_argument);
  CHECK_THROWS_AS(count_square_rotational_parity_forms(0), std::invalid_argument);

  // The single polynomial and the parity-split pair agree everywhere.
  for (int n = 2; n <= 40; ++n) {
    CHECK(count_square_rotational(n).value == count_square_rotational_parity_forms(n).value);
  }
}

TEST_CASE("square dihedral counts") {
  CHECK(count_square_dihedral_even(2).value == 3);
  CHECK(count_square_dihedral_odd(3).value == 9);
  CHECK(count_square_dihedral_even(4).value == 54);
  CHECK(count_square_dihedral_odd(5).value == 294);
  CHECK(count_square_dihedral_even(6).value == 1981);

  CHECK_THROWS_AS(count_square_dihedral_even(3), std::invalid_argument);
  CHECK_THROWS_AS(count_square_dihedral_odd(4), std::invalid_argument);
  CHECK_THROWS_AS(count_square_dihedral(1), std::invalid_argument);

  for (int n = 2; n <= 12; ++n) {
    CHECK(count_square_dihedral(n).value ==
          (n % 2 == 0 ? count_square_dihedral_even(n) : count_square_dihedral_odd(n)).value);
    CHECK(count_square_dihedral(n).equivalence == Equivalence::Dihedral);
  }
}

TEST_CASE("rect rotational corrected vs as printed") {
  CHECK(count_rect_rotational_corrected(2, 3).value == 11);
  CHECK(count_rect_rotational_corrected(2, 4).value == 27);
  CHECK(count_rect_rotational_corrected(3, 4).value == 67);
  CHECK(count_rect_rotational_as_printed(2, 3).value == 27);
  CHECK(count_rect_rotational_as_printed(2, 4).value == 67);
  CHECK(count_rect_rotational_as_printed(3, 4).value == 170);

  CHECK_THROWS_AS(count_rect_rotational_corrected(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(count_rect_rotational_as_printed(4, 4), std::invalid_argument);
  CHECK_THROWS_AS(count_rect_rotational_corrected(1, 4), std::invalid_argument);

  // Swapping m and n changes nothing; the two forms never meet.
  for (int m = 2; m <= 8; ++m) {
    for (int n = m + 1; n <= 9; ++n) {
      CHECK(count_rect_rotational_corrected(m, n).value ==
            count_rect_rotational_corrected(n, m).value);
      CHECK(count_rect_rotational_as_printed(m, n).value !=
            count_rect_rotational_corrected(m, n).value);
    }
  }
}

TEST_CASE("corrected rect form equals the oracle") {
  for (int m = 2; m <= 8; ++m) {
    for (int n = m + 1; 2 * (m + n - 2) <= 16; ++n) {
      const int k = 2 * (m + n - 2);
      const auto orbit = orbit_count_direct(enumerate_ring_tilings(k),
                                            symmetry_elements({m, n}, GroupTag::C2));
      CHECK(count_rect_rotational_corrected(m, n).value == orbit.orbit_count);
    }
  }
}

TEST_CASE("burnside_first_principles") {
  const BurnsideBreakdown c4 = burnside_first_principles({3, 3}, GroupTag::C4);
  CHECK(c4.result.value == 15);
  CHECK(c4.result.method == CountMethod::BurnsideFirstPrinciples);
  CHECK(c4.result.equivalence == Equivalence::Rotational);
  REQUIRE(c4.fixed_counts.size() == 4);
  CHECK(c4.fixed_counts[0].second == 47);
  CHECK(c4.fixed_counts[1].second == 3);
  CHECK(c4.fixed_counts[2].second == 7);
  CHECK(c4.fixed_counts[3].second == 3);

  const BurnsideBreakdown c2 = burnside_first_principles({2, 3}, GroupTag::C2);
  CHECK(c2.result.value == 11);
  CHECK(c2.fixed_counts[0].second == 18);
  CHECK(c2.fixed_counts[1].second == 4);

  // 4x4 under the full symmetry group: the two axis kinds differ sharply.
  const BurnsideBreakdown d4 = burnside_first_principles({4, 4}, GroupTag::D4);
  CHECK(d4.result.value == 54);
  CHECK(d4.result.equivalence == Equivalence::Dihedral);
  REQUIRE(d4.fixed_counts.size() == 8);
  CHECK(d4.fixed_counts[4] == std::pair<std::string, BigInt>{"mh", 34});
  CHECK(d4.fixed_counts[5] == std::pair<std::string, BigInt>{"mv", 34});
  CHECK(d4.fixed_counts[6] == std::pair<std::string, BigInt>{"md", 8});
  CHECK(d4.fixed_counts[7] == std::pair<std::string, BigInt>{"ma", 8});

  CHECK_THROWS_AS(burnside_first_principles({2, 3}, GroupTag::D4), std::invalid_argument);
  CHECK_THROWS_AS(burnside_first_principles({2, 3}, GroupTag::C4), std::invalid_argument);
}

TEST_CASE("per-element formulas match brute-force fixed counts") {
  for (int n = 2; n <= 5; ++n) {
    const auto tilings = enumerate_ring_tilings(ring_length({n, n}));
    const auto direct = orbit_count_direct(tilings, symmetry_elements({n, n}, GroupTag::D4));
    const auto structural = burnside_first_principles({n, n}, GroupTag::D4);
    CHECK(direct.fixed_counts == structural.fixed_counts);
    CHECK(direct.orbit_count == structural.result.value);
  }
  for (int m = 2; m <= 4; ++m) {
    for (int n = m + 1; 2 * (m + n - 2) <= 16; ++n) {
      const auto tilings = enumerate_ring_tilings(ring_length({m, n}));
      const auto direct = orbit_count_direct(tilings, symmetry_elements({m, n}, GroupTag::C2));
      const auto structural = burnside_first_principles({m, n}, GroupTag::C2);
      CHECK(direct.fixed_counts == structural.fixed_counts);
    }
  }
}

TEST_CASE("closed forms match burnside everywhere tested") {
  for (int n = 2; n <= 12; ++n) {
    CHECK(count_square_rotational(n).value ==
          burnside_first_principles({n, n}, GroupTag::C4).result.value);
    CHECK(count_square_dihedral(n).value ==
          burnside_first_principles({n, n}, GroupTag::D4).result.value);
  }
  // Larger n exercise the exact-division assertions inside every call.
  for (int n = 13; n <= 40; ++n) {
    CHECK_NOTHROW(count_square_rotational(n));
    CHECK_NOTHROW(count_square_dihedral(n));
    CHECK_NOTHROW(burnside_first_principles({n, n}, GroupTag::D4));
  }
}

TEST_CASE("name tables and CountResult JSON") {
  CHECK(std::string(name_of(Equivalence::None)) == "none");
  CHECK(std::string(name_of(Equivalence::Rotational)) == "rotational");
  CHECK(std::string(name_of(Equivalence::Dihedral)) == "dihedral");
  CHECK(std::string(name_of(CountMethod::ClosedForm)) == "closed_form");
  CHECK(std::string(name_of(CountMethod::TransferMatrix)) == "transfer_matrix");
  CHECK(std::string(name_of(CountMethod::BurnsideFirstPrinciples)) == "burnside_first_principles");
  CHECK(std::string(name_of(CountMethod::Oracle)) == "oracle");

  for (const char* name : {"none", "rotational", "dihedral"}) {
    CHECK(std::string(name_of(equivalence_from_name(name))) == name);
  }
  CHECK_THROWS_AS(equivalence_from_name("c4"), std::invalid_argument);
  CHECK_THROWS_AS(method_from_name("magic"), std::invalid_argument);

  const Json j = to_json(count_square_border(3));
  CHECK(j.at("m") == 3);
  CHECK(j.at("n") == 3);
  CHECK(j.at("equivalence") == "none");
  CHECK(j.at("method") == "closed_form");
  CHECK(j.at("value") == "47");
  CHECK(j.at("value").is_string());
}
