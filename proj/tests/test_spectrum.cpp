#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "diracwell/errors.hpp"
#include "diracwell/spectrum.hpp"

using namespace diracwell;

namespace {

const BoundState* find_state(const std::vector<BoundState>& states, Branch branch,
                             int n) {
    for (const BoundState& s : states) {
        if (s.branch == branch && s.n == n) return &s;
    }
    return nullptr;
}

}  // namespace

TEST_CASE("interior state count per branch across well shapes") {
    CHECK(klein_n_max(WellParams(1.0, 5.0, 1.0)) == 1);
    CHECK(klein_n_max(WellParams(1.0, 5.0, 10.0)) == 12);
    CHECK(klein_n_max(WellParams(1.0, 2.5, 1.0)) == 0);
    CHECK(klein_n_max(WellParams(1.0, 50.0, 1.0)) == 15);
    CHECK(klein_n_max(WellParams(1.0, 500.0, 1.0)) == 158);
    CHECK(klein_n_max(WellParams(1000.0, 5000.0, 1.0)) == 1232);
    CHECK_THROWS_AS(klein_n_max(WellParams(1.0, 2.0, 1.0)), NoKleinZoneError);
}

TEST_CASE("frozen quantization-function value") {
    const WellParams w(1.0, 5.0, 1.0);
    CHECK(klein_condition(-2.0, w) ==
          doctest::Approx(-0.60815003656185797).epsilon(1e-13));
}

TEST_CASE("closed-form spectrum of the unit deep well") {
    const WellParams w(1.0, 5.0, 1.0);
    const auto states = klein_spectrum(w);
    REQUIRE(states.size() == 4);  // n = 0, 1 on each branch

    const BoundState* ka1 = find_state(states, Branch::KleinKa, 1);
    REQUIRE(ka1 != nullptr);
    CHECK(ka1->E == doctest::Approx(-3.2969083094756152).epsilon(1e-15));
    CHECK(ka1->E == -std::sqrt(1.0 + std::numbers::pi * std::numbers::pi));
    CHECK(ka1->parity_sign == 1);
    CHECK_FALSE(ka1->edge);
    CHECK(ka1->wall_relation() == WallRelation::Sigma3);
    CHECK(ka1->selected_by() == "sigma3_wall_relation");
    CHECK(ka1->k == doctest::Approx(std::numbers::pi).epsilon(1e-13));

    const BoundState* pa1 = find_state(states, Branch::KleinPa, 1);
    REQUIRE(pa1 != nullptr);
    CHECK(pa1->E == doctest::Approx(-1.7030916905243848).epsilon(1e-15));
    CHECK(pa1->parity_sign == -1);
    CHECK(pa1->wall_relation() == WallRelation::Identity);
    CHECK(pa1->selected_by() == "identity_wall_relation");
    CHECK(pa1->p == doctest::Approx(std::numbers::pi).epsilon(1e-13));

    // n = 0 states sit exactly on the zone boundaries
    const BoundState* ka0 = find_state(states, Branch::KleinKa, 0);
    const BoundState* pa0 = find_state(states, Branch::KleinPa, 0);
    REQUIRE(ka0 != nullptr);
    REQUIRE(pa0 != nullptr);
    CHECK(ka0->edge);
    CHECK(ka0->E == -1.0);
    CHECK(pa0->edge);
    CHECK(pa0->E == -4.0);

    for (std::size_t i = 1; i < states.size(); ++i) {
        CHECK(states[i].E >= states[i - 1].E);
    }
}

TEST_CASE("frozen spectrum values of the wide well") {
    const WellParams w(1.0, 5.0, 10.0);
    const auto states = klein_spectrum(w);
    REQUIRE(states.size() == 26);
    CHECK(find_state(states, Branch::KleinKa, 1)->E ==
          doctest::Approx(-1.0481870272097884).epsilon(1e-15));
    CHECK(find_state(states, Branch::KleinKa, 2)->E ==
          doctest::Approx(-1.1810098120013967).epsilon(1e-15));
    CHECK(find_state(states, Branch::KleinKa, 3)->E ==
          doctest::Approx(-1.3741413304671548).epsilon(1e-15));
    CHECK(find_state(states, Branch::KleinPa, 12)->E ==
          doctest::Approx(-1.0997140697676181).epsilon(1e-15));
    CHECK(find_state(states, Branch::KleinPa, 11)->E ==
          doctest::Approx(-1.4024701077936651).epsilon(1e-15));
}

TEST_CASE("depth-free branch energies are bit-identical across depths") {
    const WellParams w5(1.0, 5.0, 1.0);
    const WellParams w50(1.0, 50.0, 1.0);
    const WellParams w500(1.0, 500.0, 1.0);
    const double e5 = find_state(klein_spectrum(w5), Branch::KleinKa, 1)->E;
    const double e50 = find_state(klein_spectrum(w50), Branch::KleinKa, 1)->E;
    const double e500 = find_state(klein_spectrum(w500), Branch::KleinKa, 1)->E;
    CHECK(e5 == e50);
    CHECK(e50 == e500);
    // the companion branch does move with the depth
    CHECK(find_state(klein_spectrum(w5), Branch::KleinPa, 1)->E !=
          find_state(klein_spectrum(w50), Branch::KleinPa, 1)->E);
}

TEST_CASE("scan recovers the closed-form interior roots") {
    const WellParams w(1.0, 5.0, 1.0);
    const auto roots = scan_klein_roots(w);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].E == doctest::Approx(-3.2969083094756152).epsilon(1e-12));
    CHECK(roots[0].from_ka);
    CHECK_FALSE(roots[0].from_pa);
    CHECK(roots[1].E == doctest::Approx(-1.7030916905243848).epsilon(1e-12));
    CHECK(roots[1].from_pa);
    CHECK_FALSE(roots[1].from_ka);
}

TEST_CASE("scan of the wide well finds every root of both branches") {
    const WellParams w(1.0, 5.0, 10.0);
    const auto roots = scan_klein_roots(w);
    CHECK(roots.size() == 24);
    const auto states = klein_spectrum(w);
    // every interior closed-form state matches a scanned root
    for (const BoundState& s : states) {
        if (s.edge) continue;
        bool matched = false;
        for (const KleinRoot& r : roots) {
            if (std::fabs(r.E - s.E) < 1e-10) {
                matched = true;
                CHECK((s.branch == Branch::KleinKa ? r.from_ka : r.from_pa));
            }
        }
        CHECK(matched);
    }
}

TEST_CASE("coincident-energy doublets are detected by both routes") {
    // At a = pi and V = sqrt(5) + sqrt(2) the two branches cross: each
    // produces the energies -sqrt(2) and -sqrt(5), with swapped indices.
    const WellParams w(1.0, std::sqrt(5.0) + std::sqrt(2.0), std::numbers::pi);
    CHECK(klein_n_max(w) == 2);
    const auto states = klein_spectrum(w);
    REQUIRE(states.size() == 6);
    const BoundState* ka1 = find_state(states, Branch::KleinKa, 1);
    const BoundState* pa2 = find_state(states, Branch::KleinPa, 2);
    REQUIRE(ka1 != nullptr);
    REQUIRE(pa2 != nullptr);
    CHECK(ka1->E == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
    CHECK(pa2->E == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
    CHECK(ka1->coincident);
    CHECK(pa2->coincident);
    CHECK(find_state(states, Branch::KleinKa, 2)->coincident);
    CHECK(find_state(states, Branch::KleinPa, 1)->coincident);
    CHECK_FALSE(find_state(states, Branch::KleinKa, 0)->coincident);

    const auto roots = scan_klein_roots(w);
    REQUIRE(roots.size() == 2);
    for (const KleinRoot& r : roots) {
        CHECK(r.from_ka);
        CHECK(r.from_pa);
    }
    CHECK(roots[0].E == doctest::Approx(-std::sqrt(5.0)).epsilon(1e-12));
    CHECK(roots[1].E == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("wall relations hold at spectral energies with the predicted sign") {
    const WellParams w(1.0, 5.0, 1.0);

    SUBCASE("depth-free branch state") {
        const BoundaryCheck c = verify_boundary_condition(-3.2969083094756152, w);
        CHECK(c.passed);
        CHECK(c.residual < 1e-10);
        CHECK(c.relation == WallRelation::Sigma3);
        CHECK(c.sign == 1);
        // the identity relation does not fit this state
        CHECK(c.residual_identity_plus > 1e-2);
        CHECK(c.residual_identity_minus > 1e-2);
    }

    SUBCASE("companion branch state") {
        const BoundaryCheck c = verify_boundary_condition(-1.7030916905243848, w);
        CHECK(c.passed);
        CHECK(c.residual < 1e-10);
        CHECK(c.relation == WallRelation::Identity);
        CHECK(c.sign == -1);
        CHECK(c.residual_sigma3_plus > 1e-2);
        CHECK(c.residual_sigma3_minus > 1e-2);
    }

    SUBCASE("non-spectral energies fail every combination") {
        for (double E : {-2.0, -2./7., -3.0, -3.77}) {
            const BoundaryCheck c = verify_boundary_condition(E, w);
            CHECK_FALSE(c.passed);
            CHECK(c.residual > 1e-3);
        }
    }

    SUBCASE("zones without bound candidates are rejected") {
        CHECK_THROWS_AS(verify_boundary_condition(2.0, w), WrongRegimeError);
        CHECK_THROWS_AS(verify_boundary_condition(-4.5, w), WrongRegimeError);
        CHECK_THROWS_AS(verify_boundary_condition(-6.5, w), WrongRegimeError);
        CHECK_THROWS_AS(verify_boundary_condition(0.0, w), WrongRegimeError);
    }
}

TEST_CASE("invalid wall-relation sign is rejected") {
    const WellParams w(1.0, 5.0, 1.0);
    const PiecewiseWave wave = solve_regime(0.5, w).wave;
    CHECK_THROWS_AS(wall_relation_residual(wave, WallRelation::Sigma3, 0),
                    std::invalid_argument);
}

TEST_CASE("conventional spectrum of the narrow deep well has one state") {
    const WellParams w(1.0, 5.0, 1.0);
    const auto states = conventional_spectrum(w);
    REQUIRE(states.size() == 1);
    const BoundState& s = states[0];
    CHECK(s.E == doctest::Approx(0.0072321001194568184).epsilon(1e-11));
    CHECK(s.branch == Branch::Conventional);
    CHECK(s.n == 1);
    CHECK(s.parity_sign == -1);
    CHECK(s.selected_by() == "continuity_determinant");
    CHECK(s.p * w.a == doctest::Approx(4.9063604947523685).epsilon(1e-10));

    const BoundaryCheck c = verify_boundary_condition(s.E, w);
    CHECK(c.passed);
    CHECK(c.relation == WallRelation::Sigma3);
    CHECK(c.sign == -1);
}

TEST_CASE("frozen conventional spectrum of the wide well") {
    const WellParams w(1.0, 5.0, 10.0);
    const auto states = conventional_spectrum(w);
    REQUIRE(states.size() == 7);
    const double expected[7] = {
        -0.83941420916834653, -0.56670756180648469, -0.28823769837287273,
        -0.0083509396728711928, 0.27080213840174602, 0.54680094307187477,
        0.81425512469156587,
    };
    const int expected_n[7] = {12, 13, 14, 15, 16, 17, 18};
    for (int i = 0; i < 7; ++i) {
        CHECK(states[i].E == doctest::Approx(expected[i]).epsilon(1e-11));
        CHECK(states[i].n == expected_n[i]);
        CHECK(states[i].parity_sign == ((expected_n[i] % 2 == 0) ? 1 : -1));
        const BoundaryCheck c = verify_boundary_condition(states[i].E, w);
        CHECK(c.passed);
        CHECK(c.relation == WallRelation::Sigma3);
        CHECK(c.sign == states[i].parity_sign);
    }
}

TEST_CASE("a vanishingly narrow well binds nothing away from the boundaries") {
    const WellParams w(1.0, 5.0, 1e-4);
    CHECK(conventional_spectrum(w).empty());
}

TEST_CASE("deep levels approach the nonrelativistic infinite-well ladder") {
    const WellParams w(1000.0, 5000.0, 1.0);
    const auto states = klein_spectrum(w);
    const BoundState* s1 = find_state(states, Branch::KleinKa, 1);
    REQUIRE(s1 != nullptr);
    CHECK(s1->E == doctest::Approx(-1000.0049347900245).epsilon(1e-15));
    const NonrelComparison c1 = nonrelativistic_limit(*s1, w);
    CHECK(c1.binding == doctest::Approx(0.0049347900244683865).epsilon(1e-9));
    CHECK(c1.nonrel_binding == doctest::Approx(0.0049348022005446793).epsilon(1e-13));
    CHECK(c1.rel_error == doctest::Approx(2.4674e-6).epsilon(1e-3));
    CHECK(c1.rel_error < 1e-4);

    const NonrelComparison c2 =
        nonrelativistic_limit(*find_state(states, Branch::KleinKa, 2), w);
    CHECK(c2.rel_error == doctest::Approx(9.8694e-6).epsilon(1e-3));
    const NonrelComparison c3 =
        nonrelativistic_limit(*find_state(states, Branch::KleinKa, 3), w);
    CHECK(c3.rel_error == doctest::Approx(2.2206e-5).epsilon(1e-3));

    const NonrelComparison c0 =
        nonrelativistic_limit(*find_state(states, Branch::KleinKa, 0), w);
    CHECK(c0.rel_error == 0.0);
}
