#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "diracwell/errors.hpp"
#include "diracwell/matching.hpp"

using namespace diracwell;

namespace {

void check_close(const Complex& actual, double re, double im, double eps = 1e-12) {
    CHECK(actual.real() == doctest::Approx(re).epsilon(eps));
    CHECK(actual.imag() == doctest::Approx(im).epsilon(eps));
}

double wall_jump(const PiecewiseWave& wave) {
    const Spinor l0 = wave.eval(Piece::Left, 0.0);
    const Spinor i0 = wave.eval(Piece::Inside, 0.0);
    const Spinor ia = wave.eval(Piece::Inside, wave.a);
    const Spinor ra = wave.eval(Piece::Right, wave.a);
    return std::max((l0 - i0).norm(), (ia - ra).norm());
}

}  // namespace

TEST_CASE("frozen left-incidence coefficients at a reference energy in each transmitting zone") {
    const WellParams w(1.0, 5.0, 1.0);

    SUBCASE("above the well") {
        const SolutionSet s = solve_left_incidence(2.0, w);
        check_close(s.coefficients.at("R"), -0.15352352729530789, 0.18835614421887648);
        check_close(s.coefficients.at("A"), 0.92538938708299302, 0.035964845353875846);
        check_close(s.coefficients.at("B"), 0.044371240459125115, 0.17982422676937923);
        check_close(s.coefficients.at("T"), 0.48418134592542584, -0.84054798421009123);
        CHECK(std::norm(s.coefficients.at("T")) ==
              doctest::Approx(0.94095248950180466).epsilon(1e-12));
    }

    SUBCASE("transmission between the spectra branches") {
        const SolutionSet s = solve_left_incidence(-2.0, w);
        CHECK(s.regime.zone == Zone::KleinZone);
        check_close(s.coefficients.at("R"), -0.12595548884330042, -0.27221943565235819);
        check_close(s.coefficients.at("A"), -0.12081473731218405, -1.0002854359615351);
        check_close(s.coefficients.at("B"), 0.28751441616635324, 0.31078133077351425);
        check_close(s.coefficients.at("T"), -0.25638853684881585, -0.91885619759344293);
        CHECK(std::norm(s.coefficients.at("R")) ==
              doctest::Approx(0.089968206316643158).epsilon(1e-12));
        CHECK(std::norm(s.coefficients.at("T")) ==
              doctest::Approx(0.91003179368335684).epsilon(1e-12));
    }

    SUBCASE("evanescent transmission and the deep continuum") {
        struct Case {
            double E, R2, T2;
        };
        const Case cases[] = {
            {-4.5, 0.62372671075735984, 0.37627328924264016},
            {-5.5, 0.52174329916420535, 0.47825670083579465},
            {-6.5, 0.28164333378997865, 0.71835666621002135},
        };
        for (const auto& c : cases) {
            const SolutionSet s = solve_left_incidence(c.E, w);
            CHECK(std::norm(s.coefficients.at("R")) == doctest::Approx(c.R2).epsilon(1e-11));
            CHECK(std::norm(s.coefficients.at("T")) == doctest::Approx(c.T2).epsilon(1e-11));
        }
    }
}

TEST_CASE("frozen right-incidence coefficients and the shared transmission amplitude") {
    const WellParams w(1.0, 5.0, 1.0);
    const SolutionSet r = solve_right_incidence(-2.0, w);
    check_close(r.coefficients.at("R_hat"), 0.033182448474090565, 0.29810590639889623);
    check_close(r.coefficients.at("A_hat"), -0.40780104430784575, 0.11378876623931672);
    check_close(r.coefficients.at("B_hat"), 0.97048325208231865, -0.27079403903390705);
    check_close(r.coefficients.at("T_hat"), -0.25638853684881585, -0.91885619759344293);

    const SolutionSet l = solve_left_incidence(-2.0, w);
    const Complex diff = l.coefficients.at("T") - r.coefficients.at("T_hat");
    CHECK(std::abs(diff) < 1e-14);
}

TEST_CASE("closed-form coefficients match the generic wall solve") {
    const WellParams w(1.0, 5.0, 1.0);
    const auto cf = klein_closed_form(-2.0, w);
    CHECK(cf.at("q").real() == doctest::Approx(-0.42020410288672876).epsilon(1e-13));
    CHECK(cf.at("q").imag() == 0.0);

    const SolutionSet l = solve_left_incidence(-2.0, w);
    const SolutionSet r = solve_right_incidence(-2.0, w);
    CHECK(std::abs(cf.at("A") - l.coefficients.at("A")) < 1e-13);
    CHECK(std::abs(cf.at("B") - l.coefficients.at("B")) < 1e-13);
    CHECK(std::abs(cf.at("A_hat") - r.coefficients.at("A_hat")) < 1e-13);
    CHECK(std::abs(cf.at("B_hat") - r.coefficients.at("B_hat")) < 1e-13);
    check_close(cf.at("A_total"), -0.52861578162002980, -0.88649666972221840);
    check_close(cf.at("B_total"), 1.2579976682486719, 0.039987291739607196);
}

TEST_CASE("closed form is rejected outside its zone") {
    const WellParams w(1.0, 5.0, 1.0);
    CHECK_THROWS_AS(klein_closed_form(2.0, w), WrongRegimeError);
    CHECK_THROWS_AS(klein_closed_form(-4.5, w), WrongRegimeError);
    const WellParams shallow(1.0, 1.5, 1.0);
    CHECK_THROWS_AS(klein_closed_form(-1.2, shallow), WrongRegimeError);
}

TEST_CASE("reflection plus transmission is unitary across transmitting zones") {
    const WellParams w(1.0, 5.0, 1.0);
    for (double E : {2.0, 3.7, -2.0, -3.3, -4.5, -5.5, -6.5, -8.1}) {
        const SolutionSet s = solve_left_incidence(E, w);
        const double sum =
            std::norm(s.coefficients.at("R")) + std::norm(s.coefficients.at("T"));
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("solved waves are continuous at both walls") {
    const WellParams w(1.0, 5.0, 1.0);
    for (double E : {2.0, -2.0, -4.5, -5.5, -6.5}) {
        CHECK(wall_jump(solve_left_incidence(E, w).wave) < 1e-13);
        CHECK(wall_jump(solve_right_incidence(E, w).wave) < 1e-13);
    }
    const SolutionSet both =
        superpose(solve_left_incidence(-2.0, w), solve_right_incidence(-2.0, w));
    CHECK(wall_jump(both.wave) < 1e-13);
}

TEST_CASE("superposition adds inside amplitudes and keeps every named coefficient") {
    const WellParams w(1.0, 5.0, 1.0);
    const SolutionSet l = solve_left_incidence(-2.0, w);
    const SolutionSet r = solve_right_incidence(-2.0, w);
    const SolutionSet s = superpose(l, r);
    check_close(s.coefficients.at("A_total"), -0.52861578162002980, -0.88649666972221840);
    check_close(s.coefficients.at("B_total"), 1.2579976682486719, 0.039987291739607196);
    CHECK(s.coefficients.count("R") == 1);
    CHECK(s.coefficients.count("R_hat") == 1);
    CHECK(s.coefficients.count("T") == 1);
    CHECK(s.coefficients.count("T_hat") == 1);

    // pointwise: the superposed wave equals the sum of its parts
    for (double x : {-0.8, 0.0, 0.3, 1.0, 1.9}) {
        const Spinor sum = l.wave(x) + r.wave(x);
        const Spinor got = s.wave(x);
        CHECK((got - sum).norm() < 1e-14);
    }
}

TEST_CASE("superposition rejects mismatched inputs") {
    const WellParams w(1.0, 5.0, 1.0);
    const SolutionSet l = solve_left_incidence(-2.0, w);
    const SolutionSet r = solve_right_incidence(-2.1, w);
    CHECK_THROWS_AS(superpose(l, r), MismatchedEnergyError);
    CHECK_THROWS_AS(superpose(l, l), WrongRegimeError);
    const WellParams other(1.0, 5.0, 1.5);
    CHECK_THROWS_AS(superpose(l, solve_right_incidence(-2.0, other)),
                    std::invalid_argument);
    CHECK_NOTHROW(superpose(l, solve_right_incidence(-2.0, w)));
}

TEST_CASE("scattering solves refuse the bound window and vice versa") {
    const WellParams w(1.0, 5.0, 1.0);
    CHECK_THROWS_AS(solve_left_incidence(0.5, w), WrongRegimeError);
    CHECK_THROWS_AS(solve_right_incidence(-0.5, w), WrongRegimeError);
    CHECK_THROWS_AS(solve_regime(2.0, w), WrongRegimeError);
    CHECK_THROWS_AS(solve_regime(-2.0, w), WrongRegimeError);
    CHECK_THROWS_AS(solve_left_incidence(1.0, w), EdgeEnergyError);
}

TEST_CASE("bound solve at the frozen root of the narrow deep well") {
    const WellParams w(1.0, 5.0, 1.0);
    const double E_root = 0.0072321001194568184;
    const SolutionSet s = solve_regime(E_root, w);
    CHECK(s.is_bound_state);
    CHECK(s.bound_residual < 1e-9);
    CHECK(std::abs(s.determinant) < 1e-9);

    const Complex ratio_ba = s.coefficients.at("B") / s.coefficients.at("A");
    check_close(ratio_ba, -0.19275743922611561, 0.98124643674409863, 1e-9);
    CHECK(std::abs(ratio_ba) == doctest::Approx(1.0).epsilon(1e-9));
    const Complex ratio_dc = s.coefficients.at("D") / s.coefficients.at("C");
    check_close(ratio_dc, -2.7182107409419265, 0.0, 1e-9);

    CHECK(wall_jump(s.wave) < 1e-9);
    // null-vector phase convention: the largest coefficient is real positive
    double largest = 0.0;
    for (const auto& [name, c] : s.coefficients) largest = std::max(largest, std::abs(c));
    bool found = false;
    for (const auto& [name, c] : s.coefficients) {
        if (std::abs(c) == largest) {
            CHECK(c.imag() == doctest::Approx(0.0).epsilon(1e-12));
            CHECK(c.real() > 0.0);
            found = true;
            break;
        }
    }
    CHECK(found);
}

TEST_CASE("bound solve away from a root reports a clean non-state") {
    const WellParams w(1.0, 5.0, 1.0);
    const SolutionSet s = solve_regime(0.5, w);
    CHECK_FALSE(s.is_bound_state);
    CHECK(s.bound_residual > 1e-6);
    CHECK(s.determinant.imag() == doctest::Approx(-0.33235248399061836).epsilon(1e-12));
    CHECK(std::abs(s.determinant.real()) < 1e-13);
    CHECK(bound_determinant(-0.5, w).imag() ==
          doctest::Approx(-0.40126162324896452).epsilon(1e-12));
}

TEST_CASE("the determinant is purely imaginary or purely real by inside character") {
    const WellParams deep(1.0, 5.0, 1.0);
    for (double E : {0.9, 0.4, 0.01, -0.3, -0.8}) {
        const Complex det = bound_determinant(E, deep);
        CHECK(std::abs(det.real()) < 1e-13 * (1.0 + std::abs(det)));
        CHECK(bound_determinant_surrogate(E, deep) == det.imag());
    }
    const WellParams shallow(1.0, 0.7, 1.0);  // inside evanescent below E = 0.3
    for (double E : {0.1, -0.2, -0.5, -0.9}) {
        const Complex det = bound_determinant(E, shallow);
        CHECK(std::abs(det.imag()) < 1e-13 * (1.0 + std::abs(det)));
        CHECK(bound_determinant_surrogate(E, shallow) == det.real());
    }
}

TEST_CASE("the surrogate changes sign across the frozen root") {
    const WellParams w(1.0, 5.0, 1.0);
    const double lo = bound_determinant_surrogate(0.002, w);
    const double hi = bound_determinant_surrogate(0.012, w);
    CHECK(lo * hi < 0.0);
}

TEST_CASE("rescaling scales coefficients and wave together") {
    const WellParams w(1.0, 5.0, 1.0);
    const SolutionSet s = solve_regime(0.0072321001194568184, w);
    const Complex c(0.0, 2.0);
    const SolutionSet t = rescaled(s, c);
    CHECK(t.coefficients.at("A") == c * s.coefficients.at("A"));
    CHECK(t.coefficients.at("D") == c * s.coefficients.at("D"));
    const Spinor before = s.wave(0.4);
    const Spinor after = t.wave(0.4);
    CHECK((after - c * before).norm() < 1e-15);
    CHECK(t.determinant == s.determinant);
}

TEST_CASE("a perturbed amplitude ratio is visible in the solved coefficients") {
    const WellParams w(1.0, 5.0, 1.0);
    Kinematics kin = kinematics(-2.0, w);
    kin.beta *= 1.0 + 1e-3;
    const SolutionSet tainted = solve_left_incidence(kin, w);
    const SolutionSet clean = solve_left_incidence(-2.0, w);
    const double shift =
        std::abs(tainted.coefficients.at("T") - clean.coefficients.at("T"));
    CHECK(shift > 1e-5);
}
