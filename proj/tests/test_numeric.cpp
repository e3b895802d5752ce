#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "qpde/numeric.hpp"

using namespace qpde;
using CD = std::complex<double>;

namespace {

const CD I{0, 1};

ComplexPoint at(CD u, CD tau, double tol = 1e-9) {
    ComplexPoint pt;
    pt.u = u;
    pt.tau = tau;
    pt.tol = tol;
    return pt;
}

ComplexPoint at2(CD u, CD v, CD tau, double tol = 1e-9) {
    ComplexPoint pt = at(u, tau, tol);
    pt.v = v;
    return pt;
}

}  // namespace

TEST_CASE("theta vanishes at the origin and is odd") {
    CHECK(std::abs(eval_theta(at(0, I))) < 1e-9);
    const CD u{0.31, 0.12};
    const CD tau{0.2, 1.3};
    CHECK(std::abs(eval_theta(at(-u, tau)) + eval_theta(at(u, tau))) < 1e-13);
}

TEST_CASE("eta matches its closed value at i and the raw product elsewhere") {
    // eta(i) = Gamma(1/4) / (2 pi^{3/4})
    CHECK(std::abs(eval_eta(I, 1e-12) - 0.7682254223260566) < 1e-12);

    for (CD tau : {CD{0, 2}, CD{0.3, 0.8}, CD{-0.1, 1.7}}) {
        const CD q = std::exp(CD(0, 2 * num_detail::kPi) * tau);
        CD prod = std::pow(q, 1.0 / 24);
        for (int n = 1; n < 60; ++n) prod *= 1.0 - std::pow(q, n);
        CHECK(std::abs(eval_eta(tau, 1e-12) - prod) < 1e-11);
    }
}

TEST_CASE("numerically differentiated theta'(0) equals -2 pi eta^3") {
    const CD eta3 = std::pow(eval_eta(I, 1e-14), 3);
    const CD dth = num_detail::diff1(
        [&](CD u) { return num_detail::theta(u, I, 1e-15); }, CD{0, 0}, 1e-3);
    CHECK(std::abs(dth + 2 * num_detail::kPi * eta3) < 1e-8);
}

TEST_CASE("numeric evaluators agree with the exact series engine") {
    const CD u{0.13, 0.07};
    const CD tau{0, 1.1};

    auto th_exact = eval_series(theta_series(1, 1, 15), u, tau);
    CHECK(std::abs(th_exact - eval_theta(at(u, tau, 1e-13))) < 1e-12);

    auto eta_exact = eval_series(eta_series(1, 15), u, tau);
    CHECK(std::abs(eta_exact - eval_eta(tau, 1e-13)) < 1e-12);

    // mu(u, tau/2; tau) against the alpha = 1/2 exact expansion
    auto mu_exact = eval_series(mu_series(1, 1, Rat(1, 2), 0, 15), u, tau);
    auto mu_num = eval_mu(at2(u, 0.5 * tau, tau, 1e-13));
    CHECK(std::abs(mu_exact - mu_num) < 1e-12);

    auto a_exact = eval_series(a_series(1, Rat(1, 2), 0, 15), u, tau);
    CHECK(std::abs(a_exact - eval_a(1, 0.5, 0, tau, 1e-13)) < 1e-12);

    auto t01_exact = eval_series(theta01_series(0, 1, Rat(1, 3), 0, 2, 15), u, tau);
    // theta01_series bakes in the alpha tau + beta offset and the 2 tau modulus
    CHECK(std::abs(t01_exact -
                   eval_theta01(0, at(u + tau / 3.0, 2.0 * tau, 1e-13))) < 1e-12);
}

TEST_CASE("mu translation laws hold pointwise") {
    const ComplexPoint pt = at2({0.23, 0.11}, {-0.17, 0.29}, {0.1, 1.2});
    const CD m = eval_mu(pt);
    ComplexPoint shifted = pt;
    shifted.u += 1.0;
    CHECK(std::abs(eval_mu(shifted) + m) < 1e-9);

    auto res = numeric_check("prop22", 0, 0, {pt});
    REQUIRE(res.size() == 1);
    CHECK(res[0].abs_err < 1e-9);
}

TEST_CASE("theta translation laws hold pointwise") {
    auto res = numeric_check("prop21", 0, 0, {at({0.19, -0.23}, {0.4, 0.9})});
    REQUIRE(res.size() == 1);
    CHECK(res[0].abs_err < 1e-8);
}

TEST_CASE("residue of mu at u = 0 extrapolates to -1/(2 pi i theta(v))") {
    for (CD v : {CD{0.31, 0.17}, CD{-0.25, 0.4}}) {
        const CD tau{0.1, 1.1};
        const CD want = -1.0 / (2.0 * num_detail::kPi * I * eval_theta(at(v, tau, 1e-14)));
        CHECK(std::abs(eval_mu_residue(v, tau, 1e-9) - want) < 1e-6);
    }
}

TEST_CASE("theta addition lemma holds to near machine precision") {
    auto res = numeric_check("theta-lemma", 0, 0,
                             {at2({0.21, 0.13}, {-0.34, 0.09}, {0, 1}),
                              at2({0.05, -0.42}, {0.3, 0.25}, {0.35, 0.85})});
    for (const auto& r : res) CHECK(r.abs_err < 1e-10);
}

TEST_CASE("wronskian of the theta halves holds pointwise") {
    for (auto [al, be] : {std::pair{0.5, 0.0}, {0.0, 0.5}, {1.0 / 3, 0.0}, {0.5, 0.5}}) {
        auto res = numeric_check("wronskian", al, be, {at(0, {0, 1.15})});
        REQUIRE(res.size() == 1);
        CHECK(res[0].abs_err < 1e-10);
    }
}

TEST_CASE("mainequation residuals stay under budget at rational parameters") {
    const std::vector<ComplexPoint> pts = {at({0.13, 0.07}, {0, 1.1}),
                                           at({-0.08, 0.21}, {0.3, 0.9})};
    for (auto [al, be] : {std::pair{0.5, 0.0}, {0.0, 0.5}}) {
        for (const auto& r : numeric_check("mainequation", al, be, pts)) {
            UNSCOPED_INFO("alpha=" << al << " beta=" << be << " err=" << r.abs_err);
            CHECK(r.abs_err < 1e-6);
            CHECK(r.abs_err == std::abs(r.lhs - r.rhs));
        }
    }
}

TEST_CASE("mainequation residuals at an irrational alpha") {
    const double al = 0.70710678118654752;  // sqrt(2)/2
    auto res = numeric_check("mainequation", al, 0, {at({0.13, 0.07}, {0, 1.3})});
    REQUIRE(res.size() == 1);
    CHECK(res[0].abs_err < 1e-5);
}

TEST_CASE("halving the tolerance does not degrade the residual") {
    auto coarse = numeric_check("mainequation", 0.5, 0, {at({0.13, 0.07}, {0, 1.1}, 1e-9)});
    auto fine = numeric_check("mainequation", 0.5, 0, {at({0.13, 0.07}, {0, 1.1}, 5e-10)});
    CHECK(fine[0].abs_err < coarse[0].abs_err + 1e-7);
}

TEST_CASE("pole guards and domain checks reject bad points") {
    CHECK_THROWS_AS(eval_mu(at2(0, {0.3, 0.2}, I)), PoleProximity);
    CHECK_THROWS_AS(eval_mu(at2({0.3, 0.2}, {1.0, 0.0}, I)), PoleProximity);
    ComplexPoint near_tau = at2(CD{0, 1.0000000001}, {0.3, 0.2}, I, 1e-4);
    CHECK_THROWS_AS(eval_mu(near_tau), PoleProximity);
    CHECK_THROWS_AS(eval_eta({1.0, 0.0}, 1e-9), BadInput);
    CHECK_THROWS_AS(eval_eta({0.5, -1.0}, 1e-9), BadInput);
    CHECK_THROWS_AS(eval_theta01(2, at(0, I)), BadInput);
    CHECK_THROWS_AS(numeric_check("no-such", 0, 0, {}), UnknownIdentity);
    CHECK_THROWS_AS(eval_eta({0.0, 1e-10}, 1e-12), ToleranceUnreachable);
}

TEST_CASE("evaluator core widens to long double") {
    using CL = std::complex<long double>;
    const CD d = num_detail::theta(CD{0.3, 0.1}, CD{0, 1}, 1e-14);
    const CL l = num_detail::theta(CL{0.3L, 0.1L}, CL{0.0L, 1.0L}, 1e-16);
    CHECK(std::abs(d - CD(static_cast<double>(l.real()), static_cast<double>(l.imag()))) <
          1e-13);
}
