#include <catch2/catch_amalgamated.hpp>

#include "qpde/generators.hpp"

using namespace qpde;

namespace {

// z^{num/2} with the grid picked by parity.
ZPoly zhalf(Cyclo c, long long num) {
    return num % 2 == 0 ? ZPoly::monomial(std::move(c), num / 2, 1)
                        : ZPoly::monomial(std::move(c), num, 2);
}

QSeries zmono(Cyclo c, long long znum, const Rat& e) {
    return QSeries::monomial(RatCoeff(zhalf(std::move(c), znum)), e);
}

const QSeries kOne = QSeries::constant(RatCoeff::one());

void check_equal(const QSeries& a, const QSeries& b, const Rat& through) {
    auto mm = QSeries::first_mismatch(a, b, through);
    if (mm) {
        UNSCOPED_INFO("first mismatch at q^" << format_rat(mm->exponent) << ": "
                                             << mm->lhs.str() << " vs " << mm->rhs.str());
    }
    CHECK(!mm);
}

RatCoeff rat_const(const Rat& r) { return RatCoeff(Cyclo(r)); }

}  // namespace

TEST_CASE("eta expands through the pentagonal sum") {
    auto e1 = eta_series(1, 15);
    const Rat off(1, 24);
    CHECK(e1.coeff(off) == RatCoeff::one());
    CHECK(e1.coeff(off + 1) == rat_const(-1));
    CHECK(e1.coeff(off + 2) == rat_const(-1));
    CHECK(e1.coeff(off + 3) == RatCoeff::zero());
    CHECK(e1.coeff(off + 5) == RatCoeff::one());
    CHECK(e1.coeff(off + 7) == RatCoeff::one());
    CHECK(e1.coeff(off + 12) == rat_const(-1));
    CHECK(e1.low_bound() == off);

    CHECK(eta_series(2, 10).low_bound() == Rat(1, 12));
    CHECK(eta_series(2, 10).coeff(Rat(1, 12)) == RatCoeff::one());

    // Product form of the same function.
    auto prod = euler_product(Cyclo::one(), 0, 1, 1, 15).shifted_q(Rat(1, 24));
    check_equal(e1, prod, 15);

    // Coefficient query past the truncation point must refuse.
    CHECK_THROWS_AS(e1.coeff(Rat(17)), OrderExceedsTruncation);
}

TEST_CASE("cube of eta equals the signed odd-weight sum") {
    // sum over n of (-1)^n (n + 1/2) q^{(2n+1)^2/8} = eta^3, the normalized
    // form of the theta derivative evaluated at the origin.
    QSeries sum = QSeries::truncated_zero(21, Rat(1, 8));
    for (long long n = -7; n <= 6; ++n) {
        const Rat e = Rat((2 * n + 1) * (2 * n + 1), 8);
        if (e > 20) continue;
        Rat v(2 * n + 1, 2);
        if (n % 2 != 0) v = -v;
        sum += QSeries::monomial(rat_const(v), e);
    }
    check_equal(sum, eta_pow(1, 3, 20), 20);

    // And the same statement reached through the z-derivative of theta.
    auto dz_at_one = theta_series(1, 1, 20).delta_z().at_z_one();
    check_equal(dz_at_one.scaled(-Cyclo::imag_unit()), eta_pow(1, 3, 20), 20);
}

TEST_CASE("theta leading block and symmetries") {
    auto th = theta_series(1, 1, 15);
    RatCoeff lead(zhalf(Cyclo::imag_unit(), 1) - zhalf(Cyclo::imag_unit(), -1));
    CHECK(th.coeff(Rat(1, 8)) == lead);
    CHECK(th.low_bound() == Rat(1, 8));

    // Odd in z: vanishes at z = 1 and flips under z -> 1/z.
    CHECK(th.at_z_one().is_zero());
    check_equal(th.substitute({Rat(0), -1, Rat(0), 1}), -th, 15);

    // Full period in u flips the sign on the half-integer z-grid.
    check_equal(th.substitute({Rat(1), 1, Rat(0), 1}), -th, 15);
}

TEST_CASE("even and odd theta companions") {
    auto t0 = theta01_series(0, 0, 0, 0, 2, 12);
    CHECK(t0.coeff(0) == RatCoeff::one());
    CHECK(t0.coeff(1) == rat_const(2));
    CHECK(t0.coeff(2) == RatCoeff::zero());
    CHECK(t0.coeff(4) == rat_const(2));
    CHECK(t0.coeff(9) == rat_const(2));

    auto t1 = theta01_series(1, 0, 0, 0, 2, 12);
    CHECK(t1.low_bound() == Rat(1, 4));
    CHECK(t1.coeff(Rat(1, 4)) == rat_const(2));
    CHECK(t1.coeff(Rat(1, 4) + 2) == rat_const(2));
    CHECK(t1.coeff(Rat(1, 4) + 6) == rat_const(2));
    CHECK(t1.coeff(Rat(1, 4) + 4) == RatCoeff::zero());

    // With a doubled elliptic argument the even member is z-symmetric.
    auto te = theta01_series(0, 2, 0, 0, 2, 12);
    check_equal(te.substitute({Rat(0), -1, Rat(0), 1}), te, 12);
}

TEST_CASE("a-series weights") {
    CHECK(a_series(0, 0, 0, 10).is_zero());
    CHECK(a_series(1, 0, 0, 10).is_zero());

    auto a0 = a_series(0, Rat(1, 2), 0, 6);
    CHECK(a0.coeff(0) == rat_const(Rat(1, 4)));
    CHECK(a0.coeff(Rat(1, 2)) == rat_const(Rat(-3, 4)));
    CHECK(a0.coeff(Rat(3, 2)) == rat_const(Rat(5, 4)));
    CHECK(a0.coeff(3) == rat_const(Rat(-7, 4)));
    CHECK(a0.coeff(5) == rat_const(Rat(9, 4)));
    CHECK(a0.coeff(1) == RatCoeff::zero());
}

TEST_CASE("triple product inverse really inverts theta") {
    auto prod3 = theta_series(3, 3, 12) * theta_inverse(3, 3, 12);
    check_equal(prod3, kOne, 11);

    // Against the generic series inverse (whose rational coefficients grow,
    // which is exactly why the closed form exists).
    auto generic = theta_series(1, 1, 9).inverse(Rat(8));
    check_equal(theta_inverse(1, 1, 7), generic, 7);
}

namespace {
void check_mu_translation(long long c, const Rat& k, const Rat& alpha, const Rat& beta,
                          const Rat& through) {
    const Rat shift_e = alpha - k / 2;
    auto m0 = mu_series(c, k, alpha, beta, through + 1);
    auto m1 = mu_series(c, k, alpha, beta, through + 1 - std::min(shift_e, Rat(0)), 1);
    auto lhs = m0 + QSeries::monomial(RatCoeff(ZPoly::monomial(Cyclo::root_phase(beta), -c, 1)),
                                      shift_e) *
                        m1;
    auto rhs = zmono(-Cyclo::imag_unit() * Cyclo::root_phase(beta / 2), -c,
                     alpha / 2 - k / 8);
    check_equal(lhs, rhs, through);
}
}  // namespace

TEST_CASE("mu translation laws") {
    // Shift by one period of the modulus collapses to a single monomial.
    check_mu_translation(1, 1, Rat(1, 2), 0, 8);
    check_mu_translation(1, 2, 1, 0, 8);
    check_mu_translation(2, 4, 3, 0, 8);
    check_mu_translation(1, 1, Rat(1, 2), Rat(1, 2), 6);

    // Shift by a full period in u only flips the sign.
    auto m = mu_series(1, 2, 1, 0, 8);
    check_equal(m.substitute({Rat(1), 1, Rat(0), 1}), -m, 8);

    // A vanishing theta denominator is refused.
    CHECK_THROWS_AS(mu_series(1, 1, 0, 0, 5), ThetaDenominatorVanishes);
    CHECK_THROWS_AS(mu_series(1, 2, -2, 3, 5), ThetaDenominatorVanishes);
}

TEST_CASE("modified rank reassembles from Appell pieces") {
    const Cyclo i = Cyclo::imag_unit();
    auto t1 = zmono(i, -3, Rat(-1, 8)) * mu_series(3, 3, -1, 0, 12);
    auto t2 = zmono(i, 1, Rat(-1, 8)) * mu_series(3, 3, 1, 0, 12);
    auto t3 = zmono(i, -1, Rat(1, 24)) * eta_pow(3, 3, 12) * eta_pow(1, -1, 12) *
              theta_inverse(3, 3, 12);
    check_equal(t1 - t2 - t3, rstar_series(10), 10);
}

TEST_CASE("rank counts partitions by largest part minus length") {
    auto r = rank_series(RankForm::Eulerian, 25);

    ZPoly q4 = ZPoly::one() + ZPoly::monomial(Cyclo::one(), 3, 1) +
               ZPoly::monomial(Cyclo::one(), 1, 1) + ZPoly::monomial(Cyclo::one(), -1, 1) +
               ZPoly::monomial(Cyclo::one(), -3, 1);
    CHECK(r.coeff(4) == RatCoeff(q4));

    // Both closed forms agree, the coefficients are z-symmetric, and the
    // specializations hit the partition and mock theta series.
    check_equal(r, rank_series(RankForm::Lerch, 25), 25);
    check_equal(r, r.substitute({Rat(0), -1, Rat(0), 1}), 25);
    check_equal(r.at_z_one(), partition_series(25), 25);
    check_equal(r.substitute({Rat(1, 2), 1, Rat(0), 1}).at_z_one(), mock_f_series(25), 25);
}

TEST_CASE("crank series and its modified form") {
    auto c = crank_series(15);
    ZPoly q1 = ZPoly::monomial(Cyclo::one(), 1, 1) - ZPoly::one() +
               ZPoly::monomial(Cyclo::one(), -1, 1);
    ZPoly q2 = ZPoly::monomial(Cyclo::one(), 2, 1) + ZPoly::monomial(Cyclo::one(), -2, 1);
    CHECK(c.coeff(1) == RatCoeff(q1));
    CHECK(c.coeff(2) == RatCoeff(q2));
    check_equal(c.at_z_one(), partition_series(15), 15);

    const RatCoeff one_minus_z(ZPoly::one() - ZPoly::monomial(Cyclo::one(), 1, 1));
    check_equal(cstar_series(15) * QSeries::constant(one_minus_z), c, 15);
}

TEST_CASE("mock theta f has the signed Eulerian expansion") {
    auto f = mock_f_series(12);
    const long long want[] = {1, 1, -2, 3, -3, 3, -5};
    for (long long n = 0; n <= 6; ++n) CHECK(f.coeff(n) == rat_const(want[n]));
}

TEST_CASE("deviation rank families match their Eulerian sums") {
    const RatCoeff one_minus_z(ZPoly::one() - ZPoly::monomial(Cyclo::one(), 1, 1));
    for (auto v : {NdeVariant::Overpartition, NdeVariant::M2Over, NdeVariant::M2NoRepeatOdd}) {
        auto recombined = nde_series(v, 12) * QSeries::constant(one_minus_z);
        check_equal(recombined, nde_eulerian(v, 12), 12);
    }
}

TEST_CASE("deviation rank families match their Appell closed forms") {
    const Cyclo i = Cyclo::imag_unit();
    const RatCoeff inv_1pz(ZPoly::one(),
                           ZPoly::one() + ZPoly::monomial(Cyclo::one(), 1, 1));

    auto m2o = QSeries::constant(inv_1pz) *
               (zmono(i.scaled(Rat(-2)), 1, Rat(-1, 4)) * mu_series(1, 2, 1, 0, 11) + kOne);
    check_equal(m2o, nde_series(NdeVariant::M2Over, 10), 10);

    auto m2n = mu_series(2, 4, 1, 0, 11).scaled(-i) +
               QSeries::monomial(RatCoeff(ZPoly::monomial(-i, 1, 1)), Rat(-1)) *
                   mu_series(2, 4, 3, 0, 12) +
               kOne;
    check_equal(m2n, nde_series(NdeVariant::M2NoRepeatOdd, 10), 10);
}

TEST_CASE("odd Durfee generating function") {
    auto ro = rodd_series(12);
    CHECK(ro.coeff(1) == RatCoeff::one());
    ZPoly q2 = ZPoly::monomial(Cyclo::one(), 1, 1) + ZPoly::monomial(Cyclo::one(), -1, 1);
    CHECK(ro.coeff(2) == RatCoeff(q2));

    // R-odd sits inside the modified rank at (zq; q^2).
    auto sub = rstar_series(15).substitute({Rat(0), 1, Rat(1), 2}, Rat(13));
    auto rhs = (sub - kOne) *
               QSeries::constant(RatCoeff(ZPoly::monomial(Cyclo::one(), -1, 1)));
    check_equal(ro, rhs, 12);

    // z = 1 column counts symbols: nonnegative integers.
    auto at1 = rodd_series(20).at_z_one();
    for (long long n = 1; n <= 20; ++n) {
        const Cyclo v = at1.coeff(n).eval_at_one();
        REQUIRE(v.is_rational());
        CHECK(v.rational() >= 0);
        CHECK(is_integer(v.rational()));
    }
}

TEST_CASE("partition series from the pentagonal inverse") {
    auto p = partition_series(9);
    const long long want[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (long long n = 0; n <= 9; ++n) CHECK(p.coeff(n) == rat_const(want[n]));
}

TEST_CASE("generator specs dispatch to the same constructors") {
    GeneratorSpec g;
    g.kind = GeneratorKind::Eta;
    g.k = 2;
    g.order = 8;
    check_equal(build(g), eta_series(2, 8), 8);

    g = GeneratorSpec{};
    g.kind = GeneratorKind::Mu;
    g.c = 1;
    g.k = 2;
    g.alpha = 1;
    g.order = 6;
    check_equal(build(g), mu_series(1, 2, 1, 0, 6), 6);

    g = GeneratorSpec{};
    g.kind = GeneratorKind::NDE;
    g.nde = NdeVariant::M2Over;
    g.order = 6;
    check_equal(build(g), nde_series(NdeVariant::M2Over, 6), 6);

    g = GeneratorSpec{};
    g.kind = GeneratorKind::RankLerch;
    g.order = 8;
    check_equal(build(g), rank_series(RankForm::Lerch, 8), 8);
}
