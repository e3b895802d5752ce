#pragma once

#include <cmath>
#include <map>
#include <utility>

#include "series.hpp"

namespace qpde {

enum class GeneratorKind {
    Eta,
    PochhammerFinite,
    PochhammerInfinite,
    Theta,
    Theta0,
    Theta1,
    A0,
    A1,
    Mu,
    RankEulerian,
    RankLerch,
    Crank,
    RStar,
    CStar,
    MockF,
    NDE,
    S1,
    S2,
    S3,
    ROdd,
};

enum class NdeVariant { Overpartition, M2Over, M2NoRepeatOdd };
enum class RankForm { Eulerian, Lerch };

// Parameter bundle addressable from the command line: kind plus the argument
// data (z-multiplier c, modulus scale k, characteristic (alpha, beta)) that
// the paper-facing constructors below consume.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::Eta;
    Rat c = 1;
    Rat k = 1;
    Rat alpha = 0;
    Rat beta = 0;
    NdeVariant nde = NdeVariant::Overpartition;
    long long count = 0;  // factor count for the finite Pochhammer kind
    Rat order = 0;
};

namespace gen_detail {

inline double approx(const Rat& r) { return r.convert_to<double>(); }

// Turn a { q-exponent -> coefficient } map into a series truncated at
// `bound` (exclusive) with the given true lower bound.
inline QSeries assemble(const std::map<Rat, RatCoeff>& terms, const Rat& bound, const Rat& lo) {
    QSeries s = QSeries::truncated_zero(bound, lo);
    for (const auto& [e, c] : terms) s += QSeries::monomial(c, e);
    return s;
}

inline void add_term(std::map<Rat, RatCoeff>& terms, const Rat& e, RatCoeff c) {
    auto [it, fresh] = terms.try_emplace(e, std::move(c));
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

// Sum over nu in j/2 + Z of  w(nu) q^{Aq nu^2 + al nu} z^{zm nu}, truncated
// strictly below `bound`.  `w` maps nu to a Cyclo coefficient; zero values
// are dropped.  The true lower q-bound is attached exactly (minimum of the
// exponent parabola over the nu grid), so downstream order bookkeeping stays
// tight even when alpha pushes exponents negative.
template <class W>
QSeries nu_sum(int j, const Rat& zm, const Rat& Aq, const Rat& al, const Rat& bound, W w) {
    const long long dz = zm == 0 ? 1 : to_ll(rat_den(zm / 2));
    auto nu_of = [&](long long m) { return Rat(2 * m + j, 2); };
    auto expo = [&](long long m) -> Rat {
        const Rat nu = nu_of(m);
        return Aq * nu * nu + al * nu;
    };

    // Vertex of the exponent parabola in m-coordinates.
    const long long m0 = static_cast<long long>(std::llround(approx(-al / (2 * Aq)) - j * 0.5));

    Rat lo = expo(m0);
    for (long long m = m0 - 2; m <= m0 + 2; ++m) lo = std::min(lo, expo(m));

    std::map<Rat, RatCoeff> terms;
    auto emit = [&](long long m) {
        const Rat e = expo(m);
        if (e >= bound) return false;
        Cyclo cy = w(nu_of(m));
        if (!cy.is_zero()) {
            const Rat zz = zm * nu_of(m) * dz;
            add_term(terms, e,
                     RatCoeff(ZPoly::monomial(std::move(cy), to_ll(rat_num(zz)),
                                              static_cast<int>(dz))));
        }
        return true;
    };
    for (long long m = m0; emit(m) || m <= m0 + 2; ++m) {
    }
    for (long long m = m0 - 1; emit(m) || m >= m0 - 3; --m) {
    }
    return assemble(terms, bound, std::min(lo, bound));
}

// Sum over n in Z of
//   sgn(n) phase^n q^{A n^2 + L n + E} / (1 - z^zc q^{C n + D}),
// with every geometric factor pre-expanded: denominators whose q-exponent
// g = C n + D is positive expand as sum_{m>=0} z^{zc m} q^{g m}; negative g
// rewrites to -sum_{m>=1} z^{-zc m} q^{-g m}; g = 0 keeps the rational
// coefficient 1/(1 - z^zc).  Truncated strictly below `bound`.
inline QSeries lerch_sum(long long zc, const Rat& A, const Rat& L, const Rat& E, const Rat& C,
                         const Rat& D, const Rat& phase, bool alternating, const Rat& bound) {
    auto coeff_of = [&](long long n) {
        Cyclo cy = Cyclo::root_phase(phase * n);
        if (alternating && (n % 2 != 0)) cy = -cy;
        return cy;
    };
    auto gexp = [&](long long n) -> Rat { return C * n + D; };
    auto min_expo = [&](long long n) {
        const Rat g = gexp(n);
        Rat e = A * n * n + L * n + E;
        if (g < 0) e -= g;
        return e;
    };
    // The geometric correction only ever raises exponents, so the plain
    // quadratic is a valid envelope for the loop bound.
    auto envelope = [&](long long n) -> Rat { return A * n * n + L * n + E; };

    const long long n0 = static_cast<long long>(std::llround(approx(-L / (2 * A))));
    Rat lo = min_expo(n0);
    {
        long long n = n0;
        while (envelope(n) <= lo || n <= n0 + 2) {
            lo = std::min(lo, min_expo(n));
            ++n;
        }
        n = n0 - 1;
        while (envelope(n) <= lo || n >= n0 - 3) {
            lo = std::min(lo, min_expo(n));
            --n;
        }
    }

    std::map<Rat, RatCoeff> terms;
    QSeries pole_part = QSeries::truncated_zero(bound, std::min(lo, bound));
    auto emit = [&](long long n) {
        if (envelope(n) >= bound) return false;
        const Rat base = A * n * n + L * n + E;
        const Rat g = gexp(n);
        const Cyclo cy = coeff_of(n);
        if (g == 0) {
            if (base < bound) {
                ZPoly den = ZPoly::one() - ZPoly::monomial(Cyclo::one(), zc, 1);
                pole_part += QSeries::monomial(RatCoeff(ZPoly::one(), std::move(den)).scaled(cy),
                                               base);
            }
            return true;
        }
        const Rat step = g > 0 ? g : -g;
        const long long zstep = g > 0 ? zc : -zc;
        const Cyclo val = g > 0 ? cy : -cy;
        long long m = g > 0 ? 0 : 1;
        for (; base + step * m < bound; ++m)
            add_term(terms, base + step * m,
                     RatCoeff(ZPoly::monomial(val, zstep * m, 1)));
        return true;
    };
    for (long long n = n0; emit(n) || n <= n0 + 2; ++n) {
    }
    for (long long n = n0 - 1; emit(n) || n >= n0 - 3; --n) {
    }
    return assemble(terms, bound, std::min(lo, bound)) + pole_part;
}

// 1 / (1 - z^ze q^{g}) expanded to the exclusive bound (g > 0).
inline QSeries geometric(long long ze, const Rat& g, const Rat& bound) {
    QSeries s = QSeries::truncated_zero(bound, 0);
    for (long long m = 0; g * m < bound; ++m)
        s += QSeries::monomial(RatCoeff(ZPoly::monomial(Cyclo::one(), ze * m, 1)), g * m);
    return s;
}

}  // namespace gen_detail

// prod_{n>=0} (1 - w z^zc q^{e0 + n step}), truncated past `order`.  The
// truncation point is the first omitted factor exponent capped at order + 1,
// so every coefficient through q^order is exact.
inline QSeries euler_product(const Cyclo& w, long long zc, const Rat& e0, const Rat& step,
                             const Rat& order) {
    if (!(step > 0)) throw BadInput("euler_product needs a positive exponent step");
    if (e0 < 0) throw BadInput("euler_product needs a nonnegative starting exponent");
    QSeries prod = QSeries::constant(RatCoeff(Cyclo::one()));
    Rat e = e0;
    while (e <= order) {
        QSeries factor = QSeries::constant(RatCoeff(Cyclo::one())) -
                         QSeries::monomial(RatCoeff(ZPoly::monomial(w, zc, 1)), e);
        prod = (prod * factor).truncated(order + 1);
        e += step;
    }
    return prod.truncated(std::min(Rat(order + 1), e));
}

// prod_{n=0}^{count-1} (1 - w z^zc q^{e0 + n step}), exact.
inline QSeries poch_finite(const Cyclo& w, long long zc, const Rat& e0, const Rat& step,
                           long long count) {
    QSeries prod = QSeries::constant(RatCoeff(Cyclo::one()));
    for (long long n = 0; n < count; ++n) {
        prod *= QSeries::constant(RatCoeff(Cyclo::one())) -
                QSeries::monomial(RatCoeff(ZPoly::monomial(w, zc, 1)), e0 + step * n);
    }
    return prod;
}

// eta(k tau) = q^{k/24} prod (1 - q^{kn}), via the pentagonal number sum.
inline QSeries eta_series(const Rat& k, const Rat& order) {
    if (!(k > 0)) throw BadInput("eta needs a positive modulus scale");
    const Rat B = order + 1;
    const Rat off = k / 24;
    std::map<Rat, RatCoeff> terms;
    auto expo = [&](long long n) -> Rat { return off + k * n * (3 * n + 1) / 2; };
    for (long long n = 0; expo(n) < B; ++n)
        gen_detail::add_term(terms, expo(n), RatCoeff(Cyclo(Rat(n % 2 ? -1 : 1))));
    for (long long n = -1; expo(n) < B; --n)
        gen_detail::add_term(terms, expo(n), RatCoeff(Cyclo(Rat(n % 2 ? -1 : 1))));
    return gen_detail::assemble(terms, B, std::min(off, B));
}

// eta(k tau)^e for any integer e (negative powers via series inversion).
inline QSeries eta_pow(const Rat& k, long long e, const Rat& order) {
    if (e == 0) return QSeries::constant(RatCoeff(Cyclo::one()));
    const long long m = e < 0 ? -e : e;
    const Rat lead = k * m / 24;
    const Rat build_to = e < 0 ? order + 2 * lead : order;
    QSeries base = eta_series(k, build_to);
    QSeries out = base;
    for (long long i = 1; i < m; ++i) out *= base;
    if (e < 0) out = out.inverse(order + 1);
    return out;
}

// theta(cu + alpha tau + beta; k tau)
//   = sum over nu in 1/2 + Z of q^{k nu^2/2 + alpha nu} z^{c nu} e^{2 pi i nu (beta + 1/2)}.
inline QSeries theta_series(const Rat& c, const Rat& k, const Rat& alpha, const Rat& beta,
                            const Rat& order) {
    if (!(k > 0)) throw BadInput("theta needs a positive modulus scale");
    return gen_detail::nu_sum(1, c, k / 2, alpha, order + 1, [&](const Rat& nu) {
        return Cyclo::root_phase(nu * beta + nu / 2);
    });
}
inline QSeries theta_series(const Rat& c, const Rat& k, const Rat& order) {
    return theta_series(c, k, 0, 0, order);
}

// theta_j(a u + alpha tau + beta; k tau) with j = 0 summing over Z and j = 1
// over 1/2 + Z; no e^{pi i nu} factor in this family.
inline QSeries theta01_series(int j, const Rat& a, const Rat& alpha, const Rat& beta, const Rat& k,
                              const Rat& order) {
    if (j != 0 && j != 1) throw BadInput("theta01 index must be 0 or 1");
    if (!(k > 0)) throw BadInput("theta01 needs a positive modulus scale");
    return gen_detail::nu_sum(j, a, k / 2, alpha, order + 1,
                              [&](const Rat& nu) { return Cyclo::root_phase(nu * beta); });
}

// a_j^{alpha,beta}(tau) = sum over nu in j/2 + Z of (nu + alpha/2) q^{nu^2 + alpha nu}
// e^{2 pi i nu beta}; a pure q-series.
inline QSeries a_series(int j, const Rat& alpha, const Rat& beta, const Rat& order) {
    if (j != 0 && j != 1) throw BadInput("a-series index must be 0 or 1");
    return gen_detail::nu_sum(j, Rat(0), Rat(1), alpha, order + 1, [&](const Rat& nu) {
        return Cyclo::root_phase(nu * beta).scaled(nu + alpha / 2);
    });
}

// 1 / theta(cu; k tau) through the Jacobi triple product
//   theta(cu; k tau) = i q^{k/8} (z^{c/2} - z^{-c/2}) prod (1-q^{kn})(1-z^c q^{kn})(1-z^{-c} q^{kn}),
// so every coefficient's denominator divides (z^{c/2} - z^{-c/2}) and stays
// degree-bounded no matter the order.
inline QSeries theta_inverse(long long c, const Rat& k, const Rat& order) {
    if (c == 0) throw BadInput("theta_inverse needs a nonzero z multiplier");
    if (!(k > 0)) throw BadInput("theta_inverse needs a positive modulus scale");
    const Rat B = order + 1;
    const Rat Bq = B + k / 8;

    const bool even = c % 2 == 0;
    const int dz = even ? 1 : 2;
    const long long h = even ? c / 2 : c;
    ZPoly den = ZPoly::monomial(Cyclo::one(), h, dz) - ZPoly::monomial(Cyclo::one(), -h, dz);
    RatCoeff head(ZPoly::constant(-Cyclo::imag_unit()), std::move(den));

    QSeries prod = QSeries::constant(RatCoeff(Cyclo::one())).truncated(Bq);
    for (long long n = 1; k * n < Bq; ++n) {
        prod *= gen_detail::geometric(0, k * n, Bq);
        prod *= gen_detail::geometric(c, k * n, Bq);
        prod *= gen_detail::geometric(-c, k * n, Bq);
    }
    return QSeries::monomial(std::move(head), -k / 8) * prod;
}

// mu(cu, alpha tau + beta; k tau), optionally with the first argument shifted
// by rshift copies of the modulus (cu -> cu + rshift * k tau); the shifted
// series is what the elliptic transformation law (and the registry entries
// built on it) consume.
inline QSeries mu_series(long long c, const Rat& k, const Rat& alpha, const Rat& beta,
                         const Rat& order, long long rshift = 0) {
    if (c == 0) throw BadInput("mu needs a nonzero z multiplier");
    if (!(k > 0)) throw BadInput("mu needs a positive modulus scale");
    if (is_integer(alpha / k) && is_integer(beta))
        throw ThetaDenominatorVanishes("theta(alpha tau + beta; k tau) vanishes at a lattice point");

    const Rat B = order + 1;
    const Rat e0 = k * rshift / 2;

    // Denominator theta(alpha tau + beta; k tau): a pure q-series.  Its exact
    // leading exponent drives the order bookkeeping below.
    const Rat Aq = k / 2;
    Rat Ltheta;
    {
        const long long m0 =
            static_cast<long long>(std::llround(gen_detail::approx(-alpha / (2 * Aq)) - 0.5));
        auto expo = [&](long long m) -> Rat {
            const Rat nu = Rat(2 * m + 1, 2);
            return Aq * nu * nu + alpha * nu;
        };
        Ltheta = expo(m0);
        for (long long m = m0 - 2; m <= m0 + 2; ++m) Ltheta = std::min(Ltheta, expo(m));
    }

    const QSeries sum = gen_detail::lerch_sum(c, k / 2, k / 2 + alpha, Rat(0), k, k * rshift,
                                              beta, true, B - e0 + Ltheta);
    const Rat Lsum = sum.low_bound();

    const Rat ord_inv = B - e0 - Lsum;
    const Rat theta_to = ord_inv + 2 * std::max(Ltheta, Rat(0));
    QSeries thinv;
    try {
        thinv = theta_series(0, k, alpha, beta, theta_to).inverse(ord_inv);
    } catch (const NonInvertibleLeadingTerm&) {
        throw ThetaDenominatorVanishes("theta(alpha tau + beta; k tau) has a vanishing lead");
    }

    const bool even = c % 2 == 0;
    QSeries pre = QSeries::monomial(
        RatCoeff(ZPoly::monomial(Cyclo::one(), even ? c / 2 : c, even ? 1 : 2)), e0);
    return (pre * sum * thinv).truncated(B);
}

// 1/(q^k; q^k)_infty, the partition generating function when k = 1.
inline QSeries partition_series(const Rat& order, const Rat& k = Rat(1)) {
    return euler_product(Cyclo::one(), 0, k, k, order).inverse(order + 1);
}

// Rank generating function: Eulerian q^{n^2} sum or Lerch sum form.
inline QSeries rank_series(RankForm form, const Rat& order) {
    const Rat B = order + 1;
    if (form == RankForm::Eulerian) {
        QSeries acc = QSeries::truncated_zero(B, 0) + QSeries::constant(RatCoeff(Cyclo::one()));
        for (long long n = 1; Rat(n) * n < B; ++n) {
            QSeries den = poch_finite(Cyclo::one(), 1, 1, 1, n) *
                          poch_finite(Cyclo::one(), -1, 1, 1, n);
            acc += den.truncated(B - n * n).inverse(B - n * n).shifted_q(Rat(n) * n);
        }
        return acc;
    }
    const QSeries sum =
        gen_detail::lerch_sum(1, Rat(3, 2), Rat(1, 2), Rat(0), Rat(1), Rat(0), Rat(0), true, B);
    const RatCoeff one_minus_z(ZPoly::one() - ZPoly::monomial(Cyclo::one(), 1, 1));
    return (sum * QSeries::constant(one_minus_z) * partition_series(B - 1)).truncated(B);
}

// R*(z;q) = R(z;q)/(1-z): the Lerch sum (n = 0 pole kept as 1/(1-z)) over (q)_infty.
inline QSeries rstar_series(const Rat& order) {
    const Rat B = order + 1;
    const QSeries sum =
        gen_detail::lerch_sum(1, Rat(3, 2), Rat(1, 2), Rat(0), Rat(1), Rat(0), Rat(0), true, B);
    return (sum * partition_series(B - 1)).truncated(B);
}

// Crank generating function C(z;q) = (q)_infty / ((zq)_infty (q/z)_infty).
inline QSeries crank_series(const Rat& order) {
    const Rat B = order + 1;
    QSeries den = euler_product(Cyclo::one(), 1, 1, 1, B - 1) *
                  euler_product(Cyclo::one(), -1, 1, 1, B - 1);
    return (euler_product(Cyclo::one(), 0, 1, 1, B - 1) * den.inverse(B)).truncated(B);
}

inline QSeries cstar_series(const Rat& order) {
    const RatCoeff inv_1mz(ZPoly::one(), ZPoly::one() - ZPoly::monomial(Cyclo::one(), 1, 1));
    return crank_series(order) * QSeries::constant(inv_1mz);
}

// Ramanujan's mock theta function f(q) = 1 + sum q^{n^2} / (-q)_n^2.
inline QSeries mock_f_series(const Rat& order) {
    const Rat B = order + 1;
    QSeries acc = QSeries::truncated_zero(B, 0) + QSeries::constant(RatCoeff(Cyclo::one()));
    for (long long n = 1; Rat(n) * n < B; ++n) {
        QSeries den = poch_finite(-Cyclo::one(), 0, 1, 1, n);
        den *= den;
        acc += den.truncated(B - n * n).inverse(B - n * n).shifted_q(Rat(n) * n);
    }
    return acc;
}

// The Appell-style sums of the examples section.
inline QSeries s_series(int which, const Rat& order) {
    const Rat B = order + 1;
    switch (which) {
        case 1:  // sum (-1)^n q^{n^2+n} / (1 - z q^n)
            return gen_detail::lerch_sum(1, 1, 1, 0, 1, 0, 0, true, B);
        case 2:  // sum (-1)^n q^{n^2+2n} / (1 - z q^{2n})
            return gen_detail::lerch_sum(1, 1, 2, 0, 2, 0, 0, true, B);
        case 3:  // sum (-1)^n q^{2n^2+3n} / (1 - z q^{2n})
            return gen_detail::lerch_sum(1, 2, 3, 0, 2, 0, 0, true, B);
        default:
            throw BadInput("s_series index must be 1, 2 or 3");
    }
}

// Odd Durfee symbol generating function
//   R^o(z;q) = (1/(q^2;q^2)_infty) sum (-1)^n q^{3n^2+3n+1} / (1 - z q^{2n+1}).
inline QSeries rodd_series(const Rat& order) {
    const Rat B = order + 1;
    const QSeries sum = gen_detail::lerch_sum(1, 3, 3, 1, 2, 1, 0, true, B);
    return (sum * partition_series(B - 1, 2)).truncated(B);
}

// N*(d,e,z;q-or-q^2) from the closed forms: the deviation-rank families
// (overpartition rank, M2 rank for overpartitions, M2 rank for partitions
// without repeated odd parts), divided by (1-z).
inline QSeries nde_series(NdeVariant v, const Rat& order) {
    const Rat B = order + 1;
    const RatCoeff inv_1pz(ZPoly::one(), ZPoly::one() + ZPoly::monomial(Cyclo::one(), 1, 1));
    const QSeries z = QSeries::constant(RatCoeff(ZPoly::monomial(Cyclo::one(), 1, 1)));
    const QSeries one = QSeries::constant(RatCoeff(Cyclo::one()));
    switch (v) {
        case NdeVariant::Overpartition:
        case NdeVariant::M2Over: {
            // (-q)_infty / (q)_infty
            QSeries ratio = euler_product(-Cyclo::one(), 0, 1, 1, B - 1) *
                            euler_product(Cyclo::one(), 0, 1, 1, B - 1).inverse(B);
            QSeries s = s_series(v == NdeVariant::Overpartition ? 1 : 2, B - 1);
            return (QSeries::constant(inv_1pz) *
                    (ratio.scaled(Rat(2)) * z * s + one))
                .truncated(B);
        }
        case NdeVariant::M2NoRepeatOdd: {
            // (-q;q^2)_infty / (q^2;q^2)_infty
            QSeries ratio = euler_product(-Cyclo::one(), 0, 1, 2, B - 1) *
                            euler_product(Cyclo::one(), 0, 2, 2, B - 1).inverse(B);
            return (ratio * z * s_series(3, B - 1) + one).truncated(B);
        }
    }
    throw BadInput("unknown deviation-rank variant");
}

// The same families straight from their Eulerian q-hypergeometric sums
// (before division by 1-z); an independent cross-check on nde_series.
inline QSeries nde_eulerian(NdeVariant v, const Rat& order) {
    const Rat B = order + 1;
    QSeries acc = QSeries::truncated_zero(B, 0);
    auto inv_zpair = [&](const Rat& step, long long n, const Rat& cap) {
        QSeries den = poch_finite(Cyclo::one(), 1, step, step, n) *
                      poch_finite(Cyclo::one(), -1, step, step, n);
        return den.truncated(cap).inverse(cap);
    };
    switch (v) {
        case NdeVariant::Overpartition:
            for (long long n = 0; Rat(n) * (n + 1) / 2 < B; ++n) {
                const Rat e = Rat(n) * (n + 1) / 2;
                QSeries t = poch_finite(-Cyclo::one(), 0, 0, 1, n).truncated(B - e) *
                            inv_zpair(1, n, B - e);
                acc += t.shifted_q(e);
            }
            return acc;
        case NdeVariant::M2Over:
            for (long long n = 0; Rat(n) < B; ++n) {
                QSeries t = (poch_finite(-Cyclo::one(), 0, 0, 2, n) *
                             poch_finite(-Cyclo::one(), 0, 1, 2, n))
                                .truncated(B - n) *
                            inv_zpair(2, n, B - n);
                acc += t.shifted_q(n);
            }
            return acc;
        case NdeVariant::M2NoRepeatOdd:
            for (long long n = 0; Rat(n) * n < B; ++n) {
                const Rat e = Rat(n) * n;
                QSeries t = poch_finite(-Cyclo::one(), 0, 1, 2, n).truncated(B - e) *
                            inv_zpair(2, n, B - e);
                acc += t.shifted_q(e);
            }
            return acc;
    }
    throw BadInput("unknown deviation-rank variant");
}

inline QSeries build(const GeneratorSpec& g) {
    switch (g.kind) {
        case GeneratorKind::Eta:
            return eta_series(g.k, g.order);
        case GeneratorKind::PochhammerFinite:
            return poch_finite(Cyclo::root_phase(g.beta), to_ll(rat_num(g.c)), g.alpha, g.k,
                               g.count);
        case GeneratorKind::PochhammerInfinite:
            return euler_product(Cyclo::root_phase(g.beta), to_ll(rat_num(g.c)), g.alpha, g.k,
                                 g.order);
        case GeneratorKind::Theta:
            return theta_series(g.c, g.k, g.alpha, g.beta, g.order);
        case GeneratorKind::Theta0:
            return theta01_series(0, g.c, g.alpha, g.beta, g.k, g.order);
        case GeneratorKind::Theta1:
            return theta01_series(1, g.c, g.alpha, g.beta, g.k, g.order);
        case GeneratorKind::A0:
            return a_series(0, g.alpha, g.beta, g.order);
        case GeneratorKind::A1:
            return a_series(1, g.alpha, g.beta, g.order);
        case GeneratorKind::Mu:
            return mu_series(to_ll(rat_num(g.c)), g.k, g.alpha, g.beta, g.order);
        case GeneratorKind::RankEulerian:
            return rank_series(RankForm::Eulerian, g.order);
        case GeneratorKind::RankLerch:
            return rank_series(RankForm::Lerch, g.order);
        case GeneratorKind::Crank:
            return crank_series(g.order);
        case GeneratorKind::RStar:
            return rstar_series(g.order);
        case GeneratorKind::CStar:
            return cstar_series(g.order);
        case GeneratorKind::MockF:
            return mock_f_series(g.order);
        case GeneratorKind::NDE:
            return nde_series(g.nde, g.order);
        case GeneratorKind::S1:
            return s_series(1, g.order);
        case GeneratorKind::S2:
            return s_series(2, g.order);
        case GeneratorKind::S3:
            return s_series(3, g.order);
        case GeneratorKind::ROdd:
            return rodd_series(g.order);
    }
    throw BadInput("unknown generator kind");
}

}  // namespace qpde
