#pragma once

#include <chrono>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "qpde/generators.hpp"
#include "qpde/parallel.hpp"

namespace qpde {

// Every displayed equation, reduced to an exact statement about truncated
// q-series and checked coefficient by coefficient.  Differential equations
// originally written with c*pi*i*d/dtau + d^2/du^2 appear here divided by
// -4 pi^2, which turns the operator into H_s = s*delta_q + delta_z^2 with
// s = c/2.

struct IdentityParams {
    Rat alpha = 0;
    Rat beta = 0;
};

struct IdentityEntry {
    std::string name;
    std::string statement;  // human-readable, one line
    Rat default_order = 10;
    bool needs_params = false;
};

struct Discrepancy {
    Rat q;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string name;
    Rat order = 0;
    bool pass = false;
    std::optional<Discrepancy> discrepancy;
    double seconds = 0;
};

namespace id_detail {

using Check = std::optional<Discrepancy>;

inline Check mismatch_of(const QSeries& a, const QSeries& b, const Rat& through) {
    auto mm = QSeries::first_mismatch(a, b, through);
    if (!mm) return std::nullopt;
    return Discrepancy{mm->exponent, mm->lhs.str(), mm->rhs.str()};
}

inline Check mismatch_of(const QSeries2& a, const QSeries2& b, const Rat& through) {
    auto mm = QSeries2::first_mismatch(a, b, through);
    if (!mm) return std::nullopt;
    const std::vector<std::string> names{"z1", "z2"};
    return Discrepancy{mm->exponent, mm->lhs.str(names), mm->rhs.str(names)};
}

// Exact monomial c * z^{zn/zd} q^{e}.
inline QSeries zq(Cyclo c, long long zn, int zd, const Rat& e) {
    return QSeries::monomial(RatCoeff(ZPoly::monomial(std::move(c), zn, zd)), e);
}

inline QSeries cubed(const QSeries& a) { return a * a * a; }

// Smallest integer at or above the square root, through doubles; the inputs
// here are tiny (loop-depth bounds, not exact arithmetic).
inline long long sqrt_ceil(const Rat& x) {
    const double v = gen_detail::approx(x);
    return static_cast<long long>(std::ceil(std::sqrt(std::max(v, 0.0))));
}

inline QSeries zpow(const Rat& a) {  // z^a as an exact constant-in-q monomial
    return zq(Cyclo::one(), to_ll(rat_num(a)), static_cast<int>(to_ll(rat_den(a))), 0);
}

inline RatCoeff poly1z(const Rat& c0, const Rat& c1) {  // c0 + c1 z
    ZPoly p = ZPoly::constant(Cyclo(c0)) + ZPoly::monomial(Cyclo(c1), 1, 1);
    return RatCoeff(std::move(p));
}

inline QSeries euler_q(const Rat& e0, const Rat& step, const Rat& order) {
    return euler_product(Cyclo::one(), 0, e0, step, order);
}

// (-z q^{e0}; q^{step})_inf style factors: w = -1 puts a plus sign in
// every (1 + z^zc q^{e}) factor.
inline QSeries plus_product(long long zc, const Rat& e0, const Rat& step, const Rat& order) {
    return euler_product(-Cyclo::one(), zc, e0, step, order);
}

// ---- the individual checkers ------------------------------------------

inline Check check_pentagonal(const Rat& O) {
    return mismatch_of(euler_q(1, 1, O + 1),
                       eta_series(1, O + 2).shifted_q(Rat(-1, 24)), O);
}

inline Check check_rank_forms(const Rat& O) {
    return mismatch_of(rank_series(RankForm::Eulerian, O + 1),
                       rank_series(RankForm::Lerch, O + 1), O);
}

inline Check check_rank_at_1(const Rat& O) {
    return mismatch_of(rank_series(RankForm::Lerch, O + 1).at_z_one(),
                       partition_series(O + 1), O);
}

inline Check check_rank_at_minus1(const Rat& O) {
    auto at_m1 = rank_series(RankForm::Lerch, O + 1)
                     .substitute({Rat(1, 2), 1, Rat(0), 1})
                     .at_z_one();
    return mismatch_of(at_m1, mock_f_series(O + 1), O);
}

inline Check check_rodd_relation(const Rat& O) {
    auto sub = rstar_series(O + 4).substitute({Rat(0), 1, Rat(1), 2}, O + 2);
    auto rhs = (sub - QSeries::constant(RatCoeff::one())) * zpow(-1);
    return mismatch_of(rodd_series(O + 1), rhs, O);
}

inline Check check_diff1(const Rat& O, bool perturbed) {
    auto euler = euler_q(1, 1, O + 1);
    auto lhs = zpow(1) * euler * euler * cubed(cstar_series(O + 1));
    auto r = rstar_series(O + 1);
    auto rhs = r.delta_q().scaled(Rat(3)) + r.delta_z().scaled(Rat(1, 2)) +
               r.delta_z().delta_z().scaled(Rat(1, 2));
    if (perturbed) rhs += QSeries::monomial(RatCoeff::one(), 5);
    return mismatch_of(lhs, rhs, O);
}

inline Check check_diff2(const Rat& O) {
    auto inner = zq(Cyclo::one(), 1, 2, Rat(-1, 24)) * rstar_series(O + 2);
    auto th = theta_series(1, 1, O + 1);
    auto lhs = th * th * th * inner.heat(6);
    auto rhs = eta_pow(1, 8, O + 1).scaled(Cyclo::imag_unit().scaled(2));
    return mismatch_of(lhs, rhs, O);
}

inline Check check_mainequation(const Rat& O, const IdentityParams& p) {
    const Rat &al = p.alpha, &be = p.beta;
    auto pre = zpow(al) * QSeries::monomial(RatCoeff::one(), -al * al / 2);

    auto th = theta_series(1, 1, O + 1);
    auto lhs = th * th * th * (pre * mu_series(1, 1, al, be, O + 2)).heat(2);

    auto thd = theta_series(0, 1, al, be, O + 2);
    auto thd_inv2 = (thd * thd).inverse(O + 2);
    auto bracket = a_series(1, al, be, O + 2) * theta01_series(0, 2, al, be, 2, O + 2) -
                   a_series(0, al, be, O + 2) * theta01_series(1, 2, al, be, 2, O + 2);
    auto rhs = pre.scaled(Cyclo(Rat(-4))) * eta_pow(1, 6, O + 2) * thd_inv2 * bracket;
    return mismatch_of(lhs, rhs, O);
}

inline Check check_pdestar(const Rat& O) {
    auto euler = euler_q(1, 1, O + 1);
    auto lhs = zpow(1) * euler * euler * plus_product(0, 1, 1, O + 1).inverse(O + 2) *
               cubed(cstar_series(O + 1)) * plus_product(1, 0, 1, O + 1) *
               plus_product(-1, 1, 1, O + 1);
    auto n = nde_series(NdeVariant::Overpartition, O + 1);
    auto rhs = QSeries::constant(poly1z(2, 2)) * n.delta_q() +
               QSeries::constant(poly1z(0, Rat(1, 2))) * n +
               QSeries::constant(poly1z(0, 1)) * n.delta_z() +
               QSeries::constant(poly1z(Rat(1, 2), Rat(1, 2))) * n.delta_z().delta_z();
    return mismatch_of(lhs, rhs, O);
}

inline Check check_addin() {
    const RatCoeff inv1pz(ZPoly::one(), ZPoly::one() + ZPoly::monomial(Cyclo::one(), 1, 1));
    auto f = QSeries::constant(inv1pz);
    auto img = QSeries::constant(poly1z(2, 2)) * f.delta_q() +
               QSeries::constant(poly1z(0, Rat(1, 2))) * f +
               QSeries::constant(poly1z(0, 1)) * f.delta_z() +
               QSeries::constant(poly1z(Rat(1, 2), Rat(1, 2))) * f.delta_z().delta_z();
    if (img.is_zero()) return std::nullopt;
    const auto& [e, c] = *img.terms().begin();
    return Discrepancy{Rat(e, img.dq()), c.str(), "0"};
}

inline Check check_pdestar2(const Rat& O) {
    auto inner = eta_pow(2, 4, O + 2) * eta_pow(1, -2, O + 2) * theta_inverse(2, 2, O + 2) +
                 zq(Cyclo::one(), 1, 1, Rat(-1, 4)) * mu_series(2, 2, 1, 0, O + 2);
    auto th = theta_series(1, 1, O + 2);
    auto lhs = th * th * th * inner.heat(4);
    auto rhs = eta_pow(1, 8, O + 2) * eta_pow(2, -1, O + 2) *
               theta_series(1, 1, 0, Rat(1, 2), O + 2);
    return mismatch_of(lhs, rhs, O);
}

inline Check check_pdeoverstar(const Rat& O) {
    const Rat half_ord = O / 2 + 1;
    auto cstar2 = cstar_series(half_ord).substitute({Rat(0), 1, Rat(0), 2});
    auto euler2 = euler_q(2, 2, O + 1);
    auto lhs = zpow(1).scaled(Cyclo(Rat(2))) * euler2 * euler2 * cubed(cstar2) *
               plus_product(1, 0, 1, O + 1) * plus_product(-1, 1, 1, O + 1);
    auto n = nde_series(NdeVariant::M2Over, O + 1);
    auto rhs = QSeries::constant(poly1z(1, 1)) * n.delta_q() +
               QSeries::constant(poly1z(0, 1)) * n +
               QSeries::constant(poly1z(0, 2)) * n.delta_z() +
               QSeries::constant(poly1z(1, 1)) * n.delta_z().delta_z();
    return mismatch_of(lhs, rhs, O);
}

inline Check check_pde3(const Rat& O) {
    auto inner = zq(Cyclo::one(), 1, 2, Rat(-1, 4)) * mu_series(1, 2, 1, 0, O + 2);
    auto th = theta_series(1, 2, O + 2);
    auto lhs = th * th * th * inner.heat(1);
    auto rhs = eta_pow(2, 8, O + 2) * eta_pow(1, -1, O + 2) *
               theta_series(1, 1, 0, Rat(1, 2), O + 2);
    return mismatch_of(lhs, rhs, O);
}

inline Check check_pdem2star(const Rat& O) {
    const Rat half_ord = O / 2 + 1;
    auto cstar2 = cstar_series(half_ord).substitute({Rat(0), 1, Rat(0), 2});
    auto euler2 = euler_q(2, 2, O + 1);
    auto lhs = zpow(1).scaled(Cyclo(Rat(2))) * euler2 * euler2 *
               plus_product(0, 1, 2, O + 1).inverse(O + 2) * cubed(cstar2) *
               plus_product(1, 1, 2, O + 1) * plus_product(-1, 1, 2, O + 1);
    auto n = nde_series(NdeVariant::M2NoRepeatOdd, O + 1);
    auto rhs = n.delta_q().scaled(Rat(2)) + n.delta_z() + n.delta_z().delta_z();
    return mismatch_of(lhs, rhs, O);
}

inline Check check_pde4(const Rat& O) {
    auto inner = zq(Cyclo::one(), 1, 2, Rat(-1, 8)) * mu_series(2, 4, 1, 0, O + 2) +
                 zq(Cyclo::one(), 3, 2, Rat(-9, 8)) * mu_series(2, 4, 3, 0, O + 3);
    auto th = theta_series(1, 2, O + 2);
    auto lhs = th * th * th * inner.heat(2);
    auto rhs = eta_series(1, O + 2) * eta_pow(2, 5, O + 2) * eta_series(4, O + 2) *
               zq(Cyclo(Rat(2)), 1, 2, Rat(1, 4)) * theta_series(1, 2, 1, Rat(1, 2), O + 2);
    return mismatch_of(lhs, rhs, O);
}

inline Check check_oddpde(const Rat& O) {
    auto inner = QSeries::monomial(RatCoeff::one(), Rat(-1, 3)) * rodd_series(O + 2);
    auto th = theta_series(1, 2, 1, 0, O + 2);
    auto lhs = th * th * th * inner.heat(Rat(3));
    auto rhs = zq(Cyclo::imag_unit().scaled(2), -3, 2, Rat(-3, 4)) * eta_pow(2, 8, O + 2);
    return mismatch_of(lhs, rhs, O);
}

inline Check check_rstar1(const Rat& O) {
    const Cyclo i = Cyclo::imag_unit();
    auto t1 = zq(i, -3, 2, Rat(-1, 8)) * mu_series(3, 3, -1, 0, O + 2);
    auto t2 = zq(i, 1, 2, Rat(-1, 8)) * mu_series(3, 3, 1, 0, O + 2);
    auto t3 = zq(i, -1, 2, Rat(1, 24)) * eta_pow(3, 3, O + 2) * eta_pow(1, -1, O + 2) *
              theta_inverse(3, 3, O + 2);
    return mismatch_of(rstar_series(O + 1), t1 - t2 - t3, O);
}

// Two-elliptic-variable theta builders for the addition lemma.  Variable
// signs s1, s2 say whether the summation index multiplies v1, v2 or their
// negatives; `var` = -1 spreads over both variables, 0/1 picks one.
inline QSeries2 theta2_sum(int j, int s1, int s2, bool half_weight, const Rat& bound) {
    std::map<Rat, ZPoly2> terms;
    auto emit = [&](long long m) {
        const Rat nu(2 * m + j, 2);
        const Rat e = half_weight ? Rat(nu * nu / 2) : Rat(nu * nu);
        if (e >= bound) return false;
        Cyclo w = half_weight ? Cyclo::root_phase(nu / 2) : Cyclo::one();
        const long long num = 2 * m + j;
        ZPoly2 mono = ZPoly2::monomial(std::move(w), s1 * num, 2, 0);
        if (s2 != 0) mono = mono.shifted(s2 * num, 1);
        auto [it, fresh] = terms.try_emplace(e, mono);
        if (!fresh) it->second = it->second + mono;
        return true;
    };
    for (long long m = 0; emit(m); ++m) {
    }
    for (long long m = -1; emit(m); --m) {
    }
    QSeries2 out = QSeries2::truncated_zero(bound, std::min(Rat(0), bound));
    for (auto& [e, c] : terms)
        if (!c.is_zero()) out += QSeries2::monomial(std::move(c), e);
    return out;
}

inline Check check_theta_lemma(const Rat& O) {
    const Rat B = O + 1;
    auto lhs = theta2_sum(0, 1, 1, false, B) * theta2_sum(1, 1, -1, false, B) -
               theta2_sum(1, 1, 1, false, B) * theta2_sum(0, 1, -1, false, B);
    auto rhs = theta2_sum(1, 1, 0, true, B) * theta2_sum(1, 0, 1, true, B);
    return mismatch_of(lhs, rhs, O);
}

inline Check check_wronskian(const Rat& O, const IdentityParams& p) {
    const Rat &al = p.alpha, &be = p.beta;
    auto lhs = a_series(0, al, be, O + 1) * theta01_series(1, 0, al, be, 2, O + 1) -
               a_series(1, al, be, O + 1) * theta01_series(0, 0, al, be, 2, O + 1);
    auto rhs = (eta_pow(1, 3, O + 1) * theta_series(0, 1, al, be, O + 1))
                   .scaled(Cyclo::imag_unit().scaled(Rat(1, 2)));
    return mismatch_of(lhs, rhs, O);
}

inline Check check_prop21(const Rat& O) {
    auto th = theta_series(1, 1, O + 1);
    if (auto d = mismatch_of(th.substitute({Rat(1), 1, Rat(0), 1}), -th, O)) return d;
    if (auto d = mismatch_of(th.substitute({Rat(0), -1, Rat(0), 1}), -th, O)) return d;

    // u -> u + tau folds z-exponents into q; build deep enough that every
    // image exponent <= O is present.
    const Rat deep = O + 2 * sqrt_ceil(2 * O) + 3;
    auto wide = theta_series(1, 1, deep);
    auto shifted = wide.substitute({Rat(0), 1, Rat(1), 1}, O + 1);
    auto rhs2 = zq(-Cyclo::one(), -2, 2, Rat(-1, 2)) * theta_series(1, 1, O + 2);
    if (auto d = mismatch_of(shifted, rhs2, O)) return d;

    return mismatch_of(th.delta_z().at_z_one().scaled(-Cyclo::imag_unit()),
                       eta_pow(1, 3, O + 1), O);
}

inline Check check_prop22(const Rat& O) {
    const Rat al(1, 2), be(0);
    auto m = mu_series(1, 1, al, be, O + 1);
    if (auto d = mismatch_of(m.substitute({Rat(1), 1, Rat(0), 1}), -m, O)) return d;

    const Rat shift_e = al - Rat(1, 2);  // alpha - k/2 at k = 1
    auto m1 = mu_series(1, 1, al, be, O + 1 - std::min(shift_e, Rat(0)), 1);
    auto lhs = m + zq(Cyclo::root_phase(be), -1, 1, shift_e) * m1;
    auto rhs = zq(-Cyclo::imag_unit() * Cyclo::root_phase(be / 2), -1, 2, al / 2 - Rat(1, 8));
    return mismatch_of(lhs, rhs, O);
}

}  // namespace id_detail

inline const std::vector<IdentityEntry>& list_identities() {
    static const std::vector<IdentityEntry> reg = {
        {"diff1", "z (q)^2 [C*]^3 = (3 dq + dz/2 + dz^2/2) R*", 20, false},
        {"diff2", "theta(u)^3 H_6(z^(1/2) q^(-1/24) R*) = 2i eta^8", 20, false},
        {"mainequation",
         "theta(u)^3 H_2(z^a q^(-a^2/2) mu(u, a t + b)) = "
         "-4 z^a q^(-a^2/2) eta^6 / theta(a t + b)^2 (a1 theta0 - a0 theta1)",
         8, true},
        {"pdestar",
         "z (q)^2/(-q) [C*]^3 (-z, -q/z) = (2(1+z) dq + z/2 + z dz + (1+z)/2 dz^2) N*(1,0)",
         20, false},
        {"pdestar2",
         "theta(u)^3 H_4(eta(2t)^4/(eta^2 theta(2u;2t)) + q^(-1/4) z mu(2u,t;2t)) = "
         "eta^8/eta(2t) theta(u+1/2)",
         20, false},
        {"pdeoverstar",
         "2z (q^2;q^2)^2 [C*(z;q^2)]^3 (-z, -q/z) = "
         "((1+z) dq + z + 2z dz + (1+z) dz^2) N*(1,1/q; q^2)",
         20, false},
        {"pde3",
         "theta(u;2t)^3 H_1(q^(-1/4) z^(1/2) mu(u,t;2t)) = eta(2t)^8/eta theta(u+1/2)", 20,
         false},
        {"pdem2star",
         "2z (q^2;q^2)^2/(-q;q^2) [C*(z;q^2)]^3 (-zq, -q/z; q^2) = "
         "(2 dq + dz + dz^2) N*(0,1/q; q^2)",
         20, false},
        {"pde4",
         "theta(u;2t)^3 H_2(z^(1/2) q^(-1/8) mu(2u,t;4t) + q^(-9/8) z^(3/2) mu(2u,3t;4t)) = "
         "2 eta eta(2t)^5 eta(4t) z^(1/2) q^(1/4) theta(u+1/2+t;2t)",
         20, false},
        {"oddpde",
         "theta(u+t;2t)^3 H_3(q^(-1/3) Ro) = 2i eta(2t)^8 q^(-3/4) z^(-3/2)", 20, false},
        {"rstar1",
         "R* = i z^(-3/2) q^(-1/8) mu(3u,-t;3t) - i z^(1/2) q^(-1/8) mu(3u,t;3t) "
         "- i z^(-1/2) q^(1/24) eta(3t)^3/(eta theta(3u;3t))",
         20, false},
        {"theta-lemma",
         "theta0(v1+v2;2t) theta1(v1-v2;2t) - theta1(v1+v2;2t) theta0(v1-v2;2t) = "
         "theta(v1) theta(v2)",
         15, false},
        {"wronskian",
         "a0 theta1(a t + b; 2t) - a1 theta0(a t + b; 2t) = i/2 eta^3 theta(a t + b)", 15,
         true},
        {"addin", "(2(1+z) dq + z/2 + z dz + (1+z)/2 dz^2) 1/(1+z) = 0", 0, false},
        {"prop21",
         "theta(u+1) = -theta; theta(-u) = -theta; theta(u+t) = -z^(-1) q^(-1/2) theta; "
         "-i dz theta at z=1 = eta^3",
         30, false},
        {"prop22",
         "mu(u+1, v) = -mu; mu + z^(-1) q^(a-1/2) e(b) mu(u+t, v) = "
         "-i z^(-1/2) q^(a/2-1/8) e(b/2)",
         30, false},
        {"pentagonal", "(q) = sum (-1)^n q^(n(3n+1)/2)", 40, false},
        {"rank-forms", "Eulerian and Lerch rank expansions agree", 40, false},
        {"rank-at-1", "R(1; q) = 1/(q)", 40, false},
        {"rank-at-minus1", "R(-1; q) = mock theta f(q)", 40, false},
        {"rodd-relation", "Ro(z; q) = z^(-1) (R*(zq; q^2) - 1)", 40, false},
    };
    return reg;
}

inline IdentityReport verify(const std::string& name, const Rat& order,
                             std::optional<IdentityParams> params = std::nullopt) {
    using namespace id_detail;
    if (order < 0) throw BadInput("verification order must be nonnegative");

    const bool has = params.has_value();
    auto need_params = [&]() -> const IdentityParams& {
        if (!has) throw MissingParams("identity '" + name + "' needs (alpha, beta)");
        return *params;
    };

    const auto t0 = std::chrono::steady_clock::now();
    Check d;
    if (name == "diff1") d = check_diff1(order, false);
    else if (name == "diff1-perturbed") d = check_diff1(order, true);
    else if (name == "diff2") d = check_diff2(order);
    else if (name == "mainequation") d = check_mainequation(order, need_params());
    else if (name == "pdestar") d = check_pdestar(order);
    else if (name == "pdestar2") d = check_pdestar2(order);
    else if (name == "pdeoverstar") d = check_pdeoverstar(order);
    else if (name == "pde3") d = check_pde3(order);
    else if (name == "pdem2star") d = check_pdem2star(order);
    else if (name == "pde4") d = check_pde4(order);
    else if (name == "oddpde") d = check_oddpde(order);
    else if (name == "rstar1") d = check_rstar1(order);
    else if (name == "theta-lemma") d = check_theta_lemma(order);
    else if (name == "wronskian") d = check_wronskian(order, need_params());
    else if (name == "addin") d = check_addin();
    else if (name == "prop21") d = check_prop21(order);
    else if (name == "prop22") d = check_prop22(order);
    else if (name == "pentagonal") d = check_pentagonal(order);
    else if (name == "rank-forms") d = check_rank_forms(order);
    else if (name == "rank-at-1") d = check_rank_at_1(order);
    else if (name == "rank-at-minus1") d = check_rank_at_minus1(order);
    else if (name == "rodd-relation") d = check_rodd_relation(order);
    else throw UnknownIdentity("no identity named '" + name + "'");
    const auto t1 = std::chrono::steady_clock::now();

    IdentityReport rep;
    rep.name = name;
    if (has) rep.name += "(" + format_rat(params->alpha) + "," + format_rat(params->beta) + ")";
    rep.order = order;
    rep.pass = !d.has_value();
    rep.discrepancy = std::move(d);
    rep.seconds = std::chrono::duration<double>(t1 - t0).count();
    return rep;
}

inline const std::vector<IdentityParams>& default_param_set() {
    static const std::vector<IdentityParams> ps = {
        {Rat(1, 2), Rat(0)}, {Rat(0), Rat(1, 2)}, {Rat(1, 3), Rat(0)}, {Rat(1, 2), Rat(1, 2)}};
    return ps;
}

inline unsigned verify_threads() { return worker_count(); }

// Runs the whole registry, fanning parameterized entries out over the
// default (alpha, beta) set.  Entries are independent, so they may run on
// QPDE_THREADS workers; the report order stays deterministic.
inline std::vector<IdentityReport> verify_all(const Rat& order) {
    struct Task {
        std::string name;
        std::optional<IdentityParams> params;
    };
    std::vector<Task> tasks;
    for (const auto& e : list_identities()) {
        if (e.needs_params)
            for (const auto& p : default_param_set()) tasks.push_back({e.name, p});
        else
            tasks.push_back({e.name, std::nullopt});
    }

    std::vector<IdentityReport> reports(tasks.size());
    parallel_for_index(tasks.size(),
                       [&](size_t i) { reports[i] = verify(tasks[i].name, order, tasks[i].params); });
    return reports;
}

}  // namespace qpde
