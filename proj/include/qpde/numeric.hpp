#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "qpde/generators.hpp"
#include "qpde/parallel.hpp"

namespace qpde {

// Floating-point evaluation of the special functions, independent of the
// exact engine: sums are truncated by explicit tail bounds (stop once the
// running term stays under tol/2, bounding the remainder by twice the
// first omitted term) rather than by a fixed series order.  Everything is
// templated on the complex type, so a wider mantissa drops in by
// instantiating num_detail with e.g. std::complex<long double> or a boost
// cpp_complex; the public API below is the double instantiation.

struct ComplexPoint {
    std::complex<double> u{0, 0};
    std::complex<double> v{0, 0};
    std::complex<double> tau{0, 1};
    double tol = 1e-9;
};

struct Residual {
    std::string name;
    ComplexPoint point;
    std::complex<double> lhs{0, 0};
    std::complex<double> rhs{0, 0};
    double abs_err = 0;
};

namespace num_detail {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr long long kIterCap = 20000;

// Distance from w to the lattice Z tau + Z.
inline double lattice_distance(std::complex<double> w, std::complex<double> tau) {
    const double x = w.imag() / tau.imag();
    double best = std::abs(w);
    for (double dx : {std::floor(x), std::ceil(x)}) {
        const std::complex<double> r = w - dx * tau;
        for (double dy : {std::floor(r.real()), std::ceil(r.real())})
            best = std::min(best, std::abs(r - dy));
    }
    return best;
}

inline void check_upper_half(std::complex<double> tau) {
    if (!(tau.imag() > 0)) throw BadInput("tau must lie in the upper half plane");
}

inline void check_off_lattice(std::complex<double> w, std::complex<double> tau, double tol,
                              const char* what) {
    if (lattice_distance(w, tau) < 10 * tol)
        throw PoleProximity(std::string(what) + " sits within the pole guard of the lattice");
}

// Sums term(0) + term(1) + ... with the two-quiet-terms stopping rule.
template <class CX, class Term>
CX ray_sum(Term term, double tol) {
    using std::abs;
    CX acc{};
    int calm = 0;
    for (long long m = 0; m < kIterCap; ++m) {
        const CX t = term(m);
        acc += t;
        calm = 2 * static_cast<double>(abs(t)) < tol ? calm + 1 : 0;
        if (calm >= 2) return acc;
    }
    throw ToleranceUnreachable("series tail still above tolerance at the iteration cap");
}

template <class CX>
CX expi(const CX& x) {  // e^{2 pi i x}
    using std::exp;
    using R = typename CX::value_type;
    return exp(CX(R(0), R(2) * R(kPi)) * x);
}

// theta(u; tau) = sum over nu in 1/2 + Z of e^{pi i nu^2 tau + 2 pi i nu (u + 1/2)}.
template <class CX>
CX theta(const CX& u, const CX& tau, double tol) {
    using R = typename CX::value_type;
    auto one_side = [&](R sign) {
        return ray_sum<CX>(
            [&](long long m) {
                const R nu = sign * (R(m) + R(0.5));
                return expi(tau * (nu * nu / R(2)) + (u + R(0.5)) * nu);
            },
            tol);
    };
    return one_side(R(1)) + one_side(R(-1));
}

// theta_j(u; tau) = sum over nu in j/2 + Z of e^{pi i nu^2 tau + 2 pi i nu u}.
template <class CX>
CX theta01(int j, const CX& u, const CX& tau, double tol) {
    using R = typename CX::value_type;
    auto ray = [&](bool down) {
        return ray_sum<CX>(
            [&](long long m) {
                const R nu = R(j) / R(2) + (down ? R(-1 - m) : R(m));
                return expi(tau * (nu * nu / R(2)) + u * nu);
            },
            tol);
    };
    return ray(false) + ray(true);
}

// a_j(tau) = sum over nu in j/2 + Z of (nu + alpha/2) q^{nu^2 + alpha nu} e^{2 pi i nu beta}.
template <class CX>
CX a_weighted(int j, double alpha, double beta, const CX& tau, double tol) {
    using R = typename CX::value_type;
    auto ray = [&](bool down) {
        return ray_sum<CX>(
            [&](long long m) {
                const R nu = R(j) / R(2) + (down ? R(-1 - m) : R(m));
                return (nu + R(alpha) / R(2)) *
                       expi(tau * (nu * nu + R(alpha) * nu) + CX(R(nu) * R(beta)));
            },
            tol);
    };
    return ray(false) + ray(true);
}

// eta(tau) by the pentagonal sum q^{1/24} sum (-1)^n q^{n(3n+1)/2}
//         = sum over n in Z of (-1)^n e^{pi i tau (6n+1)^2 / 12}.
template <class CX>
CX eta(const CX& tau, double tol) {
    using R = typename CX::value_type;
    auto ray = [&](bool down) {
        return ray_sum<CX>(
            [&](long long mm) {
                const long long n = down ? -1 - mm : mm;
                const R s = n % 2 == 0 ? R(1) : R(-1);
                const R w = R(6 * n + 1);
                return s * expi(tau * (w * w / R(24)));
            },
            tol);
    };
    return ray(false) + ray(true);
}

// mu(u, v; tau) = e^{pi i u} / theta(v; tau)
//                 * sum over n in Z of (-1)^n q^{n(n+1)/2} e^{2 pi i n v} / (1 - q^n e^{2 pi i u}).
template <class CX>
CX mu(const CX& u, const CX& v, const CX& tau, double tol) {
    using R = typename CX::value_type;
    const CX zu = expi(u);
    auto ray = [&](bool down) {
        return ray_sum<CX>(
            [&](long long mm) {
                const long long n = down ? -1 - mm : mm;
                const R s = n % 2 == 0 ? R(1) : R(-1);
                const CX num = s * expi(tau * (R(n) * R(n + 1) / R(2)) + v * R(n));
                return num / (R(1) - expi(tau * R(n)) * zu);
            },
            tol);
    };
    const CX sum = ray(false) + ray(true);
    return expi(u / R(2)) * sum / theta(v, tau, tol);
}

}  // namespace num_detail

inline std::complex<double> eval_theta(const ComplexPoint& pt) {
    num_detail::check_upper_half(pt.tau);
    return num_detail::theta(pt.u, pt.tau, pt.tol);
}

inline std::complex<double> eval_theta01(int j, const ComplexPoint& pt) {
    if (j != 0 && j != 1) throw BadInput("theta_j index must be 0 or 1");
    num_detail::check_upper_half(pt.tau);
    return num_detail::theta01(j, pt.u, pt.tau, pt.tol);
}

inline std::complex<double> eval_eta(std::complex<double> tau, double tol) {
    num_detail::check_upper_half(tau);
    return num_detail::eta(tau, tol);
}

inline std::complex<double> eval_a(int j, double alpha, double beta, std::complex<double> tau,
                                   double tol) {
    if (j != 0 && j != 1) throw BadInput("a_j index must be 0 or 1");
    num_detail::check_upper_half(tau);
    return num_detail::a_weighted(j, alpha, beta, tau, tol);
}

inline std::complex<double> eval_mu(const ComplexPoint& pt) {
    num_detail::check_upper_half(pt.tau);
    num_detail::check_off_lattice(pt.u, pt.tau, pt.tol, "u");
    num_detail::check_off_lattice(pt.v, pt.tau, pt.tol, "v");
    return num_detail::mu(pt.u, pt.v, pt.tau, pt.tol);
}

// lim_{u -> 0} u * mu(u, v; tau), extrapolated from a shrinking sequence of
// radii by Neville's scheme; Prop 2.2 pins the limit at -1/(2 pi i theta(v)).
inline std::complex<double> eval_mu_residue(std::complex<double> v, std::complex<double> tau,
                                            double tol) {
    num_detail::check_upper_half(tau);
    num_detail::check_off_lattice(v, tau, tol, "v");
    constexpr int kNodes = 6;
    std::vector<double> h(kNodes);
    std::vector<std::complex<double>> g(kNodes);
    double r = 0.2;
    for (int i = 0; i < kNodes; ++i, r /= 2) {
        h[i] = r;
        g[i] = r * num_detail::mu(std::complex<double>(r, 0), v, tau, tol * 1e-3);
    }
    for (int level = 1; level < kNodes; ++level)
        for (int i = kNodes - 1; i >= level; --i)
            g[i] = g[i] + (g[i] - g[i - 1]) * (h[i] / (h[i - level] - h[i]));
    return g[kNodes - 1];
}

namespace num_detail {

using CD = std::complex<double>;

// 4th-order central first derivative and 5-point second derivative; the
// step is tied to the requested tolerance (h ~ tol^{1/3}), with function
// values computed to a much tighter inner tolerance so stencil roundoff
// stays under the finite-difference floor (~1e-8 at tol = 1e-9).
template <class F>
CD diff1(F f, CD x, double h) {
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

template <class F>
CD diff2(F f, CD x, double h) {
    return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) /
           (12 * h * h);
}

inline Residual make_residual(std::string name, const ComplexPoint& pt, CD lhs, CD rhs) {
    return Residual{std::move(name), pt, lhs, rhs, std::abs(lhs - rhs)};
}

inline Residual worst_of(std::initializer_list<Residual> laws) {
    const Residual* top = laws.begin();
    for (const auto& r : laws)
        if (r.abs_err > top->abs_err) top = &r;
    return *top;
}

inline Residual check_mainequation_at(double alpha, double beta, const ComplexPoint& pt) {
    const double itol = 1e-15;
    const double h = std::cbrt(pt.tol);
    const CD v0 = alpha * pt.tau + beta;
    check_off_lattice(pt.u, pt.tau, pt.tol, "u");
    check_off_lattice(v0, pt.tau, pt.tol, "alpha tau + beta");

    // A(u, tau) = e^{2 pi i alpha u} e^{-pi i alpha^2 tau} mu(u, alpha tau + beta; tau)
    auto A = [&](CD u, CD tau) {
        return expi(CD(alpha) * u - CD(alpha * alpha / 2) * tau) *
               mu(u, alpha * tau + beta, tau, itol);
    };
    const CD d_tau = diff1([&](CD t) { return A(pt.u, t); }, pt.tau, h);
    const CD d_uu = diff2([&](CD u) { return A(u, pt.tau); }, pt.u, h);
    const CD th = theta(pt.u, pt.tau, itol);
    const CD lhs = th * th * th * (CD(0, 4 * kPi) * d_tau + d_uu);

    const CD thv = theta(v0, pt.tau, itol);
    const CD etav = eta(pt.tau, itol);
    const CD eta6 = etav * etav * etav * etav * etav * etav;
    const CD bracket = a_weighted<CD>(1, alpha, beta, pt.tau, itol) *
                           theta01(0, 2.0 * pt.u + v0, 2.0 * pt.tau, itol) -
                       a_weighted<CD>(0, alpha, beta, pt.tau, itol) *
                           theta01(1, 2.0 * pt.u + v0, 2.0 * pt.tau, itol);
    const CD rhs = 16.0 * kPi * kPi * expi(CD(alpha) * pt.u - CD(alpha * alpha / 2) * pt.tau) *
                   eta6 / (thv * thv) * bracket;
    return make_residual("mainequation", pt, lhs, rhs);
}

inline Residual check_theta_lemma_at(const ComplexPoint& pt) {
    const double itol = pt.tol * 1e-3;
    const CD t2 = 2.0 * pt.tau;
    const CD lhs = theta01(0, pt.u + pt.v, t2, itol) * theta01(1, pt.u - pt.v, t2, itol) -
                   theta01(1, pt.u + pt.v, t2, itol) * theta01(0, pt.u - pt.v, t2, itol);
    const CD rhs = theta(pt.u, pt.tau, itol) * theta(pt.v, pt.tau, itol);
    return make_residual("theta-lemma", pt, lhs, rhs);
}

inline Residual check_wronskian_at(double alpha, double beta, const ComplexPoint& pt) {
    const double itol = pt.tol * 1e-3;
    const CD v0 = alpha * pt.tau + beta;
    const CD lhs = a_weighted<CD>(0, alpha, beta, pt.tau, itol) *
                       theta01(1, v0, 2.0 * pt.tau, itol) -
                   a_weighted<CD>(1, alpha, beta, pt.tau, itol) *
                       theta01(0, v0, 2.0 * pt.tau, itol);
    const CD etav = eta(pt.tau, itol);
    const CD rhs = CD(0, 0.5) * etav * etav * etav * theta(v0, pt.tau, itol);
    return make_residual("wronskian", pt, lhs, rhs);
}

inline Residual check_prop21_at(const ComplexPoint& pt) {
    const double itol = 1e-15;
    const CD th = theta(pt.u, pt.tau, itol);
    const CD etav = eta(pt.tau, itol);
    const CD dth = diff1([&](CD u) { return theta(u, pt.tau, itol); }, CD(0, 0),
                         std::cbrt(pt.tol));
    return worst_of({
        make_residual("prop21", pt, theta(pt.u + 1.0, pt.tau, itol), -th),
        make_residual("prop21", pt, theta(-pt.u, pt.tau, itol), -th),
        make_residual("prop21", pt, theta(pt.u + pt.tau, pt.tau, itol),
                      -expi(-pt.u - 0.5 * pt.tau) * th),
        make_residual("prop21", pt, dth, -2.0 * kPi * etav * etav * etav),
    });
}

inline Residual check_prop22_at(const ComplexPoint& pt) {
    const double itol = pt.tol * 1e-3;
    check_off_lattice(pt.u, pt.tau, pt.tol, "u");
    check_off_lattice(pt.v, pt.tau, pt.tol, "v");
    check_off_lattice(pt.u + pt.tau, pt.tau, pt.tol, "u + tau");
    const CD m = mu(pt.u, pt.v, pt.tau, itol);
    return worst_of({
        make_residual("prop22", pt, mu(pt.u + 1.0, pt.v, pt.tau, itol), -m),
        make_residual("prop22", pt,
                      m + expi(-(pt.u - pt.v) - 0.5 * pt.tau) *
                              mu(pt.u + pt.tau, pt.v, pt.tau, itol),
                      -CD(0, 1) * expi(-0.5 * (pt.u - pt.v) - 0.125 * pt.tau)),
    });
}

}  // namespace num_detail

// Point-checks one of the floating-point-verifiable identities at each
// point; alpha and beta only matter for the parameterized families.
inline std::vector<Residual> numeric_check(const std::string& name, double alpha, double beta,
                                           const std::vector<ComplexPoint>& points) {
    using namespace num_detail;
    if (name != "mainequation" && name != "theta-lemma" && name != "wronskian" &&
        name != "prop21" && name != "prop22")
        throw UnknownIdentity("no numeric check named '" + name + "'");
    for (const auto& pt : points) check_upper_half(pt.tau);

    std::vector<Residual> out(points.size());
    parallel_for_index(points.size(), [&](size_t i) {
        const ComplexPoint& pt = points[i];
        if (name == "mainequation") out[i] = check_mainequation_at(alpha, beta, pt);
        else if (name == "theta-lemma") out[i] = check_theta_lemma_at(pt);
        else if (name == "wronskian") out[i] = check_wronskian_at(alpha, beta, pt);
        else if (name == "prop21") out[i] = check_prop21_at(pt);
        else out[i] = check_prop22_at(pt);
    });
    return out;
}

// Evaluates an exact series at z = e^{2 pi i u}, q = e^{2 pi i tau};
// fractional exponents are resolved through u and tau, so there is no
// branch ambiguity.  Used to cross-check the two engines on shared points.
inline std::complex<double> eval_cyclo(const Cyclo& c) {
    // Coordinates live in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
    std::complex<double> acc{0, 0};
    const auto& co = c.coords();
    for (size_t k = 0; k < co.size(); ++k) {
        if (co[k] == 0) continue;
        acc += gen_detail::approx(co[k]) *
               num_detail::expi(std::complex<double>(
                   gen_detail::approx(Rat(static_cast<long long>(k), c.order())), 0));
    }
    return acc;
}

inline std::complex<double> eval_zpoly(const ZPoly& p, std::complex<double> u) {
    std::complex<double> acc{0, 0};
    for (const auto& [e, c] : p.terms())
        acc += eval_cyclo(c) * num_detail::expi(u * (double(e) / p.dz()));
    return acc;
}

inline std::complex<double> eval_series(const QSeries& s, std::complex<double> u,
                                        std::complex<double> tau) {
    num_detail::check_upper_half(tau);
    std::complex<double> acc{0, 0};
    for (const auto& [e, c] : s.terms()) {
        const std::complex<double> den = eval_zpoly(c.den(), u);
        if (std::abs(den) == 0) throw PoleProximity("series coefficient has a pole at this z");
        acc += eval_zpoly(c.num(), u) / den *
               num_detail::expi(tau * (double(e) / s.dq()));
    }
    return acc;
}

}  // namespace qpde
