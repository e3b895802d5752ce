#pragma once

#include <string>
#include <utility>

#include "qpde/laurent.hpp"

namespace qpde {

namespace detail {

// Exact quotient a / b (remainder known to vanish).  Either side may be
// Laurent: the monomial units are divided separately from the polynomial
// parts, so quotients like (z^-1 - 1) / (z - 1) = -z^-1 come out right.
inline ZPoly poly_div_exact(ZPoly a, ZPoly b) {
    const int dz = static_cast<int>(lllcm(a.dz(), b.dz()));
    a = a.rescaled(dz);
    b = b.rescaled(dz);
    if (a.is_zero()) return a;
    const long long ka = a.low();
    const long long kb = b.low();
    a = a.shifted(-ka);
    b = b.shifted(-kb);
    const long long db = b.high();
    const Cyclo lead_inv = b.terms().rbegin()->second.inverse();
    ZPoly quot;
    quot = ZPoly::monomial(Cyclo::zero(), 0, a.dz());
    while (!a.is_zero() && a.high() >= db) {
        const long long da = a.high();
        Cyclo c = a.terms().rbegin()->second * lead_inv;
        quot += ZPoly::monomial(c, da - db, a.dz());
        a -= b.shifted(da - db).scaled(c);
    }
    return quot.shifted(ka - kb);
}

// gcd of every power-basis coordinate of every coefficient, as a positive
// rational.  Dividing it out keeps the polynomial's bignum heights flat.
inline Rat poly_content(const ZPoly& p) {
    BigInt g = 0;
    BigInt l = 1;
    for (const auto& [e, c] : p.terms()) {
        for (const auto& v : c.coords()) {
            if (v == 0) continue;
            g = boost::multiprecision::gcd(g, rat_num(v));
            const BigInt d = rat_den(v);
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
    }
    if (g == 0) return Rat(1);
    if (g < 0) g = -g;
    return Rat(g, l);
}

// Strip the monomial unit and the rational content.
inline ZPoly make_primitive(ZPoly p) {
    if (p.is_zero()) return p;
    p = p.shifted(-p.low());
    const Rat c = poly_content(p);
    if (c != 1) p = p.scaled(Rat(1) / c);
    return p;
}

// Remainder of a by b; b must be nonzero and monic, which keeps the inner
// loop free of field inversions.
inline ZPoly poly_mod_monic(ZPoly a, const ZPoly& b) {
    const long long db = b.high();
    while (!a.is_zero() && a.high() >= db) {
        const long long da = a.high();
        const Cyclo la = a.terms().rbegin()->second;
        a -= b.shifted(da - db).scaled(la);
    }
    return a;
}

inline ZPoly make_monic(ZPoly p) {
    const Cyclo lead = p.terms().rbegin()->second;
    if (!(lead == Cyclo::one())) p = p.scaled(lead.inverse());
    return p;
}

// Monic gcd in Q(zeta)[x] via Euclid on the monic remainder sequence.
// Inputs may be Laurent; monomial units are stripped, so the result is a
// genuine polynomial factor.  Monic remainders are quotients of subresultant
// determinants, so their coefficient heights stay polynomially bounded; the
// one field inversion per round is itself kept cheap by the content
// normalization inside Cyclo::inverse.
inline ZPoly poly_gcd(ZPoly a, ZPoly b) {
    const int dz = static_cast<int>(lllcm(a.dz(), b.dz()));
    a = make_primitive(a.rescaled(dz));
    b = make_primitive(b.rescaled(dz));
    if (a.is_zero()) std::swap(a, b);
    if (b.is_zero()) return a.is_zero() ? a : make_monic(std::move(a));
    a = make_monic(std::move(a));
    b = make_monic(std::move(b));
    while (!b.is_zero()) {
        if (b.high() == 0) return ZPoly::one();  // unit factor: coprime
        if (a.high() < b.high()) {
            std::swap(a, b);
            continue;
        }
        ZPoly r = poly_mod_monic(a, b);
        if (!r.is_zero()) r = make_monic(r.shifted(-r.low()));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

}  // namespace detail

// A coefficient of the q-expansion: a rational function num/den in the
// elliptic variable.  Invariants after every operation: gcd(num, den) = 1,
// den has lowest exponent 0 and leading coefficient 1, and a zero value is
// stored as 0/1.  den == 1 marks the plain polynomial case.
class RatCoeff {
  public:
    RatCoeff() : num_(), den_(ZPoly::one()) {}
    explicit RatCoeff(Cyclo c) : num_(ZPoly::constant(std::move(c))), den_(ZPoly::one()) {}
    explicit RatCoeff(ZPoly p) : num_(std::move(p)), den_(ZPoly::one()) {}
    RatCoeff(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatCoeff zero() { return RatCoeff(); }
    static RatCoeff one() { return RatCoeff(Cyclo::one()); }

    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_ == ZPoly::one(); }

    RatCoeff operator-() const {
        RatCoeff out = *this;
        out.num_ = -out.num_;
        return out;
    }

    friend RatCoeff operator+(const RatCoeff& a, const RatCoeff& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) {
            RatCoeff out;
            out.num_ = a.num_ + b.num_;
            out.den_ = a.den_;
            out.normalize();
            return out;
        }
        // Work over the lcm of the denominators so the reduction step only
        // ever sees the small cofactors.
        RatCoeff out;
        const ZPoly g = detail::poly_gcd(a.den_, b.den_);
        if (g.is_constant()) {
            out.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            out.den_ = a.den_ * b.den_;
        } else {
            const ZPoly ca = detail::poly_div_exact(a.den_, g);
            const ZPoly cb = detail::poly_div_exact(b.den_, g);
            out.num_ = a.num_ * cb + b.num_ * ca;
            out.den_ = a.den_ * cb;
        }
        out.normalize();
        return out;
    }
    friend RatCoeff operator-(const RatCoeff& a, const RatCoeff& b) { return a + (-b); }

    friend RatCoeff operator*(const RatCoeff& a, const RatCoeff& b) {
        if (a.is_zero() || b.is_zero()) return RatCoeff();
        RatCoeff out;
        if (a.is_polynomial() && b.is_polynomial()) {
            out.num_ = a.num_ * b.num_;
            out.den_ = ZPoly::one();
            return out;
        }
        // Cross-reduce first: with both inputs already in lowest terms the
        // product of the reduced parts needs no further gcd.
        ZPoly na = a.num_, da = a.den_, nb = b.num_, db = b.den_;
        const ZPoly g1 = detail::poly_gcd(na, db);
        if (!g1.is_constant()) {
            na = detail::poly_div_exact(std::move(na), g1);
            db = detail::poly_div_exact(std::move(db), g1);
        }
        const ZPoly g2 = detail::poly_gcd(nb, da);
        if (!g2.is_constant()) {
            nb = detail::poly_div_exact(std::move(nb), g2);
            da = detail::poly_div_exact(std::move(da), g2);
        }
        out.num_ = na * nb;
        out.den_ = da * db;
        out.restore_units();
        return out;
    }

    RatCoeff& operator+=(const RatCoeff& o) { return *this = *this + o; }
    RatCoeff& operator-=(const RatCoeff& o) { return *this = *this - o; }
    RatCoeff& operator*=(const RatCoeff& o) { return *this = *this * o; }

    RatCoeff inverse() const {
        if (is_zero()) throw NonInvertibleLeadingTerm("inverse of zero coefficient");
        RatCoeff out;
        out.num_ = den_;
        out.den_ = num_;
        out.restore_units();  // swapping a reduced fraction keeps it reduced
        return out;
    }

    RatCoeff scaled(const Cyclo& c) const {
        if (c.is_zero()) return RatCoeff();
        RatCoeff out = *this;
        out.num_ = out.num_.scaled(c);
        return out;
    }
    RatCoeff scaled(const Rat& r) const { return scaled(Cyclo(r)); }

    // z d/dz via the quotient rule; polynomial inputs stay polynomial.
    RatCoeff delta_z() const {
        if (is_polynomial()) return RatCoeff(num_.delta_z());
        RatCoeff out;
        out.num_ = num_.delta_z() * den_ - num_ * den_.delta_z();
        out.den_ = den_ * den_;
        out.normalize();
        return out;
    }

    // z -> zeta z and z -> z^a are injective substitutions, so they carry a
    // reduced fraction to a reduced fraction and only the units need fixing.
    RatCoeff rotated(const Rat& theta) const {
        RatCoeff out;
        out.num_ = num_.rotated(theta);
        out.den_ = den_.rotated(theta);
        out.restore_units();
        return out;
    }

    RatCoeff powered(long long a) const {
        RatCoeff out;
        out.num_ = num_.powered(a);
        out.den_ = den_.powered(a);
        out.restore_units();
        return out;
    }

    // Multiply by the monomial z^(e/dz).
    RatCoeff shifted(long long e, int dz) const {
        RatCoeff out = *this;
        const int g = static_cast<int>(lllcm(dz, num_.dz()));
        out.num_ = out.num_.rescaled(g).shifted(e * (g / dz));
        out.den_ = out.den_.rescaled(g);
        return out;
    }

    Cyclo eval_at_one() const {
        Cyclo d = den_.eval_at_one();
        if (d.is_zero()) throw Error("coefficient has a pole at z = 1");
        return num_.eval_at_one() * d.inverse();
    }

    friend bool operator==(const RatCoeff& a, const RatCoeff& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatCoeff& a, const RatCoeff& b) { return !(a == b); }

    std::string str() const {
        if (is_polynomial()) return num_.str();
        std::string n = num_.str();
        if (n.find(' ') != std::string::npos || n.find('*') != std::string::npos) n = "(" + n + ")";
        return n + "/(" + den_.str() + ")";
    }

  private:
    void normalize() {
        if (den_.is_zero()) throw Error("coefficient with zero denominator");
        if (num_.is_zero()) {
            den_ = ZPoly::one();
            return;
        }
        const int dz = static_cast<int>(lllcm(num_.dz(), den_.dz()));
        num_ = num_.rescaled(dz);
        den_ = den_.rescaled(dz);
        if (!den_.is_constant()) {
            const long long nlow = num_.low();
            ZPoly n0 = num_.shifted(-nlow);
            ZPoly g = detail::poly_gcd(n0, den_);
            if (!g.is_constant()) {
                n0 = detail::poly_div_exact(std::move(n0), g);
                den_ = detail::poly_div_exact(den_, g);
                num_ = n0.shifted(nlow);
            }
        }
        restore_units();
    }

    // Re-establish the unit conventions on an already reduced fraction:
    // grids aligned, denominator anchored at exponent 0 with lead 1.
    void restore_units() {
        if (den_.is_zero()) throw Error("coefficient with zero denominator");
        if (num_.is_zero()) {
            den_ = ZPoly::one();
            return;
        }
        const int dz = static_cast<int>(lllcm(num_.dz(), den_.dz()));
        num_ = num_.rescaled(dz);
        den_ = den_.rescaled(dz);
        const long long dlow = den_.low();
        if (dlow != 0) {
            den_ = den_.shifted(-dlow);
            num_ = num_.shifted(-dlow);
        }
        const Cyclo lead = den_.terms().rbegin()->second;
        if (!(lead == Cyclo::one())) {
            const Cyclo inv = lead.inverse();
            den_ = den_.scaled(inv);
            num_ = num_.scaled(inv);
        }
    }

    ZPoly num_;
    ZPoly den_;
};

}  // namespace qpde
