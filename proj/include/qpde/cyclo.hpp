#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpde/rational.hpp"

namespace qpde {

namespace detail {

// Per-order data for Q(zeta_N): Euler phi, the cyclotomic polynomial Phi_N
// (monic, degree phi), and zeta^j expressed in the power basis for every
// j < N.  Cached thread-locally so concurrent verification needs no locks.
struct CycloTable {
    int phi = 1;
    std::vector<Rat> minpoly;             // Phi_N, index = power, size phi+1
    std::vector<std::vector<Rat>> pow;    // pow[j] = coords of zeta^j, size N
};

// Exact division of polynomials over Q; remainder must come out zero.
inline std::vector<Rat> poly_divide_exact(std::vector<Rat> num, const std::vector<Rat>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<Rat> quot(dn - dd + 1);
    for (int d = dn; d >= dd; --d) {
        Rat c = num[d] / den[dd];
        quot[d - dd] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[d - dd + j] -= c * den[j];
    }
    return quot;
}

inline const CycloTable& cyclo_table(int n) {
    thread_local std::map<int, CycloTable> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively.
    std::vector<Rat> poly(n + 1);
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        poly = poly_divide_exact(std::move(poly), cyclo_table(d).minpoly);
    }

    CycloTable t;
    t.minpoly = std::move(poly);
    t.phi = static_cast<int>(t.minpoly.size()) - 1;

    // Walk x^j mod Phi_n forward: multiply by x, fold the top power back in.
    t.pow.assign(n, std::vector<Rat>(t.phi));
    t.pow[0][0] = 1;
    for (int j = 1; j < n; ++j) {
        std::vector<Rat> next(t.phi);
        const auto& prev = t.pow[j - 1];
        for (int d = 0; d + 1 < t.phi; ++d) next[d + 1] = prev[d];
        const Rat& top = prev[t.phi - 1];
        if (top != 0)
            for (int d = 0; d < t.phi; ++d) next[d] -= top * t.minpoly[d];
        t.pow[j] = std::move(next);
    }
    return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace detail

// An element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1},
// reduced modulo Phi_N.  Values that are plainly rational are demoted to
// N = 1 so the common case stays a single rational.
class Cyclo {
  public:
    Cyclo() : n_(1), c_(1) {}
    explicit Cyclo(Rat r) : n_(1), c_{std::move(r)} {}
    explicit Cyclo(long long v) : Cyclo(Rat(v)) {}

    static Cyclo zero() { return Cyclo(); }
    static Cyclo one() { return Cyclo(Rat(1)); }

    // e^{2 pi i k / n}
    static Cyclo root(int n, long long k) {
        k %= n;
        if (k < 0) k += n;
        long long g = std::gcd<long long>(k, n);
        n = static_cast<int>(n / g);
        k /= g;
        Cyclo out;
        out.n_ = n;
        out.c_ = detail::cyclo_table(n).pow[static_cast<size_t>(k)];
        out.demote();
        return out;
    }

    // e^{2 pi i r} for rational r.
    static Cyclo root_phase(const Rat& r) {
        const BigInt den = rat_den(r);
        BigInt num = rat_num(r) % den;
        if (num < 0) num += den;
        return root(static_cast<int>(to_ll(den)), to_ll(num));
    }

    static Cyclo imag_unit() { return root(4, 1); }

    int order() const { return n_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const { return n_ == 1; }
    const Rat& rational() const { return c_[0]; }

    Cyclo operator-() const {
        Cyclo out = *this;
        for (auto& c : out.c_) c = -c;
        return out;
    }

    Cyclo& operator+=(const Cyclo& o) {
        if (n_ == o.n_) {
            for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        } else {
            promote(lllcm(n_, o.n_));
            Cyclo tmp = o;
            tmp.promote(n_);
            for (size_t i = 0; i < c_.size(); ++i) c_[i] += tmp.c_[i];
        }
        demote();
        return *this;
    }
    Cyclo& operator-=(const Cyclo& o) { return *this += -o; }

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }

    friend Cyclo operator*(const Cyclo& a, const Cyclo& b) {
        if (a.n_ == 1 && b.n_ == 1) return Cyclo(a.c_[0] * b.c_[0]);
        if (a.n_ == 1) return b.scaled(a.c_[0]);
        if (b.n_ == 1) return a.scaled(b.c_[0]);
        Cyclo x = a;
        Cyclo y = b;
        const long long n = lllcm(x.n_, y.n_);
        x.promote(n);
        y.promote(n);
        const auto& table = detail::cyclo_table(x.n_);
        const int phi = table.phi;
        std::vector<Rat> conv(2 * phi - 1);
        for (int i = 0; i < phi; ++i) {
            if (x.c_[i] == 0) continue;
            for (int j = 0; j < phi; ++j) {
                if (y.c_[j] == 0) continue;
                conv[i + j] += x.c_[i] * y.c_[j];
            }
        }
        Cyclo out;
        out.n_ = x.n_;
        out.c_.assign(phi, Rat(0));
        for (int d = 0; d < static_cast<int>(conv.size()); ++d) {
            if (conv[d] == 0) continue;
            if (d < phi) {
                out.c_[d] += conv[d];
            } else {
                const auto& row = table.pow[d % x.n_];
                for (int j = 0; j < phi; ++j) out.c_[j] += conv[d] * row[j];
            }
        }
        out.demote();
        return out;
    }
    Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

    Cyclo scaled(const Rat& r) const {
        Cyclo out = *this;
        for (auto& c : out.c_) c *= r;
        out.demote();
        return out;
    }

    // Multiplicative inverse via extended Euclid against Phi_N.
    Cyclo inverse() const {
        if (is_zero()) throw NonInvertibleLeadingTerm("inverse of zero cyclotomic value");
        if (n_ == 1) return Cyclo(Rat(1) / c_[0]);
        const auto& table = detail::cyclo_table(n_);
        // r0 = Phi_N, r1 = this; track s only (coefficients of `this`).
        std::vector<Rat> r0 = table.minpoly;
        std::vector<Rat> r1 = c_;
        strip(r1);
        std::vector<Rat> s0;                 // s for r0
        std::vector<Rat> s1 = {Rat(1)};      // s for r1
        while (true) {
            // r0 = q * r1 + r2
            std::vector<Rat> rem = r0;
            std::vector<Rat> quot(std::max<size_t>(1, rem.size() - r1.size() + 1));
            const int dd = static_cast<int>(r1.size()) - 1;
            for (int d = static_cast<int>(rem.size()) - 1; d >= dd; --d) {
                Rat c = rem[d] / r1[dd];
                if (c == 0) continue;
                quot[d - dd] = c;
                for (int j = 0; j <= dd; ++j) rem[d - dd + j] -= c * r1[j];
            }
            strip(rem);
            // s2 = s0 - q * s1
            std::vector<Rat> s2 = s0;
            s2.resize(std::max(s2.size(), quot.size() + s1.size()), Rat(0));
            for (size_t i = 0; i < quot.size(); ++i) {
                if (quot[i] == 0) continue;
                for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= quot[i] * s1[j];
            }
            strip(s2);
            // Rescale the pair so the remainder is primitive; without this the
            // coefficient heights of the remainder sequence grow exponentially.
            if (!rem.empty()) {
                const Rat c = content(rem);
                if (c != 1) {
                    for (auto& v : rem) v /= c;
                    for (auto& v : s2) v /= c;
                }
            }
            if (rem.empty()) {
                // r1 is the gcd; it must be a nonzero constant since Phi_N
                // is irreducible and `this` is nonzero of smaller degree.
                Cyclo out;
                out.n_ = n_;
                out.c_.assign(table.phi, Rat(0));
                for (size_t i = 0; i < s1.size() && i < out.c_.size(); ++i) out.c_[i] = s1[i] / r1[0];
                out.demote();
                return out;
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
    }

    friend bool operator==(const Cyclo& a, const Cyclo& b) {
        if (a.n_ == b.n_) return a.c_ == b.c_;
        Cyclo x = a;
        Cyclo y = b;
        const long long n = lllcm(x.n_, y.n_);
        x.promote(n);
        y.promote(n);
        return x.c_ == y.c_;
    }
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    // Compact rendering: rationals plainly, Q(zeta_4) via i, otherwise in
    // terms of wN = e^(2 pi i / N).
    std::string str() const {
        if (n_ == 1) return format_rat(c_[0]);
        std::string out;
        bool first = true;
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            std::string part;
            const bool neg = c_[j] < 0;
            Rat mag = neg ? Rat(-c_[j]) : c_[j];
            std::string sym;
            if (j > 0) {
                if (n_ == 4)
                    sym = "i";
                else
                    sym = "w" + std::to_string(n_) + (j > 1 ? "^" + std::to_string(j) : "");
            }
            if (j == 0 || mag != 1)
                part = format_rat(mag) + (sym.empty() ? "" : "*" + sym);
            else
                part = sym;
            if (first) {
                out += (neg ? "-" : "") + part;
                first = false;
            } else {
                out += (neg ? " - " : " + ") + part;
            }
        }
        if (first) return "0";
        if (out.find(' ') != std::string::npos) return "(" + out + ")";
        return out;
    }

  private:
    static void strip(std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    }

    // gcd of numerators over lcm of denominators, as a positive rational.
    static Rat content(const std::vector<Rat>& p) {
        BigInt g = 0;
        BigInt l = 1;
        for (const auto& c : p) {
            if (c == 0) continue;
            g = boost::multiprecision::gcd(g, rat_num(c));
            const BigInt d = rat_den(c);
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
        if (g == 0) return Rat(1);
        if (g < 0) g = -g;
        return Rat(g, l);
    }

    void promote(long long n) {
        if (n == n_) return;
        const auto& table = detail::cyclo_table(static_cast<int>(n));
        const long long step = n / n_;
        std::vector<Rat> out(table.phi);
        for (size_t j = 0; j < c_.size(); ++j) {
            if (c_[j] == 0) continue;
            const auto& row = table.pow[(j * step) % n];
            for (int d = 0; d < table.phi; ++d) out[d] += c_[j] * row[d];
        }
        n_ = static_cast<int>(n);
        c_ = std::move(out);
    }

    void demote() {
        if (n_ == 1) return;
        for (size_t j = 1; j < c_.size(); ++j)
            if (c_[j] != 0) return;
        Rat keep = std::move(c_[0]);
        n_ = 1;
        c_.assign(1, std::move(keep));
    }

    int n_;
    std::vector<Rat> c_;
};

}  // namespace qpde
