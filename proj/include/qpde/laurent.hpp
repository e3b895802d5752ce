#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qpde/cyclo.hpp"

namespace qpde {

// Sparse Laurent polynomial in NV elliptic variables with Cyclo
// coefficients.  Exponents are stored as integers on a 1/dz grid, so
// z^(3/2) at dz = 2 is the key 3.  One variable is the workhorse; the
// two-variable instantiation only serves the theta addition lemma.
template <int NV = 1>
class LaurentPoly {
  public:
    using Key = std::conditional_t<NV == 1, long long, std::array<long long, NV>>;
    using Terms = std::map<Key, Cyclo>;

    LaurentPoly() : dz_(1) {}

    static LaurentPoly constant(Cyclo c) {
        LaurentPoly p;
        if (!c.is_zero()) p.t_.emplace(zero_key(), std::move(c));
        return p;
    }
    static LaurentPoly one() { return constant(Cyclo::one()); }

    // z_v^(e/dz) * c
    static LaurentPoly monomial(Cyclo c, long long e, int dz, int var = 0) {
        LaurentPoly p;
        p.dz_ = dz;
        if (!c.is_zero()) {
            Key k = zero_key();
            at(k, var) = e;
            p.t_.emplace(k, std::move(c));
        }
        return p;
    }

    int dz() const { return dz_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first == zero_key());
    }
    Cyclo constant_value() const {
        if (t_.empty()) return Cyclo::zero();
        return t_.begin()->second;
    }

    // Lowest/highest exponent of one variable (scaled by dz); zero poly -> 0.
    long long low(int var = 0) const {
        bool any = false;
        long long best = 0;
        for (const auto& [k, c] : t_) {
            long long e = at(k, var);
            if (!any || e < best) best = e;
            any = true;
        }
        return best;
    }
    long long high(int var = 0) const {
        bool any = false;
        long long best = 0;
        for (const auto& [k, c] : t_) {
            long long e = at(k, var);
            if (!any || e > best) best = e;
            any = true;
        }
        return best;
    }

    LaurentPoly rescaled(int dz) const {
        if (dz == dz_) return *this;
        const long long f = dz / dz_;
        LaurentPoly out;
        out.dz_ = dz;
        for (const auto& [k, c] : t_) {
            Key nk = k;
            scale_key(nk, f);
            out.t_.emplace(nk, c);
        }
        return out;
    }

    LaurentPoly operator-() const {
        LaurentPoly out = *this;
        for (auto& [k, c] : out.t_) c = -c;
        return out;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        auto [x, y] = aligned(a, b);
        for (const auto& [k, c] : y.t_) {
            auto [it, fresh] = x.t_.try_emplace(k, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) x.t_.erase(it);
            }
        }
        return x;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        auto [x, y] = aligned(a, b);
        LaurentPoly out;
        out.dz_ = x.dz_;
        for (const auto& [ka, ca] : x.t_) {
            for (const auto& [kb, cb] : y.t_) {
                Cyclo prod = ca * cb;
                if (prod.is_zero()) continue;
                Key k = ka;
                add_key(k, kb);
                auto [it, fresh] = out.t_.try_emplace(k, prod);
                if (!fresh) {
                    it->second += prod;
                    if (it->second.is_zero()) out.t_.erase(it);
                }
            }
        }
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rat& r) const { return scaled(Cyclo(r)); }

    LaurentPoly scaled(const Cyclo& c) const {
        LaurentPoly out;
        out.dz_ = dz_;
        if (c.is_zero()) return out;
        for (const auto& [k, v] : t_) {
            Cyclo prod = v * c;
            if (!prod.is_zero()) out.t_.emplace(k, std::move(prod));
        }
        return out;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        auto [x, y] = aligned(a, b);
        return x.t_ == y.t_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // z_v d/dz_v: multiplies each term by its rational exponent.
    LaurentPoly delta_z(int var = 0) const {
        LaurentPoly out;
        out.dz_ = dz_;
        for (const auto& [k, c] : t_) {
            long long e = at(k, var);
            if (e == 0) continue;
            Cyclo v = c.scaled(Rat(e, dz_));
            if (!v.is_zero()) out.t_.emplace(k, std::move(v));
        }
        return out;
    }

    // z_v -> e^(2 pi i theta) z_v applied exactly on the exponent grid.
    LaurentPoly rotated(const Rat& theta, int var = 0) const {
        LaurentPoly out;
        out.dz_ = dz_;
        for (const auto& [k, c] : t_) {
            Cyclo v = c * Cyclo::root_phase(theta * Rat(at(k, var), dz_));
            if (!v.is_zero()) out.t_.emplace(k, std::move(v));
        }
        return out;
    }

    // z_v -> z_v^a for nonzero integer a.
    LaurentPoly powered(long long a, int var = 0) const {
        LaurentPoly out;
        out.dz_ = dz_;
        for (const auto& [k, c] : t_) {
            Key nk = k;
            at(nk, var) *= a;
            out.t_.emplace(nk, c);
        }
        return out;
    }

    // Shift exponents of one variable by e/dz (callers align grids first).
    LaurentPoly shifted(long long e, int var = 0) const {
        LaurentPoly out;
        out.dz_ = dz_;
        for (const auto& [k, c] : t_) {
            Key nk = k;
            at(nk, var) += e;
            out.t_.emplace(nk, c);
        }
        return out;
    }

    Cyclo eval_at_one() const {
        Cyclo sum;
        for (const auto& [k, c] : t_) sum += c;
        return sum;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (t_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, c] : t_) {
            std::string mono;
            for (int v = 0; v < NV; ++v) {
                long long e = at(k, v);
                if (e == 0) continue;
                std::string nm = v < static_cast<int>(names.size()) ? names[v]
                                 : NV == 1                          ? "z"
                                                                    : "z" + std::to_string(v + 1);
                if (!mono.empty()) mono += "*";
                mono += nm;
                if (e != dz_) mono += "^(" + format_rat(Rat(e, dz_)) + ")";
            }
            std::string cs = c.str();
            std::string term;
            if (mono.empty())
                term = cs;
            else if (cs == "1")
                term = mono;
            else if (cs == "-1")
                term = "-" + mono;
            else
                term = cs + "*" + mono;
            if (first) {
                out = term;
                first = false;
            } else if (!term.empty() && term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }

    static Key zero_key() {
        if constexpr (NV == 1)
            return 0;
        else
            return Key{};
    }

  private:
    static long long& at(Key& k, int var) {
        if constexpr (NV == 1)
            return k;
        else
            return k[var];
    }
    static long long at(const Key& k, int var) {
        if constexpr (NV == 1)
            return k;
        else
            return k[var];
    }
    static void add_key(Key& k, const Key& o) {
        if constexpr (NV == 1) {
            k += o;
        } else {
            for (int v = 0; v < NV; ++v) k[v] += o[v];
        }
    }
    static void scale_key(Key& k, long long f) {
        if constexpr (NV == 1) {
            k *= f;
        } else {
            for (int v = 0; v < NV; ++v) k[v] *= f;
        }
    }

    static std::pair<LaurentPoly, LaurentPoly> aligned(const LaurentPoly& a, const LaurentPoly& b) {
        const int dz = static_cast<int>(lllcm(a.dz_, b.dz_));
        return {a.rescaled(dz), b.rescaled(dz)};
    }

    int dz_;
    Terms t_;
};

using ZPoly = LaurentPoly<1>;
using ZPoly2 = LaurentPoly<2>;

}  // namespace qpde
