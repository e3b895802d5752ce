#pragma once

#include <limits>
#include <optional>
#include <tuple>
#include <utility>

#include "qpde/ratfun.hpp"

namespace qpde {

// z -> e^(2 pi i theta) z^zpow q^qshift,  q -> q^qpow.
struct Substitution {
    Rat theta = 0;
    long long zpow = 1;
    Rat qshift = 0;
    long long qpow = 1;

    // Composition: apply `first`, then `second`.
    static Substitution compose(const Substitution& first, const Substitution& second) {
        Substitution net;
        net.theta = first.theta + Rat(first.zpow) * second.theta;
        net.zpow = first.zpow * second.zpow;
        net.qshift = Rat(first.zpow) * second.qshift + Rat(second.qpow) * first.qshift;
        net.qpow = first.qpow * second.qpow;
        return net;
    }
};

// Truncated Puiseux series in q.  Exponents live on a 1/dq grid and are
// stored scaled by dq.  `lo` is a lower bound on every exponent (a finite
// principal part is allowed); exponents >= the truncation order are
// unknown.  Exact objects (finite q-polynomials) carry no order at all.
template <class C>
class Series {
  public:
    static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

    Series() : dq_(1), lo_(0), ord_(kInf), exact_(true) {}

    // Exact monomial coeff * q^e.
    static Series monomial(C coeff, const Rat& e) {
        Series s;
        s.dq_ = static_cast<int>(to_ll(rat_den(e)));
        const long long k = to_ll(rat_num(e));
        s.lo_ = k;
        if (!coeff.is_zero()) s.t_.emplace(k, std::move(coeff));
        return s;
    }
    static Series constant(C coeff) { return monomial(std::move(coeff), Rat(0)); }

    // Unknown-beyond-`order` zero template used by builders.
    static Series truncated_zero(const Rat& order, const Rat& lo = Rat(0)) {
        Series s;
        s.exact_ = false;
        s.dq_ = static_cast<int>(lllcm(to_ll(rat_den(order)), to_ll(rat_den(lo))));
        s.ord_ = to_ll(rat_num(order)) * (s.dq_ / to_ll(rat_den(order)));
        s.lo_ = to_ll(rat_num(lo)) * (s.dq_ / to_ll(rat_den(lo)));
        if (s.lo_ > s.ord_) s.lo_ = s.ord_;
        return s;
    }

    int dq() const { return dq_; }
    bool exact() const { return exact_; }
    bool is_zero() const { return t_.empty(); }

    Rat order() const {
        if (exact_) throw OrderExceedsTruncation("exact series carries no truncation order");
        return Rat(ord_, dq_);
    }
    std::optional<Rat> order_opt() const {
        if (exact_) return std::nullopt;
        return Rat(ord_, dq_);
    }
    Rat low_bound() const { return Rat(lo_, dq_); }

    const std::map<long long, C>& terms() const { return t_; }

    // Coefficient of q^e; throws when e is outside the known range.
    C coeff(const Rat& e) const {
        Rat on_grid = e * dq_;
        if (!is_integer(on_grid)) {
            if (!exact_ && e >= Rat(ord_, dq_))
                throw OrderExceedsTruncation("coefficient beyond truncation order");
            return C();
        }
        const long long k = to_ll(rat_num(on_grid));
        if (!exact_ && k >= ord_)
            throw OrderExceedsTruncation("coefficient beyond truncation order");
        auto it = t_.find(k);
        return it == t_.end() ? C() : it->second;
    }

    Series rescaled(int dq) const {
        if (dq == dq_) return *this;
        const long long f = dq / dq_;
        Series out;
        out.dq_ = dq;
        out.exact_ = exact_;
        out.lo_ = lo_ * f;
        out.ord_ = exact_ ? kInf : ord_ * f;
        for (const auto& [e, c] : t_) out.t_.emplace(e * f, c);
        return out;
    }

    Series truncated(const Rat& order) const {
        const int dq = static_cast<int>(lllcm(dq_, to_ll(rat_den(order))));
        Series out = rescaled(dq);
        const long long k = to_ll(rat_num(order)) * (dq / to_ll(rat_den(order)));
        if (out.exact_ || k < out.ord_) {
            out.ord_ = k;
            out.exact_ = false;
        }
        out.clamp();
        return out;
    }

    Series operator-() const {
        Series out = *this;
        for (auto& [e, c] : out.t_) c = -c;
        return out;
    }

    friend Series operator+(const Series& a, const Series& b) {
        auto [x, y] = aligned(a, b);
        x.exact_ = x.exact_ && y.exact_;
        x.ord_ = std::min(x.ord_, y.ord_);
        x.lo_ = std::min(x.lo_, y.lo_);
        for (auto& [e, c] : y.t_) {
            auto [it, fresh] = x.t_.try_emplace(e, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) x.t_.erase(it);
            }
        }
        x.clamp();
        return x;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator*(const Series& a, const Series& b) {
        auto [x, y] = aligned(a, b);
        Series out;
        out.dq_ = x.dq_;
        out.exact_ = x.exact_ && y.exact_;
        out.lo_ = x.lo_ + y.lo_;
        // A factor known to order O contributes its error at exponent
        // O + (other factor's lower bound) onward.
        out.ord_ = std::min(x.exact_ ? kInf : x.ord_ + y.lo_,
                            y.exact_ ? kInf : y.ord_ + x.lo_);
        for (const auto& [ea, ca] : x.t_) {
            for (const auto& [eb, cb] : y.t_) {
                const long long e = ea + eb;
                if (e >= out.ord_) continue;
                C prod = ca * cb;
                if (prod.is_zero()) continue;
                auto [it, fresh] = out.t_.try_emplace(e, std::move(prod));
                if (!fresh) {
                    it->second += prod;
                    if (it->second.is_zero()) out.t_.erase(it);
                }
            }
        }
        return out;
    }

    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator-=(const Series& o) { return *this = *this - o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    template <class S>
    Series scaled(const S& s) const {
        Series out = *this;
        for (auto it = out.t_.begin(); it != out.t_.end();) {
            it->second = it->second.scaled(s);
            it = it->second.is_zero() ? out.t_.erase(it) : std::next(it);
        }
        return out;
    }

    // Multiply by q^e.
    Series shifted_q(const Rat& e) const {
        const int dq = static_cast<int>(lllcm(dq_, to_ll(rat_den(e))));
        Series out = rescaled(dq);
        const long long k = to_ll(rat_num(e)) * (dq / to_ll(rat_den(e)));
        Series res;
        res.dq_ = dq;
        res.exact_ = out.exact_;
        res.lo_ = out.lo_ + k;
        res.ord_ = out.exact_ ? kInf : out.ord_ + k;
        for (auto& [ee, c] : out.t_) res.t_.emplace(ee + k, std::move(c));
        return res;
    }

    // q d/dq
    Series delta_q() const {
        Series out = *this;
        for (auto it = out.t_.begin(); it != out.t_.end();) {
            it->second = it->second.scaled(Rat(it->first, dq_));
            it = it->second.is_zero() ? out.t_.erase(it) : std::next(it);
        }
        return out;
    }

    // z d/dz applied to every coefficient.
    Series delta_z() const {
        Series out = *this;
        for (auto it = out.t_.begin(); it != out.t_.end();) {
            it->second = it->second.delta_z();
            it = it->second.is_zero() ? out.t_.erase(it) : std::next(it);
        }
        return out;
    }

    // Normalized heat operator H_s = s * delta_q + delta_z^2.
    Series heat(const Rat& s) const { return delta_q().scaled(s) + delta_z().delta_z(); }

    // Series inverse by back-substitution.  The leading stored term must be
    // invertible; validity shrinks to O - 2L with L the leading exponent.
    Series inverse(std::optional<Rat> order = std::nullopt) const {
        if (t_.empty())
            throw NonInvertibleLeadingTerm("inverse of a series with zero leading coefficient");
        Series a = *this;
        if (order) {
            const long long e0s = a.t_.begin()->first;
            a = a.truncated(*order + 2 * Rat(e0s, a.dq_));
        }
        if (a.exact_)
            throw BadInput("inverse of an exact series needs an explicit target order");
        if (a.t_.empty())
            throw NonInvertibleLeadingTerm("inverse of a series with zero leading coefficient");

        const long long e0 = a.t_.begin()->first;
        const C inv0 = a.t_.begin()->second.inverse();
        Series out;
        out.dq_ = a.dq_;
        out.exact_ = false;
        out.lo_ = -e0;
        out.ord_ = a.ord_ - 2 * e0;
        if (out.ord_ <= out.lo_) return out;
        out.t_.emplace(-e0, inv0);
        for (long long t = -e0 + 1; t < out.ord_; ++t) {
            C acc;
            bool any = false;
            // sum over stored a-terms beyond the leading one
            for (auto it = std::next(a.t_.begin()); it != a.t_.end(); ++it) {
                const long long need = t + e0 - it->first;
                if (need < -e0) break;  // map is sorted ascending: later terms need even lower
                auto bt = out.t_.find(need);
                if (bt == out.t_.end()) continue;
                C prod = it->second * bt->second;
                if (prod.is_zero()) continue;
                acc = any ? acc + prod : prod;
                any = true;
            }
            if (!any) continue;
            C val = -(inv0 * acc);
            if (!val.is_zero()) out.t_.emplace(t, std::move(val));
        }
        return out;
    }

    // Applies z -> e^(2 pi i theta) z^zpow q^qshift, q -> q^qpow.
    //
    // With qshift = 0 the transform is exact coefficient-by-coefficient.
    // A nonzero qshift folds z-exponents into q-exponents, so coefficients
    // the input no longer carries could in principle land below any finite
    // output order; callers are responsible for building the input deep
    // enough for the requested `out_order` (every registry user does).
    Series substitute(const Substitution& s, std::optional<Rat> out_order = std::nullopt) const
        requires std::is_same_v<C, RatCoeff>
    {
        if (s.qpow < 1) throw BadInput("substitution needs a positive q power");
        if (s.zpow == 0) throw BadInput("substitution needs a nonzero z power");
        if (s.qshift == 0) {
            Series out;
            out.dq_ = dq_;
            out.exact_ = exact_;
            out.lo_ = lo_ * s.qpow;
            out.ord_ = exact_ ? kInf : ord_ * s.qpow;
            for (const auto& [e, c] : t_) {
                C v = c.rotated(s.theta).powered(s.zpow);
                if (!v.is_zero()) out.t_.emplace(e * s.qpow, std::move(v));
            }
            if (out_order) return out.truncated(*out_order);
            return out;
        }

        if (!out_order && !exact_)
            throw BadInput("substitution with a q shift needs an explicit target order");

        // Image of one Laurent polynomial in z: a finite exact series whose
        // coefficients are monomials in z.
        auto image = [&](const ZPoly& p) {
            Series img;
            const int dz = p.dz();
            for (const auto& [ze, cy] : p.terms()) {
                Cyclo v = cy * Cyclo::root_phase(s.theta * Rat(ze, dz));
                img += Series::monomial(RatCoeff(ZPoly::monomial(v, ze * s.zpow, dz)),
                                        s.qshift * Rat(ze, dz));
            }
            return img;
        };

        Series acc;
        if (out_order) acc = acc.truncated(*out_order);
        for (const auto& [e, c] : t_) {
            Series part = image(c.num());
            if (part.is_zero()) continue;
            part = part.shifted_q(Rat(e * s.qpow, dq_));
            if (!c.is_polynomial()) {
                Series den = image(c.den());
                std::optional<Rat> need;
                if (out_order) {
                    // The product's lowest exponent is part.low - den.low; a
                    // term living entirely at or above the target order is
                    // droppable (and its denominator inverse ill-posed).
                    if (part.low_bound() - den.low_bound() >= *out_order) continue;
                    need = *out_order - part.low_bound();
                }
                part *= den.inverse(need);
            }
            if (out_order) part = part.truncated(*out_order);
            acc += part;
        }
        return acc;
    }

    // Specialize z -> 1 (coefficients must have no pole there).
    Series at_z_one() const
        requires std::is_same_v<C, RatCoeff>
    {
        Series out = *this;
        for (auto it = out.t_.begin(); it != out.t_.end();) {
            it->second = RatCoeff(it->second.eval_at_one());
            it = it->second.is_zero() ? out.t_.erase(it) : std::next(it);
        }
        return out;
    }

    struct Mismatch {
        Rat exponent;
        C lhs;
        C rhs;
    };

    // First coefficient difference at exponents <= through; both series
    // must actually know that range.
    static std::optional<Mismatch> first_mismatch(const Series& a, const Series& b,
                                                  const Rat& through) {
        for (const Series* s : {&a, &b})
            if (!s->exact_ && through >= Rat(s->ord_, s->dq_))
                throw OrderExceedsTruncation("comparison range exceeds truncation order");
        auto [x, y] = aligned(a, b);
        const Rat lim = through * x.dq_;
        auto ia = x.t_.begin();
        auto ib = y.t_.begin();
        while (ia != x.t_.end() || ib != y.t_.end()) {
            long long ea = ia != x.t_.end() ? ia->first : kInf;
            long long eb = ib != y.t_.end() ? ib->first : kInf;
            long long e = std::min(ea, eb);
            if (Rat(e) > lim) break;
            C ca = ea == e ? ia->second : C();
            C cb = eb == e ? ib->second : C();
            if (!(ca == cb)) return Mismatch{Rat(e, x.dq_), ca, cb};
            if (ea == e) ++ia;
            if (eb == e) ++ib;
        }
        return std::nullopt;
    }

  private:
    void clamp() {
        if (exact_) return;
        auto it = t_.lower_bound(ord_);
        t_.erase(it, t_.end());
        if (lo_ > ord_) lo_ = ord_;
    }

    static std::pair<Series, Series> aligned(const Series& a, const Series& b) {
        const int dq = static_cast<int>(lllcm(a.dq_, b.dq_));
        return {a.rescaled(dq), b.rescaled(dq)};
    }

    int dq_;
    long long lo_;
    long long ord_;
    bool exact_;
    std::map<long long, C> t_;
};

using QSeries = Series<RatCoeff>;
using QSeries2 = Series<ZPoly2>;

}  // namespace qpde
