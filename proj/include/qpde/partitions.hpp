#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "qpde/generators.hpp"

namespace qpde {

// Brute-force partition oracle.  Everything here is deliberately naive: it
// exists to cross-check series coefficients, so it must not share code with
// the generating-function side.

struct Partition {
    std::vector<long long> parts;  // non-increasing, all >= 1

    long long size() const {
        long long s = 0;
        for (long long p : parts) s += p;
        return s;
    }

    // Largest part minus the number of parts; zero for the empty partition.
    long long rank() const {
        if (parts.empty()) return 0;
        return parts.front() - static_cast<long long>(parts.size());
    }
};

struct RankTable {
    long long n = 0;
    std::map<long long, BigInt> counts;  // m -> N(m, n)

    BigInt total() const {
        BigInt t = 0;
        for (const auto& [m, c] : counts) t += c;
        return t;
    }
};

struct MomentTable {
    unsigned k = 0;
    std::map<long long, BigInt> values;  // n -> k-th moment at n
};

inline constexpr long long kEnumerationLimit = 60;

// All partitions of n in ascending lexicographic order of the
// non-increasing part sequences.
inline std::vector<Partition> enumerate_partitions(long long n,
                                                   long long limit = kEnumerationLimit) {
    if (n < 0) throw BadInput("cannot partition a negative integer");
    if (n > limit)
        throw LimitExceeded("partition enumeration of " + std::to_string(n) +
                            " exceeds the limit " + std::to_string(limit));
    std::vector<Partition> out;
    std::vector<long long> cur;
    auto rec = [&](auto&& self, long long rem, long long cap) -> void {
        if (rem == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (long long a = 1; a <= std::min(rem, cap); ++a) {
            cur.push_back(a);
            self(self, rem - a, a);
            cur.pop_back();
        }
    };
    rec(rec, n, std::max<long long>(n, 1));
    return out;
}

// N(m, n) by direct enumeration.  The empty partition carries rank zero,
// so N(0, 0) = 1.
inline RankTable rank_counts(long long n, long long limit = kEnumerationLimit) {
    RankTable table;
    table.n = n;
    for (const Partition& p : enumerate_partitions(n, limit)) ++table.counts[p.rank()];
    return table;
}

enum class MomentSource { RankSeries, Oracle };

namespace moment_detail {

// sum over stored z-exponents m of C(m + off, k) * c_m, for a coefficient
// that must be an integer Laurent polynomial on the unit z-grid.
inline BigInt weighted_sum(const RatCoeff& c, unsigned k, long long off) {
    if (c.is_zero()) return 0;
    if (!c.is_polynomial())
        throw BadInput("moment extraction needs a polynomial z-coefficient");
    const ZPoly& p = c.num();
    if (p.dz() != 1) throw BadInput("moment extraction needs integer z-exponents");
    BigInt acc = 0;
    for (const auto& [m, cy] : p.terms()) {
        if (!cy.is_rational() || !is_integer(cy.rational()))
            throw BadInput("moment extraction needs integer counts");
        acc += binom(BigInt(m + off), k) * rat_num(cy.rational());
    }
    return acc;
}

inline BigInt weighted_sum(const RankTable& t, unsigned k, long long off) {
    BigInt acc = 0;
    for (const auto& [m, c] : t.counts) acc += binom(BigInt(m + off), k) * c;
    return acc;
}

}  // namespace moment_detail

// Symmetrized rank moment: sum over m of C(m + floor((k-1)/2), k) N(m, n),
// with the generalized binomial over negative upper arguments.  Identically
// zero for odd k by the m <-> -m symmetry of the table.
inline BigInt moment_eta(unsigned k, long long n, MomentSource source,
                         long long limit = kEnumerationLimit) {
    if (k < 1) throw BadInput("moment index must be positive");
    const long long off = static_cast<long long>((k - 1) / 2);
    if (source == MomentSource::Oracle)
        return moment_detail::weighted_sum(rank_counts(n, limit), k, off);
    return moment_detail::weighted_sum(rank_series(RankForm::Lerch, n).coeff(n), k, off);
}

// Odd-rank moment: sum over m of C(m + floor(k/2), k) N-odd(m, n), with the
// counts read off the q^n coefficient of the odd Durfee series.  No
// enumeration oracle backs this one; the series is the definition.
inline BigInt moment_eta_odd(unsigned k, long long n) {
    if (k < 1) throw BadInput("moment index must be positive");
    return moment_detail::weighted_sum(rodd_series(n).coeff(n),
                                       k, static_cast<long long>(k / 2));
}

// Table builders share one series expansion across the whole range.
inline MomentTable moment_table(unsigned k, long long n_max, MomentSource source,
                                long long limit = kEnumerationLimit) {
    if (k < 1) throw BadInput("moment index must be positive");
    const long long off = static_cast<long long>((k - 1) / 2);
    MomentTable out;
    out.k = k;
    if (source == MomentSource::Oracle) {
        for (long long n = 0; n <= n_max; ++n)
            out.values[n] = moment_detail::weighted_sum(rank_counts(n, limit), k, off);
        return out;
    }
    const QSeries r = rank_series(RankForm::Lerch, n_max);
    for (long long n = 0; n <= n_max; ++n)
        out.values[n] = moment_detail::weighted_sum(r.coeff(n), k, off);
    return out;
}

inline MomentTable moment_table_odd(unsigned k, long long n_max) {
    if (k < 1) throw BadInput("moment index must be positive");
    const QSeries r = rodd_series(n_max);
    MomentTable out;
    out.k = k;
    for (long long n = 0; n <= n_max; ++n)
        out.values[n] = moment_detail::weighted_sum(r.coeff(n), k, static_cast<long long>(k / 2));
    return out;
}

}  // namespace qpde
