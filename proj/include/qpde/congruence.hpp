#pragma once

#include <optional>
#include <vector>

#include "qpde/parallel.hpp"
#include "qpde/partitions.hpp"

namespace qpde {

// Arithmetic-progression congruence scanner: searches for (A, B) with
// eta_k^o(A n + B) = 0 mod p^j for every tested n.  Exact two-variable
// series are far too slow at scanner depth, so the sequences are built
// modulo p^j in machine words; tests pin this path against the exact
// moment tables on their shared range.

struct CongruenceCandidate {
    long long p = 0;
    long long j = 1;
    unsigned k = 0;  // moment order; 0 marks the plain p(n) sequence
    long long A = 1;
    long long B = 0;
    long long n_max_tested = 0;
    std::optional<long long> refuted_at;  // empty == verified up to n_max_tested

    bool verified() const { return !refuted_at.has_value(); }
};

namespace cong_detail {

// Candidate residues stay below 2^31 so sums of clamped products fit
// comfortably in int64 during back-substitution.
inline constexpr long long kModulusCap = 1LL << 31;
inline constexpr long long kSeriesCap = 1LL << 24;

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline long long modulus_of(long long p, long long j) {
    if (!is_prime(p) || p <= 3) throw InvalidModulus("p must be a prime larger than 3");
    if (j < 1) throw InvalidModulus("j must be a positive integer");
    long long m = 1;
    for (long long i = 0; i < j; ++i) {
        if (m > kModulusCap / p) throw InvalidModulus("p^j exceeds the machine-word budget");
        m *= p;
    }
    return m;
}

inline void check_length(long long len) {
    if (len > kSeriesCap)
        throw OrderExceedsTruncation("requested congruence scan depth is out of budget");
}

// In-place division by (q^s; q^s)_inf through the pentagonal number
// theorem: subtract the shifted copies generated by each exponent
// s*g(3g-1)/2, g != 0, walking n upward.
inline void divide_by_euler(std::vector<long long>& a, long long s, long long mod) {
    const long long n = static_cast<long long>(a.size());
    std::vector<std::pair<long long, int>> pent;  // exponent, sign of (-1)^g
    for (long long g = 1;; ++g) {
        const long long e1 = s * g * (3 * g - 1) / 2;
        const long long e2 = s * g * (3 * g + 1) / 2;
        if (e1 >= n && e2 >= n) break;
        const int sign = g % 2 == 0 ? 1 : -1;
        if (e1 < n) pent.push_back({e1, sign});
        if (e2 < n) pent.push_back({e2, sign});
    }
    for (long long i = 0; i < n; ++i) {
        long long v = a[i];
        for (const auto& [e, sign] : pent) {
            if (e > i) break;
            v -= sign * a[i - e];
        }
        a[i] = ((v % mod) + mod) % mod;
    }
}

}  // namespace cong_detail

// p(n) mod p^j for n = 0..n_max, from 1/(q)_inf.
inline std::vector<long long> partition_residues(long long p, long long j, long long n_max) {
    const long long mod = cong_detail::modulus_of(p, j);
    if (n_max < 0) throw BadInput("n_max must be nonnegative");
    cong_detail::check_length(n_max + 1);
    std::vector<long long> a(n_max + 1, 0);
    a[0] = 1;
    cong_detail::divide_by_euler(a, 1, mod);
    return a;
}

// eta_k^o(n) mod p^j for n = 0..n_max.  The generating function
//   Ro(z; q) = (1 / (q^2;q^2)_inf) sum_r (-1)^r q^{3r^2+3r+1} / (1 - z q^{2r+1})
// turns into a single q-series once each z^m is replaced by its moment
// weight C(m + floor(k/2), k); the two geometric directions contribute
// C(m + off, k) and C(off - m, k) at the same exponents.
inline std::vector<long long> odd_moment_residues(unsigned k, long long p, long long j,
                                                  long long n_max) {
    const long long mod = cong_detail::modulus_of(p, j);
    if (k < 1) throw BadInput("moment order must be positive");
    if (n_max < 0) throw BadInput("n_max must be nonnegative");
    cong_detail::check_length(n_max + 1);

    const long long off = k / 2;
    std::vector<long long> weight(n_max + 2, 0);
    for (long long m = 0; m <= n_max + 1; ++m) {
        BigInt w = binom(BigInt(m + off), k);
        if (m >= 1) w += binom(BigInt(off - m), k);
        weight[m] = static_cast<long long>(((w % mod) + mod) % mod);
    }

    std::vector<long long> a(n_max + 1, 0);
    for (long long r = 0;; ++r) {
        const long long base = 3 * r * r + 3 * r + 1;
        if (base > n_max) break;
        const long long step = 2 * r + 1;
        const long long sign = r % 2 == 0 ? 1 : mod - 1;
        for (long long m = 0; base + step * m <= n_max; ++m)
            a[base + step * m] = (a[base + step * m] + sign * weight[m]) % mod;
    }
    cong_detail::divide_by_euler(a, 2, mod);
    return a;
}

namespace cong_detail {

inline std::vector<long long> sequence_for(unsigned k, long long p, long long j, long long n_max) {
    return k == 0 ? partition_residues(p, j, n_max) : odd_moment_residues(k, p, j, n_max);
}

inline CongruenceCandidate tested(const std::vector<long long>& seq, long long p, long long j,
                                  unsigned k, long long A, long long B, long long n_max) {
    CongruenceCandidate c;
    c.p = p;
    c.j = j;
    c.k = k;
    c.A = A;
    c.B = B;
    c.n_max_tested = n_max;
    for (long long n = 0; n <= n_max; ++n)
        if (seq[A * n + B] != 0) {
            c.refuted_at = n;
            break;
        }
    return c;
}

inline std::vector<CongruenceCandidate> scan_sequence(const std::vector<long long>& seq,
                                                      long long p, long long j, unsigned k,
                                                      long long a_max, long long n_max) {
    std::vector<std::vector<CongruenceCandidate>> rows(a_max);
    parallel_for_index(a_max, [&](size_t idx) {
        const long long A = static_cast<long long>(idx) + 1;
        for (long long B = 0; B < A; ++B) {
            auto c = tested(seq, p, j, k, A, B, n_max);
            if (c.verified()) rows[idx].push_back(std::move(c));
        }
    });
    std::vector<CongruenceCandidate> out;
    for (auto& row : rows)
        for (auto& c : row) out.push_back(std::move(c));
    return out;
}

}  // namespace cong_detail

// Every progression A <= a_max, 0 <= B < A whose eta_k^o residues vanish
// mod p^j for all 0 <= n <= n_max.  Emitted candidates are evidence
// ("verified up to"), never proof.
inline std::vector<CongruenceCandidate> scan(long long p, long long j, unsigned k, long long a_max,
                                             long long n_max) {
    if (k == 0 || k % 2 != 0) throw InvalidModulus("scan needs a positive even moment order");
    if (a_max < 1) throw BadInput("a_max must be positive");
    if (n_max < 0) throw BadInput("n_max must be nonnegative");
    auto seq = cong_detail::sequence_for(k, p, j, a_max * n_max + a_max);
    return cong_detail::scan_sequence(seq, p, j, k, a_max, n_max);
}

// Sanity mode: the same search on ordinary p(n), which must rediscover the
// Ramanujan progressions.
inline std::vector<CongruenceCandidate> scan_partitions(long long p, long long j, long long a_max,
                                                        long long n_max) {
    if (a_max < 1) throw BadInput("a_max must be positive");
    if (n_max < 0) throw BadInput("n_max must be nonnegative");
    auto seq = cong_detail::sequence_for(0, p, j, a_max * n_max + a_max);
    return cong_detail::scan_sequence(seq, p, j, 0, a_max, n_max);
}

// Exact witness residues eta_k^o(A n + B) mod p^j for n = 0..n_max; k = 0
// reads the p(n) sequence instead.  Odd k is allowed here (the residues
// are then identically zero).
inline std::vector<long long> residues(long long p, long long j, unsigned k, long long A,
                                       long long B, long long n_max) {
    if (A < 1) throw BadInput("A must be positive");
    if (B < 0 || B >= A) throw BadInput("B must satisfy 0 <= B < A");
    if (n_max < 0) throw BadInput("n_max must be nonnegative");
    auto seq = cong_detail::sequence_for(k, p, j, A * n_max + B);
    std::vector<long long> out(n_max + 1);
    for (long long n = 0; n <= n_max; ++n) out[n] = seq[A * n + B];
    return out;
}

// Re-tests one candidate at a (usually deeper) n_max; the result either
// extends the verified range or downgrades to refuted with a witness index.
inline CongruenceCandidate reverify(const CongruenceCandidate& c, long long n_max) {
    if (n_max < 0) throw BadInput("n_max must be nonnegative");
    auto seq = cong_detail::sequence_for(c.k, c.p, c.j, c.A * n_max + c.B);
    return cong_detail::tested(seq, c.p, c.j, c.k, c.A, c.B, n_max);
}

}  // namespace qpde
