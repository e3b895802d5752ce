#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "qpde/congruence.hpp"
#include "qpde/generators.hpp"

using namespace qpde;

namespace {

std::set<std::pair<long long, long long>> pairs(const std::vector<CongruenceCandidate>& cs) {
    std::set<std::pair<long long, long long>> out;
    for (const auto& c : cs) out.insert({c.A, c.B});
    return out;
}

long long mod_of(const BigInt& v, long long m) {
    return static_cast<long long>(((v % m) + m) % m);
}

}  // namespace

TEST_CASE("partition residues match the exact generating function") {
    auto exact = partition_series(121);
    for (long long p : {5LL, 7LL, 11LL}) {
        auto seq = partition_residues(p, 1, 120);
        REQUIRE(seq.size() == 121);
        for (long long n = 0; n <= 120; ++n) {
            const Cyclo v = exact.coeff(Rat(n)).eval_at_one();
            REQUIRE(v.is_rational());
            UNSCOPED_INFO("p=" << p << " n=" << n);
            CHECK(seq[n] == mod_of(rat_num(v.rational()), p));
        }
    }
}

TEST_CASE("odd moment residues match the exact moment table") {
    for (unsigned k : {2u, 4u}) {
        auto table = moment_table_odd(k, 40);
        for (long long p : {5LL, 7LL}) {
            for (long long j : {1LL, 2LL}) {
                long long m = 1;
                for (long long i = 0; i < j; ++i) m *= p;
                auto seq = odd_moment_residues(k, p, j, 40);
                for (long long n = 0; n <= 40; ++n) {
                    UNSCOPED_INFO("k=" << k << " p^j=" << m << " n=" << n);
                    CHECK(seq[n] == mod_of(table.values.at(n), m));
                }
            }
        }
    }
}

TEST_CASE("odd moment orders give identically zero sequences") {
    for (unsigned k : {1u, 3u, 5u, 7u}) {
        auto seq = odd_moment_residues(k, 5, 1, 100);
        for (long long n = 0; n <= 100; ++n) {
            UNSCOPED_INFO("k=" << k << " n=" << n);
            CHECK(seq[n] == 0);
        }
    }
}

TEST_CASE("sanity scan rediscovers the Ramanujan progressions") {
    auto five = scan_partitions(5, 1, 12, 80);
    CHECK(pairs(five) == std::set<std::pair<long long, long long>>{{5, 4}, {10, 4}, {10, 9}});

    auto seven = scan_partitions(7, 1, 12, 80);
    CHECK(pairs(seven) == std::set<std::pair<long long, long long>>{{7, 5}});

    auto eleven = scan_partitions(11, 1, 12, 80);
    CHECK(pairs(eleven) == std::set<std::pair<long long, long long>>{{11, 6}});

    for (const auto& c : five) {
        CHECK(c.verified());
        CHECK(c.k == 0);
        CHECK(c.n_max_tested == 80);
    }
}

TEST_CASE("scan results are deterministic across worker counts") {
    setenv("QPDE_THREADS", "1", 1);
    auto serial = scan(5, 1, 2, 10, 60);
    setenv("QPDE_THREADS", "7", 1);
    auto parallel = scan(5, 1, 2, 10, 60);
    unsetenv("QPDE_THREADS");

    REQUIRE(serial.size() == parallel.size());
    for (size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].A == parallel[i].A);
        CHECK(serial[i].B == parallel[i].B);
        CHECK(serial[i].n_max_tested == parallel[i].n_max_tested);
        CHECK(serial[i].refuted_at == parallel[i].refuted_at);
    }
}

TEST_CASE("deeper scans only ever shrink the candidate list") {
    auto shallow = pairs(scan(5, 1, 2, 12, 30));
    auto deep = pairs(scan(5, 1, 2, 12, 60));
    for (const auto& ab : deep) {
        UNSCOPED_INFO("A=" << ab.first << " B=" << ab.second);
        CHECK(shallow.count(ab) == 1);
    }
}

TEST_CASE("every emitted candidate has an all-zero witness list") {
    auto found = scan(5, 1, 2, 12, 40);
    for (const auto& c : found) {
        auto w = residues(c.p, c.j, c.k, c.A, c.B, c.n_max_tested);
        REQUIRE(w.size() == static_cast<size_t>(c.n_max_tested) + 1);
        for (long long r : w) CHECK(r == 0);
    }
}

TEST_CASE("nMax = 0 keeps exactly the progressions whose base point vanishes") {
    auto found = scan(5, 1, 2, 6, 0);
    auto seq = odd_moment_residues(2, 5, 1, 6);
    std::set<std::pair<long long, long long>> want;
    for (long long A = 1; A <= 6; ++A)
        for (long long B = 0; B < A; ++B)
            if (seq[B] == 0) want.insert({A, B});
    CHECK(pairs(found) == want);
}

TEST_CASE("reverify extends or refutes with an exact witness") {
    // At depth 1 nearly every progression survives; deeper passes must
    // demote the impostors and keep honest bookkeeping for the rest.
    auto shallow = scan(5, 1, 2, 9, 1);
    REQUIRE(!shallow.empty());
    bool saw_refutation = false;
    for (const auto& c : shallow) {
        auto re = reverify(c, 50);
        CHECK(re.A == c.A);
        CHECK(re.B == c.B);
        CHECK(re.n_max_tested == 50);
        if (!re.verified()) {
            saw_refutation = true;
            const long long n = *re.refuted_at;
            auto w = residues(c.p, c.j, c.k, c.A, c.B, 50);
            CHECK(w[n] != 0);
            for (long long i = 0; i < n; ++i) CHECK(w[i] == 0);
        }
    }
    CHECK(saw_refutation);
}

TEST_CASE("bad moduli and out-of-budget requests are rejected") {
    CHECK_THROWS_AS(scan(4, 1, 2, 5, 5), InvalidModulus);
    CHECK_THROWS_AS(scan(3, 1, 2, 5, 5), InvalidModulus);
    CHECK_THROWS_AS(scan(5, 0, 2, 5, 5), InvalidModulus);
    CHECK_THROWS_AS(scan(5, 1, 3, 5, 5), InvalidModulus);   // odd moment order
    CHECK_THROWS_AS(scan(5, 1, 0, 5, 5), InvalidModulus);   // not a moment sequence
    CHECK_THROWS_AS(scan(5, 40, 2, 5, 5), InvalidModulus);  // 5^40 overflows
    CHECK_THROWS_AS(partition_residues(5, 1, 1LL << 25), OrderExceedsTruncation);
    CHECK_THROWS_AS(residues(5, 1, 2, 0, 0, 5), BadInput);
    CHECK_THROWS_AS(residues(5, 1, 2, 5, 5, 5), BadInput);
    CHECK_NOTHROW(residues(5, 1, 1, 5, 0, 5));  // odd k is fine for witness lists
}

TEST_CASE("frozen small values of the second odd moment") {
    // eta_2^o(1) = 0, eta_2^o(2) = 1 from the z, 1/z coefficients of the
    // odd Durfee generating function.
    auto seq = odd_moment_residues(2, 7, 1, 6);
    CHECK(seq[0] == 0);
    CHECK(seq[1] == 0);
    CHECK(seq[2] == 1);
    auto table = moment_table_odd(2, 6);
    for (long long n = 0; n <= 6; ++n) CHECK(seq[n] == mod_of(table.values.at(n), 7));
}
