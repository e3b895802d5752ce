#include <catch2/catch_amalgamated.hpp>

#include "qpde/partitions.hpp"

using namespace qpde;

TEST_CASE("partition enumeration in ascending lex order") {
    auto p0 = enumerate_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].parts.empty());
    CHECK(p0[0].rank() == 0);

    auto p4 = enumerate_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0].parts == std::vector<long long>{1, 1, 1, 1});
    CHECK(p4[1].parts == std::vector<long long>{2, 1, 1});
    CHECK(p4[2].parts == std::vector<long long>{2, 2});
    CHECK(p4[3].parts == std::vector<long long>{3, 1});
    CHECK(p4[4].parts == std::vector<long long>{4});

    CHECK(enumerate_partitions(9).size() == 30);

    for (long long n = 1; n <= 12; ++n) {
        for (const Partition& p : enumerate_partitions(n)) {
            CHECK(p.size() == n);
            CHECK(std::is_sorted(p.parts.rbegin(), p.parts.rend()));
            CHECK(p.parts.back() >= 1);
        }
    }
}

TEST_CASE("enumeration refuses past the limit") {
    CHECK_THROWS_AS(enumerate_partitions(61), LimitExceeded);
    CHECK_THROWS_AS(enumerate_partitions(10, 9), LimitExceeded);
    CHECK_NOTHROW(enumerate_partitions(10, 10));
    CHECK_THROWS_AS(enumerate_partitions(-1), BadInput);
}

TEST_CASE("rank table from enumeration") {
    auto t4 = rank_counts(4);
    CHECK(t4.counts == std::map<long long, BigInt>{
                           {-3, 1}, {-1, 1}, {0, 1}, {1, 1}, {3, 1}});
    CHECK(rank_counts(1).counts == std::map<long long, BigInt>{{0, 1}});
    CHECK(rank_counts(0).counts == std::map<long long, BigInt>{{0, 1}});

    auto p = partition_series(15);
    for (long long n = 0; n <= 15; ++n) {
        auto t = rank_counts(n);
        // symmetric, and the column sums to p(n)
        for (const auto& [m, c] : t.counts) CHECK(t.counts.at(-m) == c);
        CHECK(Cyclo(Rat(t.total())) == p.coeff(n).eval_at_one());
    }
}

TEST_CASE("rank table matches both series forms") {
    auto eul = rank_series(RankForm::Eulerian, 15);
    auto ler = rank_series(RankForm::Lerch, 15);
    for (long long n = 0; n <= 15; ++n) {
        ZPoly want;
        for (const auto& [m, c] : rank_counts(n).counts)
            want += ZPoly::monomial(Cyclo(Rat(c)), m, 1);
        CHECK(eul.coeff(n) == RatCoeff(want));
        CHECK(ler.coeff(n) == RatCoeff(want));
    }
}

TEST_CASE("rank moments agree between series and oracle") {
    CHECK(moment_eta(2, 4, MomentSource::Oracle) == 10);
    CHECK(moment_eta(2, 4, MomentSource::RankSeries) == 10);
    CHECK(moment_eta(2, 0, MomentSource::RankSeries) == 0);

    for (unsigned k : {2u, 4u}) {
        auto via_series = moment_table(k, 12, MomentSource::RankSeries);
        auto via_oracle = moment_table(k, 12, MomentSource::Oracle);
        CHECK(via_series.values == via_oracle.values);
    }

    // Odd k dies by rank symmetry, without being special-cased.
    for (unsigned k : {1u, 3u, 5u, 7u}) {
        auto t = moment_table(k, 30, MomentSource::RankSeries);
        for (const auto& [n, v] : t.values) CHECK(v == 0);
    }
}

TEST_CASE("odd-rank moments come straight from the series") {
    CHECK(moment_eta_odd(2, 1) == 0);
    CHECK(moment_eta_odd(2, 2) == 1);

    for (unsigned k : {1u, 3u, 5u}) {
        auto t = moment_table_odd(k, 30);
        for (const auto& [n, v] : t.values) CHECK(v == 0);
    }

    CHECK_THROWS_AS(moment_eta(0, 3, MomentSource::Oracle), BadInput);
    CHECK_THROWS_AS(moment_eta_odd(0, 3), BadInput);
}

TEST_CASE("classical congruences in a modest window") {
    auto p = partition_series(151);
    auto residue = [&](long long n, long long mod) {
        const Cyclo v = p.coeff(n).eval_at_one();
        REQUIRE(v.is_rational());
        return rat_num(v.rational()) % mod;
    };
    for (long long n = 0; 5 * n + 4 <= 151; ++n) CHECK(residue(5 * n + 4, 5) == 0);
    for (long long n = 0; 7 * n + 5 <= 151; ++n) CHECK(residue(7 * n + 5, 7) == 0);
    for (long long n = 0; 11 * n + 6 <= 151; ++n) CHECK(residue(11 * n + 6, 11) == 0);
}
