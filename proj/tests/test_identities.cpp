#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>

#include "qpde/identities.hpp"

using namespace qpde;

namespace {

void expect_pass(const std::string& name, const Rat& order,
                 std::optional<IdentityParams> params = std::nullopt) {
    auto rep = verify(name, order, params);
    if (rep.discrepancy) {
        UNSCOPED_INFO(rep.name << " at q^" << format_rat(rep.discrepancy->q) << ": "
                               << rep.discrepancy->lhs << " vs " << rep.discrepancy->rhs);
    }
    CHECK(rep.pass);
    CHECK(rep.order == order);
    CHECK(!rep.discrepancy.has_value());
}

}  // namespace

TEST_CASE("registry lists every public identity once") {
    const auto& reg = list_identities();
    CHECK(reg.size() == 21);
    std::set<std::string> names;
    for (const auto& e : reg) {
        CHECK(names.insert(e.name).second);
        CHECK(!e.statement.empty());
        CHECK(e.default_order >= 0);
    }
    CHECK(names.count("diff1") == 1);
    CHECK(names.count("mainequation") == 1);
    CHECK(names.count("diff1-perturbed") == 0);
}

TEST_CASE("product and series identities hold at modest order") {
    expect_pass("pentagonal", 18);
    expect_pass("rank-forms", 14);
    expect_pass("rank-at-1", 16);
    expect_pass("rank-at-minus1", 16);
    expect_pass("rodd-relation", 14);
}

TEST_CASE("rank and crank differential equations hold") {
    expect_pass("diff1", 10);
    expect_pass("diff2", 10);
    expect_pass("pdestar", 10);
    expect_pass("pdestar2", 10);
    expect_pass("pdeoverstar", 10);
    expect_pass("pde3", 10);
    expect_pass("pdem2star", 10);
    expect_pass("pde4", 10);
    expect_pass("oddpde", 10);
    expect_pass("addin", 0);
}

TEST_CASE("Appell decompositions and theta relations hold") {
    expect_pass("rstar1", 10);
    expect_pass("theta-lemma", 12);
    expect_pass("prop21", 12);
    expect_pass("prop22", 12);
}

TEST_CASE("parameterized identities hold across the default set") {
    for (const auto& p : default_param_set()) {
        expect_pass("mainequation", 6, p);
        expect_pass("wronskian", 10, p);
    }
}

TEST_CASE("mainequation is invariant under beta -> beta + 1") {
    auto a = verify("mainequation", 5, IdentityParams{Rat(1, 2), Rat(0)});
    auto b = verify("mainequation", 5, IdentityParams{Rat(1, 2), Rat(1)});
    CHECK(a.pass);
    CHECK(b.pass);
    CHECK(a.name == "mainequation(1/2,0)");
    CHECK(b.name == "mainequation(1/2,1)");
}

TEST_CASE("a deliberately broken equation is caught at the right exponent") {
    auto rep = verify("diff1-perturbed", 8);
    CHECK(!rep.pass);
    REQUIRE(rep.discrepancy.has_value());
    CHECK(rep.discrepancy->q == 5);
    CHECK(rep.discrepancy->lhs != rep.discrepancy->rhs);
}

TEST_CASE("verification failures describe nothing when order stops short") {
    // The perturbation sits at q^5, so checking through q^4 still passes.
    auto rep = verify("diff1-perturbed", 4);
    CHECK(rep.pass);
}

TEST_CASE("unknown names and missing parameters are rejected") {
    CHECK_THROWS_AS(verify("no-such-identity", 5), UnknownIdentity);
    CHECK_THROWS_AS(verify("mainequation", 5), MissingParams);
    CHECK_THROWS_AS(verify("wronskian", 5), MissingParams);
    CHECK_THROWS_AS(verify("diff1", Rat(-1)), BadInput);
}

TEST_CASE("verify_all covers the registry with parameter fan-out") {
    setenv("QPDE_THREADS", "4", 1);
    auto reports = verify_all(5);
    unsetenv("QPDE_THREADS");

    CHECK(reports.size() == 21 - 2 + 2 * default_param_set().size());
    for (const auto& r : reports) {
        UNSCOPED_INFO(r.name);
        CHECK(r.pass);
        CHECK(r.seconds >= 0);
    }

    // Deterministic order: registry order, parameterized entries fanned out
    // in place.
    CHECK(reports[0].name == "diff1");
    CHECK(reports[2].name == "mainequation(1/2,0)");
    CHECK(reports[3].name == "mainequation(0,1/2)");
    CHECK(reports[5].name == "mainequation(1/2,1/2)");
    CHECK(reports.back().name == "rodd-relation");
}

TEST_CASE("thread count honors the environment override") {
    setenv("QPDE_THREADS", "3", 1);
    CHECK(verify_threads() == 3);
    setenv("QPDE_THREADS", "0", 1);
    CHECK(verify_threads() >= 1);  // out of range, falls back
    setenv("QPDE_THREADS", "garbage", 1);
    CHECK(verify_threads() >= 1);
    unsetenv("QPDE_THREADS");
    CHECK(verify_threads() >= 1);
}
