#include <gtest/gtest.h>

#include "modlie/errors.hpp"
#include "modlie/scenarios.hpp"

using namespace modlie;

namespace {

void expect_all_pass(const CheckReport& r) {
    for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << r.scenario << ": " << c.name << " expected " << c.expected << " got " << c.actual;
    EXPECT_TRUE(r.pass());
}

}  // namespace

TEST(CheckReport, PassAndKeyOrder) {
    CheckReport r;
    EXPECT_FALSE(r.pass());
    r.scenario = "demo";
    r.expect("zeta", 1, 1);
    r.expect("alpha", 2, 3);
    EXPECT_FALSE(r.pass());
    Json j = r.to_json();
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"scenario", "pass", "seed", "runtime_ms", "checks", "notes", "data"}));
    EXPECT_EQ(j["checks"][0]["name"], "alpha");
    EXPECT_EQ(j["checks"][1]["name"], "zeta");
}

TEST(GoodPrimes, Exceptional) {
    EXPECT_EQ(good_primes("E8"), (std::vector<int>{7, 11, 13}));
    EXPECT_EQ(good_primes("E6"), (std::vector<int>{5, 7, 11, 13}));
    EXPECT_EQ(good_primes("G2"), (std::vector<int>{5, 7, 11, 13}));
    EXPECT_EQ(good_primes("A3"), (std::vector<int>{2, 3, 5, 7, 11, 13}));
}

TEST(Census, SingleRows) {
    CheckReport e8 = run_census("E8", 11);
    expect_all_pass(e8);
    ASSERT_EQ(e8.data["census"][0]["classes"].size(), 1u);
    EXPECT_EQ(e8.data["census"][0]["classes"][0]["centralizer_dim"], 28);
    EXPECT_EQ(e8.data["census"][0]["classes"][0]["zero_subdiagram_type"], "A4");

    CheckReport e7 = run_census("E7", 5);
    expect_all_pass(e7);
    EXPECT_EQ(e7.data["census"][0]["classes"][0]["centralizer_dim"], 33);
    EXPECT_EQ(e7.data["census"][0]["classes"][0]["zero_subdiagram_type"], "D4A1");
    EXPECT_FALSE(e7.notes.empty());

    for (int p : good_primes("G2")) {
        CheckReport g2 = run_census("G2", p);
        expect_all_pass(g2);
        EXPECT_TRUE(g2.data["census"][0]["classes"].empty());
    }
    EXPECT_THROW(run_census("E8", 5), BadPrime);
}

TEST(Verify, G2) { expect_all_pass(verify_g2_w()); }

TEST(Verify, Cartan) { expect_all_pass(verify_cartan_identities()); }

TEST(Filtration, Sl2Borel) {
    CheckReport r = run_filtration({"A1:5", "borel", kDefaultModuleSeed});
    expect_all_pass(r);
    EXPECT_EQ(r.data["chain_dims"], Json::array({3, 2, 1, 0}));
}

TEST(Filtration, WittInPsl4) {
    CheckReport r = run_filtration({"psl4:2", "w-g2", kDefaultModuleSeed});
    expect_all_pass(r);
    EXPECT_EQ(r.data["chain_dims"][2], 3);
}

TEST(Filtration, NonMaximalBorelIsNotStable) {
    EXPECT_THROW(run_filtration({"A2:7", "borel", kDefaultModuleSeed}), NotStable);
    EXPECT_THROW(run_filtration({"nonsense", "borel", kDefaultModuleSeed}), ParseError);
}

TEST(BuildFamily, Dimensions) {
    EXPECT_EQ(build_family("W", 2, {1, 1}, 5).dim(), 50u);
    EXPECT_EQ(build_family("W", 1, {2}, 3).dim(), 9u);
    EXPECT_EQ(build_family("block", 0, {}, 5).dim(), 24u);
    EXPECT_EQ(build_family("G2", 0, {}, 7).dim(), 14u);
    EXPECT_THROW(build_family("Q", 1, {1}, 5), ParseError);
}
