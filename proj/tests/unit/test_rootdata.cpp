#include <gtest/gtest.h>

#include "modlie/errors.hpp"
#include "modlie/rootdata.hpp"

using namespace modlie;

TEST(RootSystem, PositiveRootCounts) {
    EXPECT_EQ(build_root_system("A3").num_pos(), 6u);
    EXPECT_EQ(build_root_system("D4").num_pos(), 12u);
    EXPECT_EQ(build_root_system("E6").num_pos(), 36u);
    EXPECT_EQ(build_root_system("E7").num_pos(), 63u);
    EXPECT_EQ(build_root_system("E8").num_pos(), 120u);
    EXPECT_EQ(build_root_system("F4").num_pos(), 24u);
    EXPECT_EQ(build_root_system("G2").num_pos(), 6u);
}

TEST(RootSystem, HighestRoots) {
    EXPECT_EQ(build_root_system("E8").highest, (std::vector<int>{2, 3, 4, 6, 5, 4, 3, 2}));
    EXPECT_EQ(build_root_system("E6").highest, (std::vector<int>{1, 2, 2, 3, 2, 1}));
    EXPECT_EQ(build_root_system("F4").highest, (std::vector<int>{2, 3, 4, 2}));
    EXPECT_EQ(build_root_system("G2").highest, (std::vector<int>{3, 2}));
}

TEST(RootSystem, Determinants) {
    EXPECT_EQ(build_root_system("E6").det_cartan(), 3);
    EXPECT_EQ(build_root_system("E7").det_cartan(), 2);
    EXPECT_EQ(build_root_system("E8").det_cartan(), 1);
    EXPECT_EQ(build_root_system("D5").det_cartan(), 4);
    EXPECT_EQ(build_root_system("A4").det_cartan(), 5);
}

TEST(RootSystem, Unsupported) {
    EXPECT_THROW(build_root_system("X3"), UnsupportedType);
    EXPECT_THROW(build_root_system("E9"), UnsupportedType);
}

TEST(Chevalley, BuildsLieAlgebras) {
    for (auto [t, d] : std::vector<std::pair<std::string, std::size_t>>{
             {"A2", 8}, {"G2", 14}, {"F4", 52}, {"E6", 78}, {"D4", 28}}) {
        auto g = build_g(t, 7);
        EXPECT_EQ(g->algebra.dim(), d) << t;
    }
}

TEST(Chevalley, E8) {
    auto g = build_g("E8", 7);
    EXPECT_EQ(g->algebra.dim(), 248u);
    ASSERT_TRUE(g->has_torals());
}

TEST(Census, E6At5) {
    auto c = kac_census("E6", 5, 5);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].cls.coords, (std::vector<int>{1, 1, 1, 0, 0, 0, 1}));
    EXPECT_EQ(c[0].cls.centralizer_dim, 18);
    EXPECT_EQ(c[0].ker_ad_dim, 18);
    EXPECT_TRUE(c[0].toral);
    EXPECT_EQ(c[0].cls.zero_subdiagram_type, "A3");
}

struct CensusRow {
    std::string type;
    int p;
    std::vector<std::vector<int>> coords;
    std::vector<int> centralizers;
    std::vector<std::string> zero_types;
    std::vector<int> eigen;
};

TEST(Census, BalancedTable) {
    const std::vector<CensusRow> rows = {
        {"E7", 5, {{1, 1, 0, 0, 0, 0, 1, 0}}, {33}, {"D4A1"}, {25}},
        {"E8", 7, {{2, 0, 0, 0, 0, 0, 0, 1, 1}, {1, 1, 0, 0, 0, 0, 1, 0, 0}}, {80, 38}, {"E6", "D4A2"}, {28, 35}},
        {"E8", 11, {{1, 1, 1, 0, 0, 0, 0, 1, 1}}, {28}, {"A4"}, {22}},
        {"F4", 7, {{1, 0, 0, 1, 1}, {2, 1, 1, 0, 0}}, {10, 10}, {"A2", "A2"}, {7, 7}},
        {"F4", 5, {{1, 1, 0, 0, 1}}, {12}, {"B2"}, {10}},
    };
    for (const auto& row : rows) {
        auto c = kac_census(row.type, row.p, row.p);
        ASSERT_EQ(c.size(), row.coords.size()) << row.type << " " << row.p;
        for (std::size_t i = 0; i < c.size(); ++i) {
            std::sort(c.begin(), c.end(), [](auto& a, auto& b) { return a.cls.coords < b.cls.coords; });
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            SCOPED_TRACE(row.type + "/" + std::to_string(row.p) + " class " + std::to_string(i));
            auto want = std::find(row.coords.begin(), row.coords.end(), c[i].cls.coords);
            ASSERT_NE(want, row.coords.end());
            const std::size_t k = static_cast<std::size_t>(want - row.coords.begin());
            EXPECT_EQ(c[i].cls.centralizer_dim, row.centralizers[k]);
            EXPECT_EQ(c[i].ker_ad_dim, row.centralizers[k]);
            EXPECT_EQ(c[i].cls.zero_subdiagram_type, row.zero_types[k]);
            EXPECT_EQ(c[i].cls.eig_dims[1], row.eigen[k]);
            EXPECT_TRUE(c[i].toral);
            EXPECT_EQ(c[i].killing, 0);
        }
    }
}
