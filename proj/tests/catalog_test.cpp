#include "oracle.hpp"

#include "twograph/catalog.hpp"
#include "twograph/classifier.hpp"
#include "twograph/io.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

using namespace twograph;

namespace {

oracle::TripleSet as_set(const TwoGraph& tg)
{
    oracle::TripleSet s;
    for (Triple t : tg.triples())
        s.insert({t.i, t.j, t.k});
    return s;
}

std::multiset<int> popcounts(const ClassCatalog& cat)
{
    std::multiset<int> out;
    for (const auto& c : cat.classes())
        out.insert(c.delta_popcount());
    return out;
}

} // namespace

class CatalogCounts : public ::testing::TestWithParam<int>
{
};

TEST_P(CatalogCounts, MatchesKnownTotals)
{
    const int n = GetParam();
    EXPECT_EQ(enumerate_classes(n).size(), kTwoGraphClassCounts[static_cast<std::size_t>(n)]);
}

INSTANTIATE_TEST_SUITE_P(SmallOrders, CatalogCounts, ::testing::Range(1, 8));

TEST(Catalog, EightVerticesHas243Classes) { EXPECT_EQ(enumerate_classes(8).size(), 243u); }

TEST(Catalog, RejectsOutOfRangeOrder)
{
    EXPECT_THROW(enumerate_classes(0), std::out_of_range);
    EXPECT_THROW(enumerate_classes(9), std::out_of_range);
}

TEST(Catalog, FiveVertexSizes)
{
    EXPECT_EQ(popcounts(enumerate_classes(5)), (std::multiset<int>{0, 3, 4, 5, 6, 7, 10}));
}

TEST(Catalog, SixVertexSizes)
{
    EXPECT_EQ(popcounts(enumerate_classes(6)), (std::multiset<int>{0, 4, 6, 8, 8, 8, 10, 10, 10, 10, 12, 12, 12, 14, 16, 20}));
}

TEST(Catalog, ComplementPairsClasses)
{
    // Complementing Delta maps classes to classes, so the size multiset is symmetric about C(n,3)/2.
    for (int n = 3; n <= 7; ++n) {
        const auto sizes = popcounts(enumerate_classes(n));
        std::multiset<int> mirrored;
        for (int d : sizes)
            mirrored.insert(static_cast<int>(binomial(n, 3)) - d);
        EXPECT_EQ(mirrored, sizes) << n;
    }
}

TEST(Catalog, ClassesArePairwiseInequivalent)
{
    for (int n = 3; n <= 6; ++n) {
        const auto cat = enumerate_classes(n);
        for (std::size_t a = 0; a < cat.size(); ++a)
            for (std::size_t b = a + 1; b < cat.size(); ++b)
                ASSERT_FALSE(oracle::equivalent(n, as_set(cat[a].two_graph()), as_set(cat[b].two_graph()))) << n;
    }
}

TEST(Catalog, KeysAreBruteForceMinima)
{
    for (int n = 3; n <= 6; ++n) {
        const auto cat = enumerate_classes(n);
        for (const auto& c : cat.classes()) {
            const auto want = oracle::canonical_bits(n, as_set(c.two_graph()));
            for (std::size_t r = 0; r < want.size(); ++r)
                ASSERT_EQ(static_cast<bool>((c.key.bits >> r) & 1u), static_cast<bool>(want[r])) << c.label;
        }
    }
}

TEST(Catalog, EveryRandomTwoGraphIsFound)
{
    std::mt19937_64 rng(kDefaultSeed);
    for (int n = 3; n <= 7; ++n) {
        const auto cat = enumerate_classes(n);
        for (int trial = 0; trial < 100; ++trial) {
            const TwoGraph tg = two_graph_of(random_graph(n, rng));
            const auto& c = cat.class_of(tg);
            ASSERT_EQ(c.key, canonical_key(tg));
            ASSERT_TRUE(equivalent(c.two_graph(), tg));
        }
    }
}

TEST(Catalog, SortedBySizeThenKey)
{
    const auto cat = enumerate_classes(7);
    for (std::size_t i = 1; i < cat.size(); ++i)
        EXPECT_TRUE(cat[i - 1].key < cat[i].key);
}

TEST(Labels, UniqueSubscriptsFollowCatalogOrder)
{
    const auto cat = enumerate_classes(7);
    std::set<std::string> seen;
    std::map<int, int> per_size;
    for (const auto& c : cat.classes()) {
        EXPECT_TRUE(seen.insert(c.label).second) << c.label;
        ++per_size[c.delta_popcount()];
    }
    for (const auto& c : cat.classes()) {
        const std::string base = "(7," + std::to_string(c.delta_popcount()) + ")";
        if (per_size[c.delta_popcount()] == 1)
            EXPECT_EQ(c.label, base);
        else
            EXPECT_EQ(c.label.substr(0, base.size() + 1), base + "_");
    }
}

TEST(Labels, DrawnRepresentativesLandInTheirClasses)
{
    for (int n : {5, 6}) {
        const auto cat = enumerate_classes(n);
        for (const auto& fig : figure_representatives(n)) {
            const TwoGraph tg = two_graph_of(Graph(n, fig.edges));
            EXPECT_EQ(cat.class_of(tg).label, fig.label);
            EXPECT_EQ(cat[cat.index_of_label(fig.label)].key, canonical_key(tg));
        }
    }
}

TEST(Labels, DrawnRepresentativesHaveStatedSizes)
{
    for (int n : {5, 6})
        for (const auto& fig : figure_representatives(n)) {
            const std::string label(fig.label);
            const auto comma = label.find(',');
            const int d = std::stoi(label.substr(comma + 1));
            EXPECT_EQ(two_graph_of(Graph(n, fig.edges)).size(), static_cast<std::size_t>(d)) << label;
        }
}

TEST(Labels, LookupByLabel)
{
    const auto cat = enumerate_classes(6);
    ASSERT_TRUE(cat.find_label("(6,12)_3").has_value());
    EXPECT_EQ(cat[*cat.find_label("(6,12)_3")].delta_popcount(), 12);
    EXPECT_FALSE(cat.find_label("(6,9)").has_value());
    EXPECT_THROW(cat.index_of_label("(6,9)"), std::out_of_range);
}

TEST(CatalogFromKeys, RoundTrip)
{
    for (int n = 1; n <= 7; ++n) {
        const auto cat = enumerate_classes(n);
        std::vector<CanonicalKey> keys;
        for (const auto& c : cat.classes())
            keys.push_back(c.key);
        std::reverse(keys.begin(), keys.end());
        const auto back = catalog_from_keys(n, keys);
        ASSERT_EQ(back.size(), cat.size());
        for (std::size_t i = 0; i < cat.size(); ++i) {
            EXPECT_EQ(back[i].key, cat[i].key);
            EXPECT_EQ(back[i].label, cat[i].label);
        }
    }
}

TEST(CatalogFromKeys, RejectsBadKeyLists)
{
    const auto cat = enumerate_classes(5);
    std::vector<CanonicalKey> keys;
    for (const auto& c : cat.classes())
        keys.push_back(c.key);

    auto missing = keys;
    missing.pop_back();
    EXPECT_THROW(catalog_from_keys(5, missing), std::invalid_argument);

    auto duplicated = keys;
    duplicated.push_back(keys.front());
    EXPECT_THROW(catalog_from_keys(5, duplicated), std::invalid_argument);

    auto not_canonical = keys;
    // The edge v1v2 puts Delta on the three lowest ranks, which is not the least relabeling.
    const auto idx3 = cat.index_of_label("(5,3)");
    not_canonical[idx3] = {5, two_graph_of(Graph(5, {{0, 1}})).packed()};
    EXPECT_THROW(catalog_from_keys(5, not_canonical), std::invalid_argument);

    auto invalid = keys;
    invalid[idx3] = {5, 1};
    EXPECT_THROW(catalog_from_keys(5, invalid), std::invalid_argument);
}

TEST(CatalogJson, RoundTrip)
{
    for (int n : {4, 5, 6}) {
        const auto cat = enumerate_classes(n);
        const Json doc = catalog_to_json(cat);
        const auto back = catalog_from_json(Json::parse(doc.dump()));
        ASSERT_EQ(back.size(), cat.size());
        for (std::size_t i = 0; i < cat.size(); ++i)
            EXPECT_EQ(back[i].key, cat[i].key);
        EXPECT_EQ(catalog_to_json(back).dump(), doc.dump());
    }
}

TEST(CatalogJson, Shape)
{
    const Json doc = catalog_to_json(enumerate_classes(5));
    EXPECT_EQ(doc.at("n"), 5);
    ASSERT_EQ(doc.at("classes").size(), 7u);
    const auto& first = doc.at("classes")[0];
    EXPECT_EQ(first.at("label"), "(5,0)");
    EXPECT_EQ(first.at("delta_popcount"), 0);
    EXPECT_EQ(first.at("key_hex"), "000");
    EXPECT_TRUE(first.at("representative_edges").empty());
}

TEST(CatalogJson, RejectsTamperedLabel)
{
    Json doc = catalog_to_json(enumerate_classes(6));
    for (auto& c : doc.at("classes"))
        if (c.at("label") == "(6,8)_1")
            c["label"] = "(6,8)_2";
        else if (c.at("label") == "(6,8)_2")
            c["label"] = "(6,8)_1";
    EXPECT_THROW(catalog_from_json(doc), std::invalid_argument);
}
