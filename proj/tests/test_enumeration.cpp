#include <algorithm>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "biquot/enumeration.hpp"
#include "oracles.hpp"

using namespace biquot;

namespace {

SimpleGroup G(Family f, int r) { return SimpleGroup::make(f, r); }
SimpleGroup G(Family f) { return SimpleGroup::make(f); }

bool contains_pair(const std::vector<SpherePairCandidate>& found, const SimpleGroup& g,
                   const std::optional<SimpleGroup>& h, int d)
{
    for (const auto& c : found)
        if (c.sphere_dim == d)
            for (const auto& a : c.aliases)
                if (a.first == g && a.second == h)
                    return true;
    return false;
}

}  // namespace

TEST(MatchOddSpherePairs, ContainsKnownPairs)
{
    const auto found = match_odd_sphere_pairs(builtin_catalog(10), false);
    EXPECT_TRUE(contains_pair(found, G(Family::G2), G(Family::A, 1), 11));
    EXPECT_TRUE(contains_pair(found, G(Family::B, 3), G(Family::G2), 7));
    EXPECT_TRUE(contains_pair(found, G(Family::D, 4), G(Family::B, 3), 7));
    EXPECT_FALSE(contains_pair(found, G(Family::A, 1), std::nullopt, 3));

    const auto with_trivial = match_odd_sphere_pairs(builtin_catalog(10), true);
    EXPECT_TRUE(contains_pair(with_trivial, G(Family::A, 1), std::nullopt, 3));
    EXPECT_EQ(with_trivial.size(), found.size() + 1);
}

TEST(MatchOddSpherePairs, CoincidenceLabels)
{
    const auto found = match_odd_sphere_pairs(builtin_catalog(4));
    auto it = std::find_if(found.begin(), found.end(), [](const auto& c) {
        return c.g == G(Family::B, 3) && c.sphere_dim == 11;
    });
    ASSERT_NE(it, found.end());
    EXPECT_EQ(it->h, G(Family::B, 2));
    EXPECT_EQ(it->aliases.size(), 4u);
    EXPECT_TRUE(contains_pair(found, G(Family::B, 3), G(Family::C, 2), 11));
    EXPECT_EQ(it->label(), "SO(7)/SO(5) = SO(7)/Sp(2) = Sp(3)/SO(5) = Sp(3)/Sp(2)");
}

TEST(MatchOddSpherePairs, AgreesWithAllPairsBruteForce)
{
    for (int r : {1, 2, 4, 7, 10}) {
        const auto cat = builtin_catalog(r);
        std::set<std::tuple<std::string, std::string, int>> brute;
        for (const auto& g : cat.entries()) {
            int d = 0;
            if (oracle::differs_by_one(sphere_dimensions(g), {}, d))
                brute.emplace(g.symbol(), "e", d);
            for (const auto& h : cat.entries())
                if (oracle::differs_by_one(sphere_dimensions(g), sphere_dimensions(h), d))
                    brute.emplace(g.symbol(), h.symbol(), d);
        }
        std::set<std::tuple<std::string, std::string, int>> found;
        for (const auto& c : match_odd_sphere_pairs(cat, true)) {
            EXPECT_TRUE(c.consistent()) << c.label();
            for (const auto& [g, h] : c.aliases)
                found.emplace(g.symbol(), h ? h->symbol() : "e", c.sphere_dim);
        }
        EXPECT_EQ(found, brute) << "max rank " << r;
    }
}

TEST(MatchOddSpherePairs, DeterministicOrder)
{
    const auto found = match_odd_sphere_pairs(builtin_catalog(10), true);
    EXPECT_TRUE(std::is_sorted(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return std::tie(a.g, a.sphere_dim) < std::tie(b.g, b.sphere_dim);
    }));
    const auto again = match_odd_sphere_pairs(builtin_catalog(10), true);
    ASSERT_EQ(found.size(), again.size());
    for (std::size_t i = 0; i < found.size(); ++i)
        EXPECT_EQ(found[i].label(), again[i].label());
}

TEST(MatchOddSpherePairs, StableUnderRankExtension)
{
    for (int r = 1; r < 12; ++r) {
        std::set<RationalPairKey> small, large;
        for (const auto& c : match_odd_sphere_pairs(builtin_catalog(r), true))
            small.insert(c.key());
        for (const auto& c : match_odd_sphere_pairs(builtin_catalog(r + 1), true))
            large.insert(c.key());
        EXPECT_TRUE(std::includes(large.begin(), large.end(), small.begin(), small.end())) << r;
    }
}

TEST(MatchOddSpherePairs, ParameterizedFamiliesMatchOncePerN)
{
    const auto cat = builtin_catalog(10);
    const auto found = match_odd_sphere_pairs(cat);
    for (const auto& p : instantiate_pairs(builtin_tables(), cat)) {
        if (!p.row->range.parameterized())
            continue;
        int hits = 0;
        for (const auto& c : found)
            for (const auto& [g, h] : c.aliases)
                hits += g == p.g && h == std::optional<SimpleGroup>(p.h);
        EXPECT_EQ(hits, 1) << p.name();
    }
}

TEST(CuratedPairTable, ExactAtRankTen)
{
    const auto cat = builtin_catalog(10);
    const auto cmp = compare_with_curated(match_odd_sphere_pairs(cat), builtin_tables(), cat);
    EXPECT_TRUE(cmp.missing.empty());
    EXPECT_TRUE(cmp.extra.empty());
    EXPECT_TRUE(cmp.not_invariant.empty());
    EXPECT_TRUE(cmp.exact());
    EXPECT_GT(cmp.matched, 30u);
}

TEST(CuratedPairTable, DetectsMissingRowAndBogusRow)
{
    const auto cat = builtin_catalog(10);
    auto tables = builtin_tables();
    std::erase_if(tables.odd_sphere_pairs, [](const auto& r) { return r.g_name == "G2"; });
    auto cmp = compare_with_curated(match_odd_sphere_pairs(cat), tables, cat);
    ASSERT_EQ(cmp.extra.size(), 1u);
    EXPECT_EQ(cmp.extra[0].g, G(Family::G2));

    tables = builtin_tables();
    tables.odd_sphere_pairs.push_back({"F4", "Spin(9)", {Family::F4, {0, 4}},
                                       {Family::B, {0, 4}}, {}, 1});
    cmp = compare_with_curated(match_odd_sphere_pairs(cat), tables, cat);
    EXPECT_EQ(cmp.not_invariant.size(), 1u);
    EXPECT_FALSE(cmp.exact());
}

TEST(CuratedTables, RepsColumn)
{
    std::map<std::string, int> reps;
    for (const auto& r : builtin_tables().odd_sphere_pairs)
        reps[r.g_name + "/" + r.h_name] = r.reps;
    EXPECT_EQ(reps.at("Spin(8)/Spin(7)"), 3);
    EXPECT_EQ(reps.at("Spin(9)/Spin(7)"), 2);
    EXPECT_EQ(reps.at("SU(3)/SU(2)"), 2);
    EXPECT_EQ(reps.at("Sp(2)/Sp(1)"), 3);
    EXPECT_EQ(reps.at("G2/SU(2)"), 4);
    EXPECT_EQ(reps.at("SO(2n)/SO(2n-1)"), 1);
    EXPECT_EQ(builtin_tables().singly_generated.size(), 13u);
}

TEST(CuratedTables, ParseErrors)
{
    std::istringstream bad_json("{ not json");
    EXPECT_THROW(parse_curated_tables(bad_json), ParseError);

    std::istringstream missing("{\"odd_sphere_pairs\": []}");
    EXPECT_THROW(parse_curated_tables(missing), ParseError);

    std::istringstream bad_family(R"({"odd_sphere_pairs": [
        {"g": "X", "h": "Y", "g_group": ["Q", 0, 1], "h_group": ["A", 0, 1], "reps": 1}],
        "singly_generated": []})");
    try {
        parse_curated_tables(bad_family);
        ADD_FAILURE();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.location(), "odd_sphere_pairs[0]");
    }

    std::istringstream bad_type(R"({"odd_sphere_pairs": [], "singly_generated": [
        {"name": "x", "g_group": ["A", 0, 2], "h_factors": [], "type": ["cube", 3]}]})");
    EXPECT_THROW(parse_curated_tables(bad_type), ParseError);
}

TEST(SinglyGeneratedRows, Rows)
{
    const auto cat = builtin_catalog(20);
    const auto report = verify_table_b(cat, 10);
    EXPECT_TRUE(report.passed());
    // 4 parameterized rows x 9 values + 9 fixed rows
    EXPECT_EQ(report.records.size(), 4u * 9u + 9u);

    auto find = [&](const std::string& name) {
        auto it = std::find_if(report.records.begin(), report.records.end(),
                               [&](const auto& r) { return r.name == name; });
        EXPECT_NE(it, report.records.end()) << name;
        return *it;
    };
    const auto berger = find("Sp(2)/Sp(1)_10");
    EXPECT_TRUE(berger.passed());
    EXPECT_EQ(berger.checks[2].detail, "10 - 3 = 7, expected 7");

    const auto hp = find("dSU(2)\\SO(4n+1)/SO(4n-1) (n=2)");
    EXPECT_EQ(hp.checks[1].detail, "{3, 7, 11, 15} vs H {3, 3, 7, 11}, HP^3");
    EXPECT_TRUE(hp.passed());

    const auto g2 = find("G2//SU(2)");
    EXPECT_EQ(g2.checks.back().name, "fiber_pi3");
    EXPECT_TRUE(g2.checks.back().pass);
    EXPECT_TRUE(find("G2/SO(3)_28").passed());
}

TEST(SinglyGeneratedRows, SmallCatalogFailsRowsNotThrows)
{
    const auto report = verify_table_b(builtin_catalog(10), 10);
    EXPECT_FALSE(report.passed());
    for (const auto& rec : report.records) {
        if (rec.passed())
            continue;
        ASSERT_EQ(rec.checks[0].name, "catalog") << rec.name;
        EXPECT_FALSE(rec.checks[0].pass);
        EXPECT_TRUE(rec.checks[1].pass);  // rational checks still run
    }
    EXPECT_EQ(required_rank(builtin_tables(), 10), 20);
}

TEST(SinglyGeneratedRows, CatchesCorruptedRow)
{
    auto tables = builtin_tables();
    for (auto& r : tables.singly_generated)
        if (r.name == "G2/SO(4)")
            r.type.top_power = {0, 3};  // HP^3 would need a 12-dimensional quotient
    const auto report = verify_table_b(builtin_catalog(20), 3, tables);
    EXPECT_FALSE(report.passed());
}
