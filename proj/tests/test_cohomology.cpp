#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "biquot/verify.hpp"
#include "oracles.hpp"

using namespace biquot;

namespace {

GradedAbelianGroup from_oracle(int top, const std::map<int, oracle::CellGroup>& cells)
{
    GradedAbelianGroup g(top);
    for (const auto& [k, c] : cells)
        g.set(k, c.torsion > 1 ? DegreeGroup{c.free_rank, {c.torsion}} : DegreeGroup{c.free_rank, {}});
    return g;
}

}  // namespace

TEST(ClosedForms, UnitTangent)
{
    for (int n = 2; n <= 10; ++n) {
        const auto h = unit_tangent_cohomology(n);
        EXPECT_EQ(h.top_degree(), 4 * n - 1);
        EXPECT_EQ(h.at(0), free_group());
        EXPECT_EQ(h.at(2 * n), cyclic_group(2));
        EXPECT_EQ(h.at(4 * n - 1), free_group());
        EXPECT_EQ(h.nonzero().size(), 3u);
        EXPECT_EQ(h.euler_characteristic(), 0);
    }
    EXPECT_THROW(unit_tangent_cohomology(1), DomainError);
    EXPECT_THROW(unit_tangent_cohomology(0, true), DomainError);
}

TEST(ClosedForms, UnitTangentOfTwoSphereIsRP3)
{
    // RP^3: one cell per degree, d^1 = multiplication by 2
    const auto rp3 = from_oracle(3, oracle::cellular_cohomology(3, {0, 1, 2, 3}, {{1, 2}}));
    EXPECT_EQ(unit_tangent_cohomology(1, true), rp3);
    EXPECT_TRUE(check_gysin_consistency(unit_tangent_fibration(1, true)).pass);
}

TEST(ClosedForms, TwiceGeneratorRings)
{
    EXPECT_EQ(circle_quotient_ring(2).ring.divisibility(), (std::vector<std::int64_t>{1, 2, 2}));
    EXPECT_EQ(circle_quotient_ring(3).ring.divisibility(),
              (std::vector<std::int64_t>{1, 1, 2, 2, 2}));
    for (int n = 2; n <= 10; ++n) {
        for (const auto& h : {circle_quotient_ring(n), quaternionic_quotient_ring(n)}) {
            EXPECT_EQ(h.ring.top_power(), 2 * n - 1);
            EXPECT_EQ(h.ring.c(n), 2);
            EXPECT_EQ(h.ring.c(n - 1), 1);
            EXPECT_EQ(h.groups.euler_characteristic(), 2 * n);
            EXPECT_EQ(h.groups.top_degree(), (2 * n - 1) * h.ring.gen_degree());
            for (int k = 0; k <= 2 * n - 1; ++k)
                EXPECT_EQ(h.groups.at(k * h.ring.gen_degree()), free_group());
        }
        EXPECT_EQ(circle_quotient_ring(n).ring.gen_degree(), 2);
        EXPECT_EQ(quaternionic_quotient_ring(n).ring.gen_degree(), 4);
    }
    EXPECT_THROW(circle_quotient_ring(1), DomainError);
}

TEST(ClosedForms, EulerCharacteristicOfSpheres)
{
    for (int d = 1; d <= 20; ++d)
        EXPECT_EQ(sphere_cohomology(d).euler_characteristic(), d % 2 ? 0 : 2);
    EXPECT_EQ(g2_cohomology().euler_characteristic(), 0);
}

TEST(DividedRing, Validation)
{
    EXPECT_THROW(DividedRing(3, {1}), ValidationError);
    EXPECT_THROW(DividedRing(2, {2, 2}), ValidationError);
    EXPECT_THROW(DividedRing(2, {1, 2, 3}), ValidationError);
    EXPECT_THROW(DividedRing(2, {}), ValidationError);
    const DividedRing r(2, {1, 2, 6});
    EXPECT_EQ(r.c(0), 1);
    EXPECT_EQ(r.c(3), 6);
    EXPECT_THROW(r.c(4), ValidationError);
}

TEST(PoincareDuality, G2SU2)
{
    const auto g = g2_su2_cohomology();
    const GradedAbelianGroup expected(11, {{0, free_group()}, {5, cyclic_group(2)}, {11, free_group()}});
    EXPECT_EQ(g.homology, expected);
    EXPECT_EQ(cohomology_from_homology(g.homology), g.cohomology);
}

TEST(PoincareDuality, UnitTangentSix)
{
    const auto h = poincare_dual(unit_tangent_cohomology(3));
    EXPECT_EQ(h, GradedAbelianGroup(11, {{0, free_group()}, {5, cyclic_group(2)}, {11, free_group()}}));
    // same integral homology as G2//SU(2)
    EXPECT_EQ(h, g2_su2_cohomology().homology);
}

TEST(PoincareDuality, RoundTripAndNonManifold)
{
    for (int n = 2; n <= 10; ++n) {
        const auto h = unit_tangent_cohomology(n);
        EXPECT_EQ(cohomology_from_homology(poincare_dual(h)), h);
    }
    const GradedAbelianGroup lopsided(5, {{0, free_group()}, {2, free_group()}});
    EXPECT_THROW(poincare_dual(lopsided), NotAManifoldError);
}

TEST(Gysin, DefiningFibrationsPass)
{
    for (int n = 2; n <= 10; ++n) {
        for (const auto& spec : {unit_tangent_fibration(n), circle_quotient_fibration(n),
                                 quaternionic_quotient_fibration(n)}) {
            const auto r = check_gysin_consistency(spec);
            EXPECT_TRUE(r.pass) << n << ": " << r.diagnostics;
        }
    }
    EXPECT_TRUE(check_gysin_consistency(g2_su2_fibration()).pass);
}

TEST(Gysin, WrongEulerClassFailsInMiddleDegree)
{
    for (int n = 2; n <= 10; ++n) {
        auto spec = unit_tangent_fibration(n);
        spec.euler_coeff = 3;
        const auto r = check_gysin_consistency(spec);
        EXPECT_FALSE(r.pass);
        ASSERT_TRUE(r.failing_degree);
        EXPECT_EQ(*r.failing_degree, 2 * n);
    }
}

TEST(Gysin, WrongDivisibilityFails)
{
    auto spec = circle_quotient_fibration(3);
    spec.base_ring = DividedRing(2, {1, 1, 1, 1, 1});  // plain CP^5 would give the sphere S^11
    EXPECT_FALSE(check_gysin_consistency(spec).pass);
}

TEST(Gysin, UnsupportedShapes)
{
    FibrationSpec spec{1, 0, GradedAbelianGroup(2, {{0, free_group()}, {2, free_group(2)}}),
                       GradedAbelianGroup(3, {{0, free_group()}}), {}};
    EXPECT_THROW(check_gysin_consistency(spec), UnsupportedShapeError);
    spec.base = sphere_cohomology(2);
    spec.total = GradedAbelianGroup(3, {{0, free_group()}, {1, DegreeGroup{0, {2, 3}}}});
    // Z_2 + Z_3 normalizes to Z_6, which is cyclic
    EXPECT_NO_THROW(check_gysin_consistency(spec));
    spec.total = GradedAbelianGroup(3, {{0, free_group()}, {1, DegreeGroup{0, {2, 2}}}});
    EXPECT_THROW(check_gysin_consistency(spec), UnsupportedShapeError);
}

TEST(NormalizeTorsion, InvariantFactors)
{
    EXPECT_EQ(normalize_torsion({2, 3}), (std::vector<std::int64_t>{6}));
    EXPECT_EQ(normalize_torsion({4, 2, 1}), (std::vector<std::int64_t>{2, 4}));
    EXPECT_EQ(normalize_torsion({12, 18}), (std::vector<std::int64_t>{6, 36}));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 5), val(1, 30);
    for (int i = 0; i < 300; ++i) {
        std::vector<std::int64_t> t(len(rng));
        std::int64_t product = 1;
        for (auto& v : t) {
            v = val(rng);
            product *= v;
        }
        const auto f = normalize_torsion(t);
        std::int64_t p = 1;
        for (std::size_t k = 0; k < f.size(); ++k) {
            EXPECT_GT(f[k], 1);
            if (k + 1 < f.size()) {
                EXPECT_EQ(f[k + 1] % f[k], 0);
            }
            p *= f[k];
        }
        EXPECT_EQ(p, product);
        EXPECT_EQ(normalize_torsion(f), f);
    }
}

TEST(TextRecords, RoundTrip)
{
    for (int n = 2; n <= 6; ++n) {
        const auto h = circle_quotient_ring(n);
        std::istringstream in(to_text(h.groups, &h.ring));
        const auto rec = parse_graded_text(in);
        EXPECT_EQ(rec.groups, h.groups);
        ASSERT_TRUE(rec.ring);
        EXPECT_EQ(*rec.ring, h.ring);
    }

    std::mt19937 rng(11);
    std::uniform_int_distribution<int> top_d(0, 20), rank(0, 3), tor(1, 12), coin(0, 2);
    for (int i = 0; i < 200; ++i) {
        GradedAbelianGroup g(top_d(rng));
        for (int k = 0; k <= g.top_degree(); ++k)
            if (coin(rng) == 0)
                g.set(k, {rank(rng), {tor(rng), tor(rng)}});
        std::istringstream in(to_text(g));
        const auto rec = parse_graded_text(in);
        EXPECT_EQ(rec.groups, g);
        EXPECT_FALSE(rec.ring);
    }
}

TEST(TextRecords, ParseErrors)
{
    auto fails_at = [](const std::string& text, const std::string& location) {
        std::istringstream in(text);
        try {
            parse_graded_text(in);
        } catch (const ParseError& e) {
            EXPECT_EQ(e.location(), location) << e.what();
            return;
        }
        ADD_FAILURE() << "no parse error for: " << text;
    };
    fails_at("top_degree: 3\n0 1, []\n", "line 2");
    fails_at("top_degree: 3\n0: x, []\n", "line 2");
    fails_at("top_degree: 3\n0: 1, [2\n", "line 2");
    fails_at("top_degree: 3\n5: 1, []\n", "line 2");
    fails_at("# empty\n0: 1, []\n", "line 2");
    fails_at("top_degree: 2\ngen_degree: 2\n", "line 2");
    fails_at("top_degree: 2\ngen_degree: 2\ndivisibility: [2]\n", "line 3");
}
