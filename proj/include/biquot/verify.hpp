#pragma once

// Report builders composing the module checks; used by `biquot verify-tables`.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "biquot/char_class.hpp"
#include "biquot/cohomology.hpp"
#include "biquot/curated_tables.hpp"
#include "biquot/enumeration.hpp"
#include "biquot/lie_catalog.hpp"
#include "biquot/report.hpp"

namespace biquot {

inline Report sphere_table_report(const GroupCatalog& catalog)
{
    Report report{"sphere dimensions", {}};
    for (const auto& g : catalog.entries()) {
        const auto dims = sphere_dimensions(g);
        int sum = 0;
        bool odd = true;
        for (int d : dims) {
            sum += d;
            odd = odd && d >= 3 && d % 2 == 1;
        }
        ReportRecord rec{g.symbol() + " " + g.label(), {}};
        rec.add("rank", static_cast<int>(dims.size()) == g.rank(), to_string(dims));
        rec.add("odd", odd);
        rec.add("dimension", sum == group_dimension(g),
                std::to_string(sum) + " = dim " + std::to_string(group_dimension(g)));
        report.records.push_back(std::move(rec));
    }
    for (const auto& [a, b] : catalog.coincidences())
        report.records.push_back(ReportRecord{"coincidence " + a.symbol() + " ~ " + b.symbol(), {}}
                                     .add("multisets", sphere_dimensions(a) == sphere_dimensions(b),
                                          a.label() + " ~ " + b.label()));
    return report;
}

inline std::string describe_candidate(const SpherePairCandidate& c)
{
    return "d = " + std::to_string(c.sphere_dim) + ", G " + to_string(c.g_spheres()) + ", H " +
           to_string(c.h_spheres());
}

/// Matcher output plus a comparison against the curated odd-sphere pairs.
inline Report pair_table_report(const GroupCatalog& catalog, const CuratedTables& tables,
                                bool include_trivial_h = false)
{
    Report report{"odd rational homology sphere pairs", {}};
    const auto found = match_odd_sphere_pairs(catalog, include_trivial_h);
    for (const auto& c : found)
        report.records.push_back(
            ReportRecord{c.label(), {}}.add("multiset", c.consistent(), describe_candidate(c)));

    const auto cmp = compare_with_curated(found, tables, catalog);
    ReportRecord summary{"curated pair table", {}};
    std::string missing, extra;
    for (const auto& p : cmp.missing)
        missing += (missing.empty() ? "" : "; ") + p.name();
    for (const auto& c : cmp.not_invariant)
        missing += (missing.empty() ? "" : "; ") + c.name() + " (not a sphere pair)";
    for (const auto& c : cmp.extra)
        extra += (extra.empty() ? "" : "; ") + c.label();
    summary.add("missing", missing.empty(), missing.empty() ? "none" : missing);
    summary.add("extra", extra.empty(), extra.empty() ? "none" : extra);
    summary.add("matched", true, std::to_string(cmp.matched) + " instantiated rows");
    report.records.push_back(std::move(summary));

    for (const auto& p : instantiate_pairs(tables, catalog))
        if (!p.row->range.parameterized() || p.n == *p.row->range.n_min)
            report.records.push_back(ReportRecord{p.row->g_name + "/" + p.row->h_name, {}}.add(
                "reps", p.row->reps >= 1, std::to_string(p.row->reps) + " conjugacy classes"));
    return report;
}

namespace detail {

inline ReportRecord gysin_record(const std::string& name, const FibrationSpec& spec)
{
    ReportRecord rec{name, {}};
    try {
        const auto r = check_gysin_consistency(spec);
        rec.add("gysin", r.pass, r.diagnostics);
    } catch (const std::exception& e) {
        rec.add("gysin", false, e.what());
    }
    return rec;
}

}  // namespace detail

/// Defining fibration S^{2n-1} -> T^1 S^{2n} -> S^{2n}; e = chi(S^{2n}) = 2.
inline FibrationSpec unit_tangent_fibration(int n, bool allow_n1 = false)
{
    return {2 * n - 1, 2, sphere_cohomology(2 * n), unit_tangent_cohomology(n, allow_n1), {}};
}

/// S^1 -> T^1 S^{2n} -> M (or the Grassmannian N); the Euler class generates H^2.
inline FibrationSpec circle_quotient_fibration(int n)
{
    auto base = circle_quotient_ring(n);
    return {1, 1, base.groups, unit_tangent_cohomology(n), base.ring};
}

/// S^3 -> T^1 S^{4n} -> dSU(2)\SO(4n+1)/SO(4n-1); the Euler class generates H^4.
inline FibrationSpec quaternionic_quotient_fibration(int n)
{
    auto base = quaternionic_quotient_ring(n);
    return {3, 1, base.groups, unit_tangent_cohomology(2 * n), base.ring};
}

/// S^3 -> G2 -> G2//SU(2); the base is 4-connected so e = 0.
inline FibrationSpec g2_su2_fibration()
{
    return {3, 0, g2_su2_cohomology().cohomology, g2_cohomology(), {}};
}

inline Report cohomology_report(int n_max)
{
    Report report{"integral cohomology", {}};
    for (int n = 2; n <= n_max; ++n) {
        const std::string sn = " (n=" + std::to_string(n) + ")";
        const auto ut = unit_tangent_cohomology(n);
        report.records.push_back(
            detail::gysin_record("T1S^" + std::to_string(2 * n) + sn, unit_tangent_fibration(n))
                .add("groups", ut.euler_characteristic() == 0, ut.describe()));

        const auto cq = circle_quotient_ring(n);
        report.records.push_back(
            detail::gysin_record("circle quotient" + sn, circle_quotient_fibration(n))
                .add("a^n twice a generator", cq.ring.c(n) == 2,
                     "c_" + std::to_string(n) + " = " + std::to_string(cq.ring.c(n)))
                .add("euler characteristic", cq.groups.euler_characteristic() == 2 * n));

        const auto qq = quaternionic_quotient_ring(n);
        report.records.push_back(
            detail::gysin_record("quaternionic quotient" + sn, quaternionic_quotient_fibration(n))
                .add("a^n twice a generator", qq.ring.c(n) == 2,
                     "c_" + std::to_string(n) + " = " + std::to_string(qq.ring.c(n)))
                .add("euler characteristic", qq.groups.euler_characteristic() == 2 * n));
    }

    const auto g2 = g2_su2_cohomology();
    const GradedAbelianGroup expected_homology(
        11, {{0, free_group()}, {5, cyclic_group(2)}, {11, free_group()}});
    report.records.push_back(detail::gysin_record("G2//SU(2)", g2_su2_fibration())
                                 .add("homology", g2.homology == expected_homology,
                                      g2.homology.describe()));
    return report;
}

inline Report distinguish_report(int n_max)
{
    Report report{"Pontrjagin class distinction", {}};
    for (int n = 2; n <= n_max; ++n)
        report.records.push_back(distinguish_cp_pair(n).to_record());
    return report;
}

inline std::string describe(const WeightDecomposition& w)
{
    std::string out = "{";
    for (const auto& [weight, m] : w.multiplicities)
        out += (out.size() > 1 ? ", " : "") + std::to_string(weight) + ": " + std::to_string(m);
    return out + "}";
}

namespace detail {

template <class F>
ReportRecord weight_record(const std::string& name, F&& chi, int rank, int max_weight,
                           const std::map<int, int>& expected)
{
    ReportRecord rec{name, {}};
    try {
        const auto w = weight_decompose(chi, rank, max_weight, 4 * max_weight + 9);
        rec.add("weights", w.multiplicities == expected,
                describe(w) + ", residual " + std::to_string(w.residual));
    } catch (const std::exception& e) {
        rec.add("weights", false, e.what());
    }
    return rec;
}

/// A fixed orthonormal pair (x, y) in R^{2n+1} away from the Hopf axes.
inline std::pair<std::vector<double>, std::vector<double>> sample_unit_tangent(int n)
{
    const int d = 2 * n + 1;
    std::vector<double> x(d, 0.0), y(d, 0.0);
    for (int i = 0; i < d; ++i) {
        x[i] = 1.0 + 0.1 * i;
        y[i] = std::sin(1.0 + i);
    }
    auto dot = [](const auto& a, const auto& b) {
        double s = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            s += a[i] * b[i];
        return s;
    };
    const double nx = std::sqrt(dot(x, x));
    for (auto& v : x)
        v /= nx;
    const double p = dot(x, y);
    for (int i = 0; i < d; ++i)
        y[i] -= p * x[i];
    const double ny = std::sqrt(dot(y, y));
    for (auto& v : y)
        v /= ny;
    return {x, y};
}

}  // namespace detail

inline Report weights_report(int n_max)
{
    Report report{"circle representation weights", {}};
    report.records.push_back(detail::weight_record(
        "normal bundle under geodesic flow",
        [](double t) { return normal_bundle_action(t).trace(); }, 3, 4, {{0, 1}, {2, 1}}));

    for (int n = 2; n <= n_max; ++n) {
        const auto [x, y] = detail::sample_unit_tangent(n);
        const std::string sn = " (n=" + std::to_string(n) + ")";
        report.records.push_back(detail::weight_record(
            "normal bundle under diagonal Hopf action" + sn,
            [&, n](double t) { return normal_frame_action(hopf_diagonal_action(n, t), x, y).trace(); },
            3, 4, {{0, 3}}));
        report.records.push_back(detail::weight_record(
            "normal frame projection of geodesic flow" + sn,
            [&, n](double t) {
                return normal_frame_action(geodesic_flow_action(n, t), x, y).trace();
            },
            3, 4, {{0, 1}, {2, 1}}));
        report.records.push_back(detail::weight_record(
            "geodesic flow on R^" + std::to_string(4 * n + 2) + sn,
            [n](double t) { return geodesic_flow_action(n, t).trace(); }, 4 * n + 2, 4,
            {{1, 2 * n + 1}}));
    }
    return report;
}

/// Every table regression and closed-form check, parameterized rows up to n_max.
inline Report verify_all(int max_rank, int n_max, const CuratedTables& tables = builtin_tables(),
                         const GroupCatalog* catalog_override = nullptr)
{
    Report report{"verify-tables", {}};
    const GroupCatalog pairs_catalog =
        catalog_override ? *catalog_override : builtin_catalog(max_rank);
    report.append(sphere_table_report(pairs_catalog));
    report.append(pair_table_report(pairs_catalog, tables));

    const int needed = std::max(max_rank, required_rank(tables, n_max));
    const GroupCatalog rows_catalog =
        catalog_override ? *catalog_override : builtin_catalog(needed);
    report.append(verify_table_b(rows_catalog, n_max, tables));
    report.append(cohomology_report(n_max));
    report.append(distinguish_report(n_max));
    report.append(weights_report(std::min(n_max, 5)));
    return report;
}

}  // namespace biquot
