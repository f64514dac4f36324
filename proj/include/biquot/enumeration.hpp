#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "biquot/curated_tables.hpp"
#include "biquot/lie_catalog.hpp"
#include "biquot/rational_model.hpp"
#include "biquot/report.hpp"

namespace biquot {

/// (G spheres, H spheres, removed sphere dimension): a pair up to rational coincidence.
using RationalPairKey = std::tuple<SphereMultiset, SphereMultiset, int>;

using GroupPair = std::pair<SimpleGroup, std::optional<SimpleGroup>>;

inline std::string pair_label(const GroupPair& p)
{
    return p.first.label() + "/" + (p.second ? p.second->label() : std::string("{e}"));
}

/**
 * A rational odd-sphere pair H^*(G) = H^*(H x S^d). `aliases` lists every
 * catalog pair with the same sphere multisets; the first is the representative.
 */
struct SpherePairCandidate {
    SimpleGroup g;
    std::optional<SimpleGroup> h;
    int sphere_dim;
    std::vector<GroupPair> aliases;

    SphereMultiset g_spheres() const { return sphere_dimensions(g); }
    SphereMultiset h_spheres() const { return h ? sphere_dimensions(*h) : SphereMultiset{}; }
    RationalPairKey key() const { return {g_spheres(), h_spheres(), sphere_dim}; }

    std::string label() const
    {
        std::string out;
        for (std::size_t i = 0; i < aliases.size(); ++i)
            out += (i ? " = " : "") + pair_label(aliases[i]);
        return out;
    }

    /// Re-checks the multiset and rank/dimension relations from scratch.
    bool consistent() const
    {
        const int h_rank = h ? h->rank() : 0;
        const int h_dim = h ? group_dimension(*h) : 0;
        return g_spheres() == multiset_sum(h_spheres(), {sphere_dim}) &&
               g.rank() == h_rank + 1 && group_dimension(g) - h_dim == sphere_dim;
    }
};

/**
 * All catalog pairs (G, H) with sphere_dimensions(G) = sphere_dimensions(H) + {d},
 * grouped by sphere multisets. Ordered by rank of G, family of G, then d.
 */
inline std::vector<SpherePairCandidate> match_odd_sphere_pairs(const GroupCatalog& catalog,
                                                                bool include_trivial_h = false)
{
    std::map<SphereMultiset, std::vector<SimpleGroup>> classes;
    for (const auto& g : catalog.entries())
        classes[sphere_dimensions(g)].push_back(g);

    std::vector<SpherePairCandidate> out;
    for (const auto& [g_dims, g_class] : classes) {
        std::set<int> removable(g_dims.begin(), g_dims.end());
        for (int d : removable) {
            SphereMultiset rest = g_dims;
            rest.erase(std::find(rest.begin(), rest.end(), d));

            std::vector<std::optional<SimpleGroup>> h_class;
            if (rest.empty()) {
                if (!include_trivial_h)
                    continue;
                h_class.push_back(std::nullopt);
            } else if (auto it = classes.find(rest); it != classes.end()) {
                h_class.assign(it->second.begin(), it->second.end());
            } else {
                continue;
            }

            SpherePairCandidate c{g_class.front(), h_class.front(), d, {}};
            for (const auto& g : g_class)
                for (const auto& h : h_class)
                    c.aliases.emplace_back(g, h);
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.g, a.sphere_dim) < std::tie(b.g, b.sphere_dim);
    });
    return out;
}

/// Instantiated curated pair together with its source row.
struct CuratedPair {
    const PairRow* row;
    int n;  // 0 for unparameterized rows
    SimpleGroup g;
    SimpleGroup h;

    RationalPairKey key() const
    {
        const auto gs = sphere_dimensions(g);
        const auto hs = sphere_dimensions(h);
        // the removed sphere is the single element of gs not matched in hs
        int d = std::accumulate(gs.begin(), gs.end(), 0) - std::accumulate(hs.begin(), hs.end(), 0);
        return {gs, hs, d};
    }

    std::string name() const
    {
        std::string s = row->g_name + "/" + row->h_name;
        if (row->range.parameterized())
            s += " (n=" + std::to_string(n) + ")";
        return s;
    }
};

/// Every curated odd-sphere pair whose G has rank within the catalog.
inline std::vector<CuratedPair> instantiate_pairs(const CuratedTables& tables,
                                                  const GroupCatalog& catalog)
{
    std::vector<CuratedPair> out;
    for (const auto& row : tables.odd_sphere_pairs) {
        if (!row.range.parameterized()) {
            auto g = row.g.at(0);
            if (g.rank() <= catalog.max_rank())
                out.push_back({&row, 0, g, row.h.at(0)});
            continue;
        }
        for (int n = *row.range.n_min; row.g.rank.at(n) <= catalog.max_rank(); ++n) {
            const auto& ex = row.range.excluded;
            if (std::find(ex.begin(), ex.end(), n) != ex.end())
                continue;
            out.push_back({&row, n, row.g.at(n), row.h.at(n)});
        }
    }
    return out;
}

/// Result of comparing the matcher output against the curated pair list.
struct PairTableComparison {
    std::vector<CuratedPair> missing;           // curated, not found by the matcher
    std::vector<SpherePairCandidate> extra;     // found, no curated row
    std::vector<CuratedPair> not_invariant;     // curated pair violating the multiset relation
    std::size_t matched = 0;

    bool exact() const { return missing.empty() && extra.empty() && not_invariant.empty(); }
};

inline PairTableComparison compare_with_curated(const std::vector<SpherePairCandidate>& found,
                                                const CuratedTables& tables,
                                                const GroupCatalog& catalog)
{
    PairTableComparison cmp;
    std::map<RationalPairKey, const SpherePairCandidate*> by_key;
    for (const auto& c : found)
        if (c.h)
            by_key.emplace(c.key(), &c);

    std::set<RationalPairKey> covered;
    for (const auto& p : instantiate_pairs(tables, catalog)) {
        const auto key = p.key();
        const auto& [gs, hs, d] = key;
        if (gs != multiset_sum(hs, {d})) {
            cmp.not_invariant.push_back(p);
            continue;
        }
        if (by_key.count(key)) {
            covered.insert(key);
            ++cmp.matched;
        } else {
            cmp.missing.push_back(p);
        }
    }
    for (const auto& [key, c] : by_key)
        if (!covered.count(key))
            cmp.extra.push_back(*c);
    return cmp;
}

namespace detail {

inline int factor_dimension(const FactorPattern& f, int n)
{
    return f.is_circle() ? 1 : group_dimension(f.group->at(n));
}

inline SphereMultiset factor_spheres(const FactorPattern& f, int n)
{
    return f.is_circle() ? SphereMultiset{1} : sphere_dimensions(f.group->at(n));
}

}  // namespace detail

/// Checks one instantiated row; failures are recorded, never thrown.
inline ReportRecord verify_table_b_row(const SinglyGeneratedRow& row, int n, const GroupCatalog& catalog)
{
    ReportRecord rec;
    rec.name = row.name;
    if (row.range.parameterized())
        rec.name += " (n=" + std::to_string(n) + ")";

    try {
        const SimpleGroup g = row.g.at(n);
        const RationalType type = row.type.at(n);

        bool covered = catalog.contains(g);
        SphereMultiset h_spheres;
        int h_dim = 0;
        for (const auto& f : row.h) {
            const auto s = detail::factor_spheres(f, n);
            if (!f.is_circle() && catalog.rational_aliases(s).empty())
                covered = false;
            h_spheres = multiset_sum(h_spheres, s);
            h_dim += detail::factor_dimension(f, n);
        }
        rec.add("catalog", covered,
                covered ? g.symbol() : "catalog max rank " + std::to_string(catalog.max_rank()) +
                                           " does not cover " + g.symbol());

        const auto g_spheres = sphere_dimensions(g);
        rec.add("balance", rational_balance(g_spheres, h_spheres, type),
                to_string(g_spheres) + " vs H " + to_string(h_spheres) + ", " + type.describe());

        const int quotient_dim = group_dimension(g) - h_dim;
        rec.add("dimension", quotient_dim == type.dimension(),
                std::to_string(group_dimension(g)) + " - " + std::to_string(h_dim) + " = " +
                    std::to_string(quotient_dim) + ", expected " +
                    std::to_string(type.dimension()));

        if (row.index)
            rec.add("pi3", pi3_of_quotient(EmbeddingIndex(*row.index)) == *row.index,
                    "pi3(G/H) = Z_" + std::to_string(*row.index));
        if (row.indices) {
            const int map = fiber_pi3_map(row.indices->first, row.indices->second);
            rec.add("fiber_pi3", map == 1,
                    "|" + std::to_string(row.indices->first) + " - " +
                        std::to_string(row.indices->second) + "| = " + std::to_string(map));
        }
    } catch (const std::exception& e) {
        rec.add("instantiate", false, e.what());
    }
    return rec;
}

/// Every curated singly generated row, parameterized rows for 2 <= n <= n_max.
inline Report verify_table_b(const GroupCatalog& catalog, int n_max,
                             const CuratedTables& tables = builtin_tables())
{
    Report report{"rational spheres and projective spaces", {}};
    for (const auto& row : tables.singly_generated)
        for (int n : row.range.values(n_max))
            report.records.push_back(verify_table_b_row(row, n, catalog));
    return report;
}

/// Catalog rank needed to instantiate every row up to n_max.
inline int required_rank(const CuratedTables& tables, int n_max)
{
    int r = 1;
    for (const auto& row : tables.singly_generated)
        for (int n : row.range.values(n_max))
            r = std::max(r, row.g.rank.at(n));
    return r;
}

}  // namespace biquot
