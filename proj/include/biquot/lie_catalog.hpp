#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "biquot/error.hpp"

namespace biquot {

/// Sorted multiset of odd sphere dimensions. A circle factor contributes 1.
using SphereMultiset = std::vector<int>;

inline SphereMultiset make_multiset(std::vector<int> dims)
{
    std::sort(dims.begin(), dims.end());
    return dims;
}

inline SphereMultiset multiset_sum(const SphereMultiset& a, const SphereMultiset& b)
{
    SphereMultiset out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::string to_string(const SphereMultiset& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

/// Cartan families. Declaration order is the catalog sort order.
enum class Family : std::uint8_t { A, B, C, D, G2, F4, E6, E7, E8 };

inline bool is_exceptional(Family f) { return f >= Family::G2; }

inline int fixed_rank(Family f)
{
    switch (f) {
    case Family::G2: return 2;
    case Family::F4: return 4;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    default: return 0;
    }
}

inline std::string to_string(Family f)
{
    static const char* names[] = {"A", "B", "C", "D", "G2", "F4", "E6", "E7", "E8"};
    return names[static_cast<int>(f)];
}

inline std::optional<Family> parse_family(const std::string& s)
{
    static const std::pair<const char*, Family> table[] = {
        {"A", Family::A},   {"B", Family::B},   {"C", Family::C},
        {"D", Family::D},   {"G2", Family::G2}, {"F4", Family::F4},
        {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8}};
    for (const auto& [name, f] : table)
        if (s == name)
            return f;
    return std::nullopt;
}

/**
 * A compact simple Lie group up to covering, identified by Cartan family and
 * rank. Construct through make(), which enforces the family/rank rules.
 */
class SimpleGroup {
public:
    static SimpleGroup make(Family f, int rank)
    {
        if (is_exceptional(f)) {
            if (rank != fixed_rank(f))
                throw ValidationError(to_string(f) + " has fixed rank " +
                                      std::to_string(fixed_rank(f)));
        } else if (rank < 1) {
            throw ValidationError("rank must be positive, got " + std::to_string(rank));
        } else if (f == Family::D && rank < 3) {
            throw ValidationError("family D requires rank >= 3, got " + std::to_string(rank));
        }
        return SimpleGroup(f, rank);
    }

    static SimpleGroup make(Family f) { return make(f, fixed_rank(f)); }

    Family family() const noexcept { return family_; }
    int rank() const noexcept { return rank_; }

    /// Cartan symbol, e.g. "B3", "G2".
    std::string symbol() const
    {
        return is_exceptional(family_) ? to_string(family_)
                                       : to_string(family_) + std::to_string(rank_);
    }

    /// Classical matrix-group name, e.g. "SO(7)", "Sp(2)", "SU(4)".
    std::string label() const
    {
        switch (family_) {
        case Family::A: return "SU(" + std::to_string(rank_ + 1) + ")";
        case Family::B: return "SO(" + std::to_string(2 * rank_ + 1) + ")";
        case Family::C: return "Sp(" + std::to_string(rank_) + ")";
        case Family::D: return "SO(" + std::to_string(2 * rank_) + ")";
        default: return to_string(family_);
        }
    }

    // Ordered by rank first, then family.
    friend auto operator<=>(const SimpleGroup& a, const SimpleGroup& b)
    {
        if (auto c = a.rank_ <=> b.rank_; c != 0)
            return c;
        return a.family_ <=> b.family_;
    }
    friend bool operator==(const SimpleGroup&, const SimpleGroup&) = default;

private:
    SimpleGroup(Family f, int rank) : family_(f), rank_(rank) {}

    Family family_;
    int rank_;
};

/// Rational sphere dimensions (twice the exponents plus one).
inline SphereMultiset sphere_dimensions(const SimpleGroup& g)
{
    const int n = g.rank();
    std::vector<int> dims;
    switch (g.family()) {
    case Family::A:
        for (int i = 1; i <= n; ++i)
            dims.push_back(2 * i + 1);
        break;
    case Family::B:
    case Family::C:
        for (int i = 1; i <= n; ++i)
            dims.push_back(4 * i - 1);
        break;
    case Family::D:
        for (int i = 1; i <= n - 1; ++i)
            dims.push_back(4 * i - 1);
        dims.push_back(2 * n - 1);
        break;
    case Family::G2: dims = {3, 11}; break;
    case Family::F4: dims = {3, 11, 15, 23}; break;
    case Family::E6: dims = {3, 9, 11, 15, 17, 23}; break;
    case Family::E7: dims = {3, 11, 15, 19, 23, 27, 35}; break;
    case Family::E8: dims = {3, 15, 23, 27, 35, 39, 47, 59}; break;
    }
    return make_multiset(std::move(dims));
}

/// dim g from the classical formulas; independent of sphere_dimensions.
inline int group_dimension(const SimpleGroup& g)
{
    const int n = g.rank();
    switch (g.family()) {
    case Family::A: return n * (n + 2);
    case Family::B:
    case Family::C: return n * (2 * n + 1);
    case Family::D: return n * (2 * n - 1);
    case Family::G2: return 14;
    case Family::F4: return 52;
    case Family::E6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
    }
    return 0;
}

/// Immutable list of simple groups plus the computed rational coincidences.
class GroupCatalog {
public:
    using Coincidence = std::pair<SimpleGroup, SimpleGroup>;

    explicit GroupCatalog(std::vector<SimpleGroup> entries) : entries_(std::move(entries))
    {
        std::sort(entries_.begin(), entries_.end());
        for (std::size_t i = 1; i < entries_.size(); ++i)
            if (entries_[i] == entries_[i - 1])
                throw ValidationError("duplicate catalog entry " + entries_[i].symbol());

        std::map<SphereMultiset, std::vector<std::size_t>> by_dims;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            by_dims[sphere_dimensions(entries_[i])].push_back(i);
        for (const auto& [dims, idx] : by_dims)
            for (std::size_t a = 0; a < idx.size(); ++a)
                for (std::size_t b = a + 1; b < idx.size(); ++b)
                    coincidences_.emplace_back(entries_[idx[a]], entries_[idx[b]]);
        std::sort(coincidences_.begin(), coincidences_.end());

        for (const auto& [g, h] : coincidences_)
            if (sphere_dimensions(g) != sphere_dimensions(h))
                throw ValidationError("inconsistent coincidence " + g.symbol() + "/" +
                                      h.symbol());
    }

    const std::vector<SimpleGroup>& entries() const noexcept { return entries_; }
    const std::vector<Coincidence>& coincidences() const noexcept { return coincidences_; }

    int max_rank() const noexcept { return entries_.empty() ? 0 : entries_.back().rank(); }

    bool contains(const SimpleGroup& g) const
    {
        return std::binary_search(entries_.begin(), entries_.end(), g);
    }

    /// Catalog groups sharing g's sphere multiset, g included if present.
    std::vector<SimpleGroup> rational_aliases(const SphereMultiset& dims) const
    {
        std::vector<SimpleGroup> out;
        for (const auto& e : entries_)
            if (sphere_dimensions(e) == dims)
                out.push_back(e);
        return out;
    }

private:
    std::vector<SimpleGroup> entries_;
    std::vector<Coincidence> coincidences_;
};

inline constexpr int kDefaultMaxRank = 10;

/**
 * Built-in catalog: A1.., B2.., C2.., D3.. up to max_rank, plus every
 * exceptional group whose rank fits. B1 and C1 are omitted since they are
 * rationally (indeed up to cover) A1.
 */
inline GroupCatalog builtin_catalog(int max_rank = kDefaultMaxRank)
{
    if (max_rank < 1)
        throw ValidationError("max_rank must be positive");
    std::vector<SimpleGroup> entries;
    for (int n = 1; n <= max_rank; ++n) {
        entries.push_back(SimpleGroup::make(Family::A, n));
        if (n >= 2) {
            entries.push_back(SimpleGroup::make(Family::B, n));
            entries.push_back(SimpleGroup::make(Family::C, n));
        }
        if (n >= 3)
            entries.push_back(SimpleGroup::make(Family::D, n));
    }
    for (Family f : {Family::G2, Family::F4, Family::E6, Family::E7, Family::E8})
        if (fixed_rank(f) <= max_rank)
            entries.push_back(SimpleGroup::make(f));
    return GroupCatalog(std::move(entries));
}

/**
 * Parses catalog override records, one `family rank` per line (`G2` alone is
 * accepted for exceptional families). `#` starts a comment. Sphere dimensions
 * are never read; they are always recomputed from (family, rank).
 */
inline GroupCatalog parse_catalog(std::istream& in)
{
    std::vector<SimpleGroup> entries;
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        std::string fam;
        if (!(ls >> fam))
            continue;
        auto family = parse_family(fam);
        if (!family)
            throw ParseError(lineno, "unknown family '" + fam + "'");
        int rank = fixed_rank(*family);
        std::string rank_tok;
        if (ls >> rank_tok) {
            std::size_t used = 0;
            try {
                rank = std::stoi(rank_tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != rank_tok.size())
                throw ParseError(lineno, "bad rank '" + rank_tok + "'");
        } else if (!is_exceptional(*family)) {
            throw ParseError(lineno, "missing rank for family " + fam);
        }
        std::string extra;
        if (ls >> extra)
            throw ParseError(lineno, "trailing token '" + extra + "'");
        try {
            entries.push_back(SimpleGroup::make(*family, rank));
        } catch (const ValidationError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return GroupCatalog(std::move(entries));
}

/// Override stream if given, otherwise the built-in catalog up to max_rank.
inline GroupCatalog load_catalog(std::istream* source, int max_rank = kDefaultMaxRank)
{
    return source ? parse_catalog(*source) : builtin_catalog(max_rank);
}

}  // namespace biquot
