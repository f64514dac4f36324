#pragma once

// Curated classification data: the odd rational homology sphere pairs with
// their conjugacy-class counts, and the rational sphere/projective space list
// with subgroup embeddings. Existence of the embeddings is taken as data; the
// library only checks the rational conditions they must satisfy.

#include <algorithm>
#include <istream>
#include <sstream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "biquot/error.hpp"
#include "biquot/lie_catalog.hpp"
#include "biquot/rational_model.hpp"

namespace biquot {

/// Integer of the form coef * n + offset.
struct Affine {
    int coef = 0;
    int offset = 0;

    int at(int n) const noexcept { return coef * n + offset; }
};

/// A simple group whose rank may depend on the row parameter n.
struct GroupPattern {
    Family family = Family::A;
    Affine rank;

    SimpleGroup at(int n) const { return SimpleGroup::make(family, rank.at(n)); }
};

/// Parameter range of a row. Unparameterized rows instantiate once.
struct ParamRange {
    std::optional<int> n_min;
    std::vector<int> excluded;

    bool parameterized() const noexcept { return n_min.has_value(); }

    std::vector<int> values(int n_max) const
    {
        if (!n_min)
            return {0};
        std::vector<int> out;
        for (int n = *n_min; n <= n_max; ++n)
            if (std::find(excluded.begin(), excluded.end(), n) == excluded.end())
                out.push_back(n);
        return out;
    }
};

struct PairRow {
    std::string g_name;
    std::string h_name;
    GroupPattern g;
    GroupPattern h;
    ParamRange range;
    int reps = 1;
};

/// Factor of the subgroup H: a circle or a simple group.
struct FactorPattern {
    std::optional<GroupPattern> group;  // empty: circle factor

    bool is_circle() const noexcept { return !group.has_value(); }
};

struct TypePattern {
    RationalType::Kind kind = RationalType::Kind::odd_sphere;
    Affine degree;     // sphere dimension, or deg a
    Affine top_power;  // truncated only

    RationalType at(int n) const
    {
        return kind == RationalType::Kind::odd_sphere
                   ? RationalType::odd_sphere(degree.at(n))
                   : RationalType::truncated(degree.at(n), top_power.at(n));
    }
};

struct SinglyGeneratedRow {
    std::string name;
    GroupPattern g;
    std::vector<FactorPattern> h;
    TypePattern type;
    ParamRange range;
    bool biquotient = false;
    std::optional<int> index;                     // homogeneous rank-one subgroup index
    std::optional<std::pair<int, int>> indices;   // (left, right) biquotient indices
    std::string note;
};

struct CuratedTables {
    std::vector<PairRow> odd_sphere_pairs;
    std::vector<SinglyGeneratedRow> singly_generated;
};

inline constexpr const char* kCuratedTablesJson = R"json({
  "odd_sphere_pairs": [
    {"g": "SO(2n)",   "h": "SO(2n-1)", "g_group": ["D", 1, 0],  "h_group": ["B", 1, -1],
     "n_min": 3, "exclude": [4], "reps": 1},
    {"g": "SU(n)",    "h": "SU(n-1)",  "g_group": ["A", 1, -1], "h_group": ["A", 1, -2],
     "n_min": 4, "reps": 1},
    {"g": "Sp(n)",    "h": "Sp(n-1)",  "g_group": ["C", 1, 0],  "h_group": ["C", 1, -1],
     "n_min": 3, "reps": 1},
    {"g": "SO(2n+1)", "h": "SO(2n-1)", "g_group": ["B", 1, 0],  "h_group": ["B", 1, -1],
     "n_min": 3, "reps": 1},
    {"g": "Spin(7)",  "h": "G2",       "g_group": ["B", 0, 3],  "h_group": ["G2", 0, 2], "reps": 1},
    {"g": "Spin(8)",  "h": "Spin(7)",  "g_group": ["D", 0, 4],  "h_group": ["B", 0, 3],  "reps": 3},
    {"g": "Spin(9)",  "h": "Spin(7)",  "g_group": ["B", 0, 4],  "h_group": ["B", 0, 3],  "reps": 2},
    {"g": "SU(3)",    "h": "SU(2)",    "g_group": ["A", 0, 2],  "h_group": ["A", 0, 1],  "reps": 2},
    {"g": "Sp(2)",    "h": "Sp(1)",    "g_group": ["C", 0, 2],  "h_group": ["C", 0, 1],  "reps": 3},
    {"g": "G2",       "h": "SU(2)",    "g_group": ["G2", 0, 2], "h_group": ["A", 0, 1],  "reps": 4}
  ],
  "singly_generated": [
    {"name": "SO(2n+1)/(SO(2n-1)xSO(2))", "g_group": ["B", 1, 0],
     "h_factors": [["B", 1, -1], "circle"], "type": ["truncated", [0, 2], [2, -1]], "n_min": 2,
     "note": "Grassmannian of oriented 2-planes"},
    {"name": "SO(2n+1)/SO(2n-1)", "g_group": ["B", 1, 0],
     "h_factors": [["B", 1, -1]], "type": ["sphere", [4, -1]], "n_min": 2,
     "note": "unit tangent bundle of S^2n"},
    {"name": "SU(3)/SO(3)_2", "g_group": ["A", 0, 2], "h_factors": [["B", 0, 1]],
     "type": ["sphere", 5], "index": 2, "note": "real form SO(3) in SU(3)"},
    {"name": "Sp(2)/Sp(1)_10", "g_group": ["C", 0, 2], "h_factors": [["C", 0, 1]],
     "type": ["sphere", 7], "index": 10, "note": "maximal Sp(1), normal homogeneous Berger space"},
    {"name": "G2/SU(2)_3", "g_group": ["G2", 0, 2], "h_factors": [["A", 0, 1]],
     "type": ["sphere", 11], "index": 3, "note": "normal SU(2) of SO(4) not contained in SU(3)"},
    {"name": "G2/SO(3)_4", "g_group": ["G2", 0, 2], "h_factors": [["B", 0, 1]],
     "type": ["sphere", 11], "index": 4, "note": "SO(3) in SO(4), also contained in SU(3)"},
    {"name": "G2/SO(3)_28", "g_group": ["G2", 0, 2], "h_factors": [["B", 0, 1]],
     "type": ["sphere", 11], "index": 28, "note": "maximal SO(3)"},
    {"name": "G2/U(2)_3", "g_group": ["G2", 0, 2], "h_factors": [["A", 0, 1], "circle"],
     "type": ["truncated", 2, 5], "index": 3, "note": "U(2) enlarging the index 3 SU(2)"},
    {"name": "G2/SO(4)", "g_group": ["G2", 0, 2], "h_factors": [["A", 0, 1], ["A", 0, 1]],
     "type": ["truncated", 4, 2], "note": "maximal equal rank subgroup"},
    {"name": "dSO(2)\\SO(2n+1)/SO(2n-1)", "g_group": ["B", 1, 0],
     "h_factors": ["circle", ["B", 1, -1]], "type": ["truncated", [0, 2], [2, -1]], "n_min": 2,
     "biquotient": true, "note": "left Hopf action diag(1, A, ..., A), A in SO(2)"},
    {"name": "dSU(2)\\SO(4n+1)/SO(4n-1)", "g_group": ["B", 2, 0],
     "h_factors": [["A", 0, 1], ["B", 2, -1]], "type": ["truncated", [0, 4], [2, -1]], "n_min": 2,
     "biquotient": true, "note": "left Hopf action diag(1, A, ..., A), A in SU(2)"},
    {"name": "Sp(2)//Sp(1)", "g_group": ["C", 0, 2], "h_factors": [["C", 0, 1]],
     "type": ["sphere", 7], "biquotient": true, "indices": [2, 1],
     "note": "left diag(q, q), right diag(q, 1)"},
    {"name": "G2//SU(2)", "g_group": ["G2", 0, 2], "h_factors": [["A", 0, 1]],
     "type": ["sphere", 11], "biquotient": true, "indices": [3, 4],
     "note": "left index 3 SU(2), right index 4 SO(3)"}
  ]
})json";

namespace detail {

inline Affine parse_affine(const nlohmann::json& j)
{
    if (j.is_number_integer())
        return {0, j.get<int>()};
    if (j.is_array() && j.size() == 2)
        return {j[0].get<int>(), j[1].get<int>()};
    throw std::invalid_argument("expected integer or [coef, offset]");
}

inline GroupPattern parse_group(const nlohmann::json& j)
{
    if (!j.is_array() || j.size() != 3)
        throw std::invalid_argument("group must be [family, coef, offset]");
    auto fam = parse_family(j[0].get<std::string>());
    if (!fam)
        throw std::invalid_argument("unknown family " + j[0].get<std::string>());
    return {*fam, {j[1].get<int>(), j[2].get<int>()}};
}

inline ParamRange parse_range(const nlohmann::json& j)
{
    ParamRange r;
    if (j.contains("n_min"))
        r.n_min = j.at("n_min").get<int>();
    if (j.contains("exclude"))
        r.excluded = j.at("exclude").get<std::vector<int>>();
    return r;
}

inline TypePattern parse_type(const nlohmann::json& j)
{
    const auto kind = j.at(0).get<std::string>();
    TypePattern t;
    if (kind == "sphere" && j.size() == 2) {
        t.kind = RationalType::Kind::odd_sphere;
        t.degree = parse_affine(j[1]);
    } else if (kind == "truncated" && j.size() == 3) {
        t.kind = RationalType::Kind::truncated;
        t.degree = parse_affine(j[1]);
        t.top_power = parse_affine(j[2]);
    } else {
        throw std::invalid_argument("type must be [\"sphere\", d] or [\"truncated\", deg, m]");
    }
    return t;
}

template <class F>
auto parse_record(const char* table, std::size_t i, F&& f)
{
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(std::string(table) + "[" + std::to_string(i) + "]", e.what());
    }
}

}  // namespace detail

/// Parses the curated table document (same schema as kCuratedTablesJson).
inline CuratedTables parse_curated_tables(std::istream& in)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("byte " + std::to_string(e.byte), e.what());
    }
    if (!doc.contains("odd_sphere_pairs") || !doc.contains("singly_generated"))
        throw ParseError("document", "missing odd_sphere_pairs or singly_generated");

    CuratedTables out;
    const auto& pairs = doc.at("odd_sphere_pairs");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        out.odd_sphere_pairs.push_back(detail::parse_record("odd_sphere_pairs", i, [&] {
            const auto& r = pairs[i];
            PairRow row;
            row.g_name = r.at("g").get<std::string>();
            row.h_name = r.at("h").get<std::string>();
            row.g = detail::parse_group(r.at("g_group"));
            row.h = detail::parse_group(r.at("h_group"));
            row.range = detail::parse_range(r);
            row.reps = r.at("reps").get<int>();
            if (row.reps < 1)
                throw std::invalid_argument("reps must be positive");
            return row;
        }));
    }

    const auto& rows = doc.at("singly_generated");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.singly_generated.push_back(detail::parse_record("singly_generated", i, [&] {
            const auto& r = rows[i];
            SinglyGeneratedRow row;
            row.name = r.at("name").get<std::string>();
            row.g = detail::parse_group(r.at("g_group"));
            for (const auto& f : r.at("h_factors")) {
                if (f.is_string() && f.get<std::string>() == "circle")
                    row.h.push_back({});
                else
                    row.h.push_back({detail::parse_group(f)});
            }
            row.type = detail::parse_type(r.at("type"));
            row.range = detail::parse_range(r);
            row.biquotient = r.value("biquotient", false);
            if (r.contains("index"))
                row.index = r.at("index").get<int>();
            if (r.contains("indices")) {
                auto idx = r.at("indices").get<std::vector<int>>();
                if (idx.size() != 2)
                    throw std::invalid_argument("indices must be [left, right]");
                row.indices = std::pair{idx[0], idx[1]};
            }
            row.note = r.value("note", std::string{});
            return row;
        }));
    }
    return out;
}

inline const CuratedTables& builtin_tables()
{
    static const CuratedTables tables = [] {
        std::istringstream in(kCuratedTablesJson);
        return parse_curated_tables(in);
    }();
    return tables;
}

}  // namespace biquot
