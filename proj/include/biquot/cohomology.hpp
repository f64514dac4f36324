#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
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

/// Invariant factor form: d1 | d2 | ... with every di >= 2.
inline std::vector<std::int64_t> normalize_torsion(std::vector<std::int64_t> orders)
{
    for (auto& t : orders) {
        t = std::llabs(t);
        if (t == 0)
            throw ValidationError("torsion order 0 is not a finite cyclic group");
    }
    for (std::size_t i = 0; i < orders.size(); ++i)
        for (std::size_t j = i + 1; j < orders.size(); ++j) {
            const auto g = std::gcd(orders[i], orders[j]);
            const auto l = orders[i] / g * orders[j];
            orders[i] = g;
            orders[j] = l;
        }
    std::erase(orders, 1);
    return orders;
}

/// Z^free_rank + (+)_i Z_{torsion[i]} in a single degree.
struct DegreeGroup {
    int free_rank = 0;
    std::vector<std::int64_t> torsion;

    bool is_zero() const noexcept { return free_rank == 0 && torsion.empty(); }

    std::int64_t torsion_order() const
    {
        return std::accumulate(torsion.begin(), torsion.end(), std::int64_t{1},
                               std::multiplies<>());
    }

    std::string describe() const
    {
        if (is_zero())
            return "0";
        std::string out;
        if (free_rank)
            out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
        for (auto t : torsion)
            out += (out.empty() ? "" : "+") + ("Z_" + std::to_string(t));
        return out;
    }

    friend bool operator==(const DegreeGroup&, const DegreeGroup&) = default;
};

inline DegreeGroup free_group(int rank = 1) { return {rank, {}}; }
inline DegreeGroup cyclic_group(std::int64_t order) { return {0, normalize_torsion({order})}; }

/// Degreewise finitely generated abelian groups, nonzero in finitely many degrees.
class GradedAbelianGroup {
public:
    explicit GradedAbelianGroup(int top_degree = 0) : top_degree_(top_degree)
    {
        if (top_degree < 0)
            throw ValidationError("top degree must be nonnegative");
    }

    GradedAbelianGroup(int top_degree, std::initializer_list<std::pair<const int, DegreeGroup>> g)
        : GradedAbelianGroup(top_degree)
    {
        for (const auto& [k, group] : g)
            set(k, group);
    }

    void set(int degree, DegreeGroup g)
    {
        if (degree < 0 || degree > top_degree_)
            throw ValidationError("degree " + std::to_string(degree) + " outside [0, " +
                                  std::to_string(top_degree_) + "]");
        if (g.free_rank < 0)
            throw ValidationError("negative free rank");
        g.torsion = normalize_torsion(std::move(g.torsion));
        if (g.is_zero())
            groups_.erase(degree);
        else
            groups_[degree] = std::move(g);
    }

    DegreeGroup at(int degree) const
    {
        auto it = groups_.find(degree);
        return it == groups_.end() ? DegreeGroup{} : it->second;
    }

    int top_degree() const noexcept { return top_degree_; }

    /// Nonzero degrees in increasing order.
    const std::map<int, DegreeGroup>& nonzero() const noexcept { return groups_; }

    long euler_characteristic() const
    {
        long chi = 0;
        for (const auto& [k, g] : groups_)
            chi += (k % 2 ? -1 : 1) * g.free_rank;
        return chi;
    }

    std::string describe() const
    {
        std::string out = "{";
        bool first = true;
        for (const auto& [k, g] : groups_) {
            out += (first ? "" : ", ") + std::to_string(k) + ": " + g.describe();
            first = false;
        }
        return out + "}";
    }

    friend bool operator==(const GradedAbelianGroup&, const GradedAbelianGroup&) = default;

private:
    std::map<int, DegreeGroup> groups_;
    int top_degree_;
};

/**
 * Integral cohomology ring generated in degree gen_degree up to torsion-free
 * ambiguity: a^k = c_k * g_k, where g_k generates H^{k * gen_degree}.
 * divisibility holds c_1..c_m.
 */
class DividedRing {
public:
    DividedRing(int gen_degree, std::vector<std::int64_t> divisibility)
        : gen_degree_(gen_degree), divisibility_(std::move(divisibility))
    {
        if (gen_degree_ < 2 || gen_degree_ % 2)
            throw ValidationError("generator degree must be even and >= 2");
        if (divisibility_.empty() || divisibility_.front() != 1)
            throw ValidationError("c_1 must be 1: a generates its degree");
        for (std::size_t k = 0; k + 1 < divisibility_.size(); ++k) {
            if (divisibility_[k] <= 0 || divisibility_[k + 1] % divisibility_[k] != 0)
                throw ValidationError("divisibility must satisfy c_k | c_{k+1}");
        }
    }

    int gen_degree() const noexcept { return gen_degree_; }
    int top_power() const noexcept { return static_cast<int>(divisibility_.size()); }

    /// c_k for 0 <= k <= top_power, with c_0 = 1.
    std::int64_t c(int k) const
    {
        if (k < 0 || k > top_power())
            throw ValidationError("power " + std::to_string(k) + " out of range");
        return k == 0 ? 1 : divisibility_[k - 1];
    }

    const std::vector<std::int64_t>& divisibility() const noexcept { return divisibility_; }

    friend bool operator==(const DividedRing&, const DividedRing&) = default;

private:
    int gen_degree_;
    std::vector<std::int64_t> divisibility_;
};

struct RingCohomology {
    GradedAbelianGroup groups;
    DividedRing ring;
};

// --- closed forms -----------------------------------------------------------

inline GradedAbelianGroup sphere_cohomology(int dim)
{
    if (dim < 1)
        throw DomainError("sphere dimension must be positive");
    return GradedAbelianGroup(dim, {{0, free_group()}, {dim, free_group()}});
}

/// H^*(G2): Z in 0, 3, 11, 14 and Z_2 in 6, 9.
inline GradedAbelianGroup g2_cohomology()
{
    return GradedAbelianGroup(14, {{0, free_group()},
                                   {3, free_group()},
                                   {6, cyclic_group(2)},
                                   {9, cyclic_group(2)},
                                   {11, free_group()},
                                   {14, free_group()}});
}

/// H^*(T^1 S^{2n}) = H^*(SO(2n+1)/SO(2n-1)). n = 1 (RP^3) only with allow_n1.
inline GradedAbelianGroup unit_tangent_cohomology(int n, bool allow_n1 = false)
{
    if (n < 2 && !(allow_n1 && n == 1))
        throw DomainError("unit tangent closed form needs n >= 2, got " + std::to_string(n));
    return GradedAbelianGroup(
        4 * n - 1, {{0, free_group()}, {2 * n, cyclic_group(2)}, {4 * n - 1, free_group()}});
}

namespace detail {

inline RingCohomology twice_generator_ring(int n, int gen_degree)
{
    const int m = 2 * n - 1;
    GradedAbelianGroup h(m * gen_degree);
    std::vector<std::int64_t> c;
    for (int k = 0; k <= m; ++k)
        h.set(k * gen_degree, free_group());
    for (int k = 1; k <= m; ++k)
        c.push_back(k < n ? 1 : 2);
    return {std::move(h), DividedRing(gen_degree, std::move(c))};
}

}  // namespace detail

/**
 * Common cohomology ring of dSO(2)\SO(2n+1)/SO(2n-1) and the Grassmannian
 * SO(2n+1)/(SO(2n-1) x SO(2)): Z[a]-groups of CP^{2n-1} with a^n twice a generator.
 */
inline RingCohomology circle_quotient_ring(int n)
{
    if (n < 2)
        throw DomainError("circle quotient needs n >= 2, got " + std::to_string(n));
    return detail::twice_generator_ring(n, 2);
}

/// dSU(2)\SO(4n+1)/SO(4n-1): groups of HP^{2n-1}, a^n twice a generator.
inline RingCohomology quaternionic_quotient_ring(int n)
{
    if (n < 2)
        throw DomainError("quaternionic quotient needs n >= 2, got " + std::to_string(n));
    return detail::twice_generator_ring(n, 4);
}

/// Integral homology from cohomology of a closed oriented manifold:
/// free ranks agree, torsion of H_k is the torsion of H^{k+1}.
inline GradedAbelianGroup poincare_dual(const GradedAbelianGroup& h)
{
    const int top = h.top_degree();
    for (int k = 0; k <= top; ++k)
        if (h.at(k).free_rank != h.at(top - k).free_rank)
            throw NotAManifoldError("free rank of degree " + std::to_string(k) +
                                    " differs from degree " + std::to_string(top - k));
    GradedAbelianGroup out(top);
    for (int k = 0; k <= top; ++k)
        out.set(k, {h.at(k).free_rank, k + 1 <= top ? h.at(k + 1).torsion
                                                    : std::vector<std::int64_t>{}});
    return out;
}

/// Inverse of poincare_dual's torsion shift.
inline GradedAbelianGroup cohomology_from_homology(const GradedAbelianGroup& h)
{
    GradedAbelianGroup out(h.top_degree());
    for (int k = 0; k <= h.top_degree(); ++k)
        out.set(k, {h.at(k).free_rank, k >= 1 ? h.at(k - 1).torsion
                                              : std::vector<std::int64_t>{}});
    return out;
}

struct G2SU2Groups {
    GradedAbelianGroup cohomology;
    GradedAbelianGroup homology;
};

/// The rational 11-sphere G2//SU(2) (index 3 left, index 4 right).
inline G2SU2Groups g2_su2_cohomology()
{
    GradedAbelianGroup h(11, {{0, free_group()}, {6, cyclic_group(2)}, {11, free_group()}});
    auto homology = poincare_dual(h);
    return {std::move(h), std::move(homology)};
}

// --- Gysin sequence ---------------------------------------------------------

/// Sphere bundle S^r -> total -> base with Euler class euler_coeff * (generator of H^{r+1}).
struct FibrationSpec {
    int fiber_dim = 1;
    std::int64_t euler_coeff = 0;
    GradedAbelianGroup base;
    GradedAbelianGroup total;
    std::optional<DividedRing> base_ring;  // cup products in positive degrees
};

struct GysinResult {
    bool pass = true;
    std::optional<int> failing_degree;
    std::string diagnostics;
};

namespace detail {

inline void require_supported(const GradedAbelianGroup& g, const char* which)
{
    for (const auto& [k, d] : g.nonzero())
        if (d.free_rank > 1 || d.torsion.size() > 1)
            throw UnsupportedShapeError(std::string(which) + " degree " + std::to_string(k) +
                                        " is " + d.describe() +
                                        "; need free rank <= 1 and cyclic torsion");
}

/// Integer by which cup with e acts on free parts H^j -> H^{j+r+1}.
inline std::int64_t cup_multiplier(const FibrationSpec& spec, int j)
{
    const int r = spec.fiber_dim;
    const auto src = spec.base.at(j);
    const auto tgt = spec.base.at(j + r + 1);
    if (spec.euler_coeff == 0 || src.is_zero() || tgt.is_zero())
        return 0;
    if (!tgt.torsion.empty())
        throw UnsupportedShapeError("cup with e into torsion of degree " +
                                    std::to_string(j + r + 1) + " is not determined");
    if (!src.torsion.empty() && src.free_rank == 0)
        return 0;  // torsion into a free group
    if (!src.torsion.empty())
        throw UnsupportedShapeError("cup with e on mixed group in degree " + std::to_string(j));
    if (j == 0)
        return spec.euler_coeff;
    const auto& ring = spec.base_ring;
    if (ring && ring->gen_degree() == r + 1 && j % ring->gen_degree() == 0) {
        const int k = j / ring->gen_degree();
        if (k + 1 <= ring->top_power())
            return spec.euler_coeff * (ring->c(k + 1) / ring->c(k));
    }
    throw UnsupportedShapeError("cup with e from degree " + std::to_string(j) +
                                " is not determined by the base data");
}

struct MapPieces {
    DegreeGroup kernel;
    DegreeGroup cokernel;
};

/// Kernel and cokernel of a map acting by `mult` on free parts, zero on torsion.
inline MapPieces split_map(const DegreeGroup& src, const DegreeGroup& tgt, std::int64_t mult)
{
    MapPieces p;
    const bool hits = src.free_rank && tgt.free_rank && mult != 0;
    p.kernel = {hits ? 0 : src.free_rank, src.torsion};
    p.cokernel = {hits ? 0 : tgt.free_rank, tgt.torsion};
    if (hits)
        p.cokernel.torsion.push_back(std::llabs(mult));
    p.cokernel.torsion = normalize_torsion(std::move(p.cokernel.torsion));
    return p;
}

}  // namespace detail

/**
 * Checks that `total` fits the Gysin sequence
 *   H^{k-r-1}(B) --e--> H^k(B) -> H^k(E) -> H^{k-r}(B) --e--> H^{k+1}(B)
 * in every degree: H^k(E) must be an extension of ker by coker. When the
 * kernel is free the extension splits and is compared exactly; otherwise
 * free ranks and torsion orders must be compatible.
 */
inline GysinResult check_gysin_consistency(const FibrationSpec& spec)
{
    const int r = spec.fiber_dim;
    if (r < 1)
        throw ValidationError("fiber dimension must be >= 1");
    detail::require_supported(spec.base, "base");
    detail::require_supported(spec.total, "total space");
    if (spec.euler_coeff != 0 && spec.base.at(r + 1).free_rank != 1)
        throw ValidationError("Euler coefficient needs H^" + std::to_string(r + 1) +
                              "(base) of free rank 1");

    const int last = std::max(spec.total.top_degree(), spec.base.top_degree() + r) + 1;
    for (int k = 0; k <= last; ++k) {
        const auto in = detail::split_map(spec.base.at(k - r - 1), spec.base.at(k),
                                          k - r - 1 >= 0 ? detail::cup_multiplier(spec, k - r - 1) : 0);
        const auto out = detail::split_map(spec.base.at(k - r), spec.base.at(k + 1),
                                           k - r >= 0 ? detail::cup_multiplier(spec, k - r) : 0);
        const DegreeGroup& coker = in.cokernel;
        const DegreeGroup& ker = out.kernel;
        const DegreeGroup e = spec.total.at(k);

        bool ok = e.free_rank == coker.free_rank + ker.free_rank;
        if (ok) {
            if (ker.torsion.empty()) {
                ok = e.torsion == coker.torsion;
            } else if (coker.free_rank == 0) {
                ok = e.torsion_order() == coker.torsion_order() * ker.torsion_order();
            } else {
                const auto bound = coker.torsion_order() * ker.torsion_order();
                ok = e.torsion_order() % coker.torsion_order() == 0 &&
                     bound % e.torsion_order() == 0;
            }
        }
        if (!ok) {
            return {false, k,
                    "H^" + std::to_string(k) + "(E) = " + e.describe() +
                        " is not an extension of " + ker.describe() + " by " + coker.describe()};
        }
    }
    return {true, std::nullopt, "exact in degrees 0.." + std::to_string(last)};
}

// --- text records -----------------------------------------------------------

/// `top_degree: N`, then `degree: free_rank, [t1, t2]` per nonzero degree;
/// rings add `gen_degree: d` and `divisibility: [c1, ..., cm]`.
inline std::string to_text(const GradedAbelianGroup& g, const DividedRing* ring = nullptr)
{
    std::ostringstream out;
    out << "top_degree: " << g.top_degree() << '\n';
    for (const auto& [k, d] : g.nonzero()) {
        out << k << ": " << d.free_rank << ", [";
        for (std::size_t i = 0; i < d.torsion.size(); ++i)
            out << (i ? ", " : "") << d.torsion[i];
        out << "]\n";
    }
    if (ring) {
        out << "gen_degree: " << ring->gen_degree() << '\n' << "divisibility: [";
        const auto& c = ring->divisibility();
        for (std::size_t i = 0; i < c.size(); ++i)
            out << (i ? ", " : "") << c[i];
        out << "]\n";
    }
    return out.str();
}

struct GradedRecord {
    GradedAbelianGroup groups;
    std::optional<DividedRing> ring;
};

namespace detail {

inline std::vector<std::int64_t> parse_int_list(const std::string& s, std::size_t line)
{
    const auto open = s.find('[');
    const auto close = s.find(']');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError(line, "expected [ ... ]");
    if (s.find_first_not_of(" \t", close + 1) != std::string::npos)
        throw ParseError(line, "trailing text after ]");
    std::vector<std::int64_t> out;
    std::string body = s.substr(open + 1, close - open - 1);
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        std::int64_t v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size())
            throw ParseError(line, "bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

inline int parse_int(const std::string& s, std::size_t line)
{
    std::size_t used = 0;
    int v = 0;
    std::string t = s;
    t.erase(0, t.find_first_not_of(" \t"));
    t.erase(t.find_last_not_of(" \t") + 1);
    try {
        v = std::stoi(t, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (t.empty() || used != t.size())
        throw ParseError(line, "bad integer '" + t + "'");
    return v;
}

}  // namespace detail

inline GradedRecord parse_graded_text(std::istream& in)
{
    std::optional<int> top;
    std::optional<int> gen_degree;
    std::optional<std::vector<std::int64_t>> divisibility;
    std::vector<std::tuple<std::size_t, int, DegreeGroup>> entries;

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        if (raw.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        const auto colon = raw.find(':');
        if (colon == std::string::npos)
            throw ParseError(lineno, "expected 'key: value'");
        std::string key = raw.substr(0, colon);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        const std::string value = raw.substr(colon + 1);

        if (key == "top_degree") {
            top = detail::parse_int(value, lineno);
        } else if (key == "gen_degree") {
            gen_degree = detail::parse_int(value, lineno);
        } else if (key == "divisibility") {
            divisibility = detail::parse_int_list(value, lineno);
        } else {
            const int degree = detail::parse_int(key, lineno);
            const auto comma = value.find(',');
            if (comma == std::string::npos)
                throw ParseError(lineno, "expected 'free_rank, [torsion]'");
            DegreeGroup d{detail::parse_int(value.substr(0, comma), lineno),
                          detail::parse_int_list(value.substr(comma + 1), lineno)};
            entries.emplace_back(lineno, degree, std::move(d));
        }
    }
    if (!top)
        throw ParseError(lineno, "missing top_degree record");
    if (divisibility.has_value() != gen_degree.has_value())
        throw ParseError(lineno, "gen_degree and divisibility must appear together");

    GradedRecord rec{GradedAbelianGroup(*top), std::nullopt};
    for (auto& [line, degree, d] : entries) {
        try {
            rec.groups.set(degree, std::move(d));
        } catch (const ValidationError& e) {
            throw ParseError(line, e.what());
        }
    }
    if (gen_degree) {
        try {
            rec.ring.emplace(*gen_degree, *divisibility);
        } catch (const ValidationError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return rec;
}

}  // namespace biquot
