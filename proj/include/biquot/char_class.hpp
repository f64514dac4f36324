#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "biquot/cohomology.hpp"
#include "biquot/error.hpp"
#include "biquot/report.hpp"

namespace biquot {

// --- stable bundle relations ------------------------------------------------

/// Oriented rank-2 bundle with Euler class euler_coeff * a. p1 = e^2.
struct PlaneBundle {
    std::string name;
    std::int64_t euler_coeff = 0;
};

struct BundleTerm {
    PlaneBundle bundle;
    std::int64_t multiplicity = 1;
};

/// First Pontrjagin class of a Whitney sum of plane bundles, in units of a^2.
inline std::int64_t p1_of_sum(std::span<const BundleTerm> terms)
{
    std::int64_t p1 = 0;
    for (const auto& t : terms)
        p1 += t.multiplicity * t.bundle.euler_coeff * t.bundle.euler_coeff;
    return p1;
}

/// One side of a stable isomorphism: optional tangent bundle, plane bundles, trivial summand.
struct BundleSide {
    std::optional<int> tangent_rank;
    std::vector<BundleTerm> planes;
    int trivial_rank = 0;

    int rank() const
    {
        int r = tangent_rank.value_or(0) + trivial_rank;
        for (const auto& t : planes)
            r += 2 * static_cast<int>(t.multiplicity);
        return r;
    }

    std::string describe(const std::string& tangent_name) const
    {
        std::string out;
        auto append = [&](const std::string& s) { out += (out.empty() ? "" : " + ") + s; };
        if (tangent_rank)
            append(tangent_name);
        for (const auto& t : planes)
            append((t.multiplicity == 1 ? "" : std::to_string(t.multiplicity)) + t.bundle.name);
        if (trivial_rank)
            append("eps^" + std::to_string(trivial_rank));
        return out.empty() ? "0" : out;
    }
};

/// left = right as stable vector bundles, with exactly one tangent unknown.
struct StableBundleRelation {
    std::string tangent_name;
    BundleSide left;
    BundleSide right;

    std::string describe() const
    {
        return left.describe(tangent_name) + " = " + right.describe(tangent_name);
    }
};

/// p1 of the tangent unknown, in units of a^2.
inline std::int64_t solve_p1_tangent(const StableBundleRelation& rel)
{
    if (rel.left.tangent_rank.has_value() == rel.right.tangent_rank.has_value())
        throw ValidationError("relation must contain exactly one tangent bundle");
    if (rel.left.rank() != rel.right.rank())
        throw ValidationError("rank imbalance: " + std::to_string(rel.left.rank()) + " vs " +
                              std::to_string(rel.right.rank()));
    const BundleSide& own = rel.left.tangent_rank ? rel.left : rel.right;
    const BundleSide& other = rel.left.tangent_rank ? rel.right : rel.left;
    return p1_of_sum(other.planes) - p1_of_sum(own.planes);
}

/// T M + eps^4 = 2n gamma_M + eps^2 for M = dSO(2)\SO(2n+1)/SO(2n-1); e(gamma_M) = a_M.
inline StableBundleRelation circle_quotient_relation(int n)
{
    if (n < 2)
        throw DomainError("relation defined for n >= 2");
    return {"TM", {4 * n - 2, {}, 4}, {std::nullopt, {{{"gamma_M", 1}, 2 * n}}, 2}};
}

/// (2n+1) gamma_N = T N + eta_N + eps^2 for the Grassmannian N; e(eta_N) = 2 a_N.
inline StableBundleRelation grassmannian_relation(int n)
{
    if (n < 2)
        throw DomainError("relation defined for n >= 2");
    return {"TN", {std::nullopt, {{{"gamma_N", 1}, 2 * n + 1}}, 0},
            {4 * n - 2, {{{"eta_N", 2}, 1}}, 2}};
}

/// Order of H^4 / <p1> where p1 = p1_coeff * a^2 = p1_coeff * c_2 * g_2.
/// std::nullopt when p1 vanishes and the quotient is infinite.
inline std::optional<std::int64_t> quotient_order(std::int64_t p1_coeff, const DividedRing& ring)
{
    if (ring.gen_degree() != 2 || ring.top_power() < 2)
        throw ValidationError("quotient order needs a degree-2 generator with a^2 != 0");
    if (p1_coeff == 0)
        return std::nullopt;
    return std::llabs(p1_coeff) * ring.c(2);
}

/// Same, after checking that H^4 is infinite cyclic so p1 lives in Z * g_2.
inline std::optional<std::int64_t> quotient_order(std::int64_t p1_coeff, const RingCohomology& h)
{
    if (h.groups.at(4) != free_group())
        throw ValidationError("H^4 must be infinite cyclic, got " + h.groups.at(4).describe());
    return quotient_order(p1_coeff, h.ring);
}

struct CpPairVerdict {
    int n = 0;
    std::int64_t p1_biquotient = 0;   // p1(TM) / a_M^2
    std::int64_t p1_grassmannian = 0; // p1(TN) / a_N^2
    std::int64_t c2 = 0;
    std::int64_t order_biquotient = 0;
    std::int64_t order_grassmannian = 0;
    bool not_homeomorphic = false;
    std::vector<std::string> trace;

    ReportRecord to_record() const
    {
        ReportRecord rec{"dSO(2)\\SO(" + std::to_string(2 * n + 1) + ")/SO(" +
                             std::to_string(2 * n - 1) + ") vs Grassmannian (n=" +
                             std::to_string(n) + ")",
                         {}};
        rec.add("p1(TM)", p1_biquotient == 2 * n, std::to_string(p1_biquotient) + " a_M^2");
        rec.add("p1(TN)", p1_grassmannian == 2 * n - 3, std::to_string(p1_grassmannian) + " a_N^2");
        rec.add("orders", order_biquotient != order_grassmannian,
                std::to_string(order_biquotient) + " vs " + std::to_string(order_grassmannian));
        rec.add("verdict", not_homeomorphic, not_homeomorphic ? "not homeomorphic" : "undecided");
        return rec;
    }
};

/// Compares |H^4 / <p1>| for the circle biquotient M and the Grassmannian N.
inline CpPairVerdict distinguish_cp_pair(int n)
{
    if (n < 2)
        throw DomainError("n must be >= 2, got " + std::to_string(n));
    const auto ring = circle_quotient_ring(n);
    const auto rel_m = circle_quotient_relation(n);
    const auto rel_n = grassmannian_relation(n);

    CpPairVerdict v;
    v.n = n;
    v.c2 = ring.ring.c(2);
    v.p1_biquotient = solve_p1_tangent(rel_m);
    v.p1_grassmannian = solve_p1_tangent(rel_n);
    const auto om = quotient_order(v.p1_biquotient, ring);
    const auto on = quotient_order(v.p1_grassmannian, ring);
    v.order_biquotient = om.value_or(0);
    v.order_grassmannian = on.value_or(0);
    v.not_homeomorphic = om != on;

    v.trace = {
        "relation M: " + rel_m.describe(),
        "p1(TM) = " + std::to_string(v.p1_biquotient) + " a_M^2",
        "relation N: " + rel_n.describe(),
        "p1(TN) = " + std::to_string(v.p1_grassmannian) + " a_N^2",
        "a^2 = " + std::to_string(v.c2) + " g_2",
        "|H^4(M)/<p1>| = " + (om ? std::to_string(*om) : std::string("inf")),
        "|H^4(N)/<p1>| = " + (on ? std::to_string(*on) : std::string("inf")),
    };
    return v;
}

// --- circle representations -------------------------------------------------

/// weight -> multiplicity. Weight 0 is a real line, weight w >= 1 a rotation plane.
struct WeightDecomposition {
    std::map<int, int> multiplicities;
    double residual = 0.0;

    int rank() const
    {
        int r = 0;
        for (const auto& [w, m] : multiplicities)
            r += (w == 0 ? 1 : 2) * m;
        return r;
    }

    friend bool operator==(const WeightDecomposition& a, const WeightDecomposition& b)
    {
        return a.multiplicities == b.multiplicities;
    }
};

inline constexpr double kWeightTolerance = 1e-9;

/**
 * Recovers integer multiplicities from the character t -> trace rho(e^{it})
 * sampled at 2 pi j / samples. m_0 is the mean of chi and m_w the mean of
 * chi(t) cos(wt); the rounded multiplicities must reproduce every sample.
 */
template <class Character>
WeightDecomposition weight_decompose(Character&& character, int rank, int max_weight, int samples)
{
    if (max_weight < 0)
        throw ValidationError("max_weight must be nonnegative");
    if (samples < 4 * max_weight + 1)
        throw ValidationError("need at least 4 * max_weight + 1 samples");

    std::vector<double> t(samples), chi(samples);
    for (int j = 0; j < samples; ++j) {
        t[j] = 2.0 * std::numbers::pi * j / samples;
        chi[j] = character(t[j]);
    }

    WeightDecomposition out;
    for (int w = 0; w <= max_weight; ++w) {
        double acc = 0.0;
        for (int j = 0; j < samples; ++j)
            acc += chi[j] * std::cos(w * t[j]);
        const double m = acc / samples;
        const double rounded = std::round(m);
        if (std::abs(m - rounded) > kWeightTolerance || rounded < 0)
            throw DecompositionError("weight " + std::to_string(w) + " multiplicity " +
                                     std::to_string(m) + " is not a nonnegative integer");
        if (rounded > 0)
            out.multiplicities[w] = static_cast<int>(rounded);
    }

    for (int j = 0; j < samples; ++j) {
        double rebuilt = 0.0;
        for (const auto& [w, m] : out.multiplicities)
            rebuilt += w == 0 ? m : 2.0 * m * std::cos(w * t[j]);
        out.residual = std::max(out.residual, std::abs(rebuilt - chi[j]));
    }
    if (out.residual > kWeightTolerance)
        throw DecompositionError("reconstruction residual " + std::to_string(out.residual));
    if (out.rank() != rank)
        throw DecompositionError("multiplicities give rank " + std::to_string(out.rank()) +
                                 ", expected " + std::to_string(rank));
    return out;
}

/// Row-major square matrix, enough for traces and small products.
class SquareMatrix {
public:
    explicit SquareMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int size() const noexcept { return n_; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    double trace() const
    {
        double s = 0.0;
        for (int i = 0; i < n_; ++i)
            s += (*this)(i, i);
        return s;
    }

    std::vector<double> apply(std::span<const double> v) const
    {
        std::vector<double> out(n_, 0.0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    int n_;
    std::vector<double> a_;
};

/// Circle action on the normal frame (e1, e2, e3) of T^1 S^{2n} under the geodesic flow.
inline SquareMatrix normal_bundle_action(double t)
{
    const double c = std::cos(t), s = std::sin(t), r2 = std::numbers::sqrt2;
    SquareMatrix m(3);
    m(0, 0) = c * c;       m(0, 1) = s * s;      m(0, 2) = r2 * s * c;
    m(1, 0) = s * s;       m(1, 1) = c * c;      m(1, 2) = -r2 * s * c;
    m(2, 0) = -r2 * s * c; m(2, 1) = r2 * s * c; m(2, 2) = c * c - s * s;
    return m;
}

/// Geodesic flow on R^{2n+1} x R^{2n+1}: (x, y) -> (cos t x + sin t y, -sin t x + cos t y).
inline SquareMatrix geodesic_flow_action(int n, double t)
{
    const int d = 2 * n + 1;
    SquareMatrix m(2 * d);
    const double c = std::cos(t), s = std::sin(t);
    for (int i = 0; i < d; ++i) {
        m(i, i) = c;
        m(i, d + i) = s;
        m(d + i, i) = -s;
        m(d + i, d + i) = c;
    }
    return m;
}

/// Diagonal Hopf action z(x, y) = (z x, z y), z acting on R^{2n+1} as diag(1, R_t, ..., R_t).
inline SquareMatrix hopf_diagonal_action(int n, double t)
{
    const int d = 2 * n + 1;
    SquareMatrix m(2 * d);
    const double c = std::cos(t), s = std::sin(t);
    for (int block = 0; block < 2; ++block) {
        const int o = block * d;
        m(o, o) = 1.0;
        for (int k = 0; k < n; ++k) {
            const int i = o + 1 + 2 * k;
            m(i, i) = c;
            m(i, i + 1) = -s;
            m(i + 1, i) = s;
            m(i + 1, i + 1) = c;
        }
    }
    return m;
}

/**
 * Matrix of a linear action g on the trivialized normal bundle of T^1 S^{2n}
 * in R^{2n+1} x R^{2n+1}, at the point (x, y): entry (j, i) is
 * <g e_i(x, y), e_j(g(x, y))> with e1 = (x, 0), e2 = (0, y), e3 = (y, x)/sqrt 2.
 */
inline SquareMatrix normal_frame_action(const SquareMatrix& g, std::span<const double> x,
                                        std::span<const double> y)
{
    const auto d = x.size();
    if (y.size() != d || static_cast<std::size_t>(g.size()) != 2 * d)
        throw ValidationError("dimension mismatch in normal frame action");

    auto frame = [d](std::span<const double> px, std::span<const double> py) {
        std::array<std::vector<double>, 3> e;
        for (auto& v : e)
            v.assign(2 * d, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            e[0][i] = px[i];
            e[1][d + i] = py[i];
            e[2][i] = py[i] / std::numbers::sqrt2;
            e[2][d + i] = px[i] / std::numbers::sqrt2;
        }
        return e;
    };

    std::vector<double> p(2 * d);
    std::copy(x.begin(), x.end(), p.begin());
    std::copy(y.begin(), y.end(), p.begin() + d);
    const auto gp = g.apply(p);
    const std::span<const double> gx(gp.data(), d), gy(gp.data() + d, d);

    const auto src = frame(x, y);
    const auto dst = frame(gx, gy);
    SquareMatrix out(3);
    for (int i = 0; i < 3; ++i) {
        const auto moved = g.apply(src[i]);
        for (int j = 0; j < 3; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < 2 * d; ++k)
                dot += moved[k] * dst[j][k];
            out(j, i) = dot;
        }
    }
    return out;
}

}  // namespace biquot
