#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "biquot/error.hpp"
#include "biquot/lie_catalog.hpp"

namespace biquot {

/**
 * Rational cohomology type of a singly generated space: an odd sphere S^d,
 * or a truncated polynomial ring Q[a]/a^{m+1} with deg a even.
 */
class RationalType {
public:
    enum class Kind { odd_sphere, truncated };

    static RationalType odd_sphere(int dim)
    {
        if (dim < 3 || dim % 2 == 0)
            throw ValidationError("odd sphere dimension must be odd and >= 3, got " +
                                  std::to_string(dim));
        return RationalType(Kind::odd_sphere, dim, 0);
    }

    static RationalType truncated(int generator_degree, int top_power)
    {
        if (generator_degree < 2 || generator_degree % 2 != 0)
            throw ValidationError("generator degree must be even and >= 2, got " +
                                  std::to_string(generator_degree));
        if (top_power < 1)
            throw ValidationError("truncation exponent must be >= 1");
        return RationalType(Kind::truncated, generator_degree, top_power);
    }

    Kind kind() const noexcept { return kind_; }
    bool is_sphere() const noexcept { return kind_ == Kind::odd_sphere; }

    /// Sphere dimension, or deg a for a truncated type.
    int degree() const noexcept { return degree_; }
    int top_power() const noexcept { return top_power_; }

    int dimension() const noexcept { return is_sphere() ? degree_ : top_power_ * degree_; }

    /// Degree of the odd generator y with dy = x^{m+1}.
    int odd_generator_degree() const noexcept
    {
        return is_sphere() ? degree_ : (top_power_ + 1) * degree_ - 1;
    }

    std::string describe() const
    {
        if (is_sphere())
            return "S^" + std::to_string(degree_);
        const char* field = degree_ == 2 ? "CP" : degree_ == 4 ? "HP" : nullptr;
        if (field)
            return std::string(field) + "^" + std::to_string(top_power_);
        return "Q[a]/a^" + std::to_string(top_power_ + 1) + " (deg a = " +
               std::to_string(degree_) + ")";
    }

    friend bool operator==(const RationalType&, const RationalType&) = default;

private:
    RationalType(Kind k, int degree, int m) : kind_(k), degree_(degree), top_power_(m) {}

    Kind kind_;
    int degree_;
    int top_power_;
};

/// Generator of a Sullivan model: its degree and d(gen) = x^{power} (0 means dgen = 0).
struct ModelGenerator {
    char name;
    int degree;
    int differential_power;

    friend bool operator==(const ModelGenerator&, const ModelGenerator&) = default;
};

struct MinimalModel {
    std::vector<ModelGenerator> generators;
};

/// Minimal model of a formal singly generated space.
inline MinimalModel minimal_model(const RationalType& t)
{
    if (t.is_sphere())
        return {{{'x', t.degree(), 0}}};
    return {{{'x', t.degree(), 0}, {'y', t.odd_generator_degree(), t.top_power() + 1}}};
}

namespace detail {

inline void require_odd_entries(const SphereMultiset& s, const char* which)
{
    for (int d : s)
        if (d < 1 || d % 2 == 0)
            throw ValidationError(std::string(which) + " contains non-odd entry " +
                                  std::to_string(d));
}

}  // namespace detail

/**
 * Rational homotopy balance for H -> G -> M: pi_*(G) must equal pi_*(H) with
 * one extra odd class in degree deg y, and for even M one class of pi_*(H)
 * in degree deg a - 1 going to zero. Circle factors of H appear as 1.
 */
inline bool rational_balance(const SphereMultiset& g_spheres, const SphereMultiset& h_spheres,
                             const RationalType& t)
{
    detail::require_odd_entries(g_spheres, "G sphere multiset");
    detail::require_odd_entries(h_spheres, "H sphere multiset");
    const SphereMultiset g = make_multiset(g_spheres);
    const SphereMultiset h = make_multiset(h_spheres);
    const SphereMultiset rhs = multiset_sum(h, {t.odd_generator_degree()});
    if (t.is_sphere())
        return g == rhs;
    return multiset_sum(g, {t.degree() - 1}) == rhs;
}

/// Index of a rank-one subgroup, normalized to be positive.
class EmbeddingIndex {
public:
    explicit EmbeddingIndex(int k) : value_(std::abs(k))
    {
        if (k == 0)
            throw ValidationError("embedding index must be nonzero");
    }

    int value() const noexcept { return value_; }

private:
    int value_;
};

/// Order of pi_3(G/H) = Z_k; 1 is the trivial group.
inline int pi3_of_quotient(EmbeddingIndex k) { return k.value(); }

/// pi_3 degree of g1 g2^{-1} restricted to (j-, j+); 0 marks a trivial side.
inline int fiber_pi3_map(int k_minus, int k_plus)
{
    if (k_minus < 0 || k_plus < 0)
        throw ValidationError("indices must be nonnegative");
    return std::abs(k_minus - k_plus);
}

}  // namespace biquot
