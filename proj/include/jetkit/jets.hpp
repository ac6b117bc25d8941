#pragma once

#include "jetkit/quasicolimit.hpp"
#include "jetkit/taylor.hpp"

#include <span>
#include <vector>

namespace jetkit {

// Coordinates (x, u, u_I for 1 <= |I| <= order) of an order-n jet of the
// trivial bundle R^{p+q} -> R^p. u_I is indexed by sorted multi-indices and
// stored without multiplicity factors.
class JetCoord {
public:
    JetCoord(int p, int q, int order);

    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] int q() const { return q_; }
    [[nodiscard]] int order() const { return order_; }

    [[nodiscard]] std::span<const Rational> x() const { return x_; }
    [[nodiscard]] std::span<Rational> x() { return x_; }
    [[nodiscard]] std::span<const Rational> u() const { return u_; }
    [[nodiscard]] std::span<Rational> u() { return u_; }

    // u_I as a vector in Q^q; the empty multi-index gives u itself.
    [[nodiscard]] std::span<const Rational> derivative(const MultiIndex& exponents) const;
    [[nodiscard]] std::span<Rational> derivative(const MultiIndex& exponents);

    // Flattened coordinates: x, u, then each degree in the order of
    // symmetric_multi_indices with q values per multi-index.
    [[nodiscard]] Vector tuple() const;
    static JetCoord from_tuple(int p, int q, int order, std::span<const Rational> values);
    [[nodiscard]] static std::size_t tuple_length(int p, int q, int order);
    // Position in tuple() of the first of the q entries u_I; |I| = 0 gives u.
    [[nodiscard]] static std::size_t tuple_position(int p, int q, int order, const MultiIndex& exponents);

    friend bool operator==(const JetCoord&, const JetCoord&) = default;

private:
    [[nodiscard]] std::size_t offset(const MultiIndex& exponents) const;

    int p_;
    int q_;
    int order_;
    Vector x_;
    Vector u_;
    Vector blocks_;  // degrees 1..order concatenated
};

// Coordinates (x, u, s_I for |I| = degree) of a symmetric form.
class SymFormCoord {
public:
    SymFormCoord(int p, int q, int degree);

    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] int q() const { return q_; }
    [[nodiscard]] int degree() const { return degree_; }

    [[nodiscard]] std::span<const Rational> x() const { return x_; }
    [[nodiscard]] std::span<Rational> x() { return x_; }
    [[nodiscard]] std::span<const Rational> u() const { return u_; }
    [[nodiscard]] std::span<Rational> u() { return u_; }
    [[nodiscard]] std::span<const Rational> entry(const MultiIndex& exponents) const;
    [[nodiscard]] std::span<Rational> entry(const MultiIndex& exponents);
    // The m-th multi-index of degree `degree`, in symmetric_multi_indices order.
    [[nodiscard]] std::span<const Rational> entry(std::size_t m) const;
    [[nodiscard]] std::span<Rational> entry(std::size_t m);
    [[nodiscard]] std::size_t entry_count() const;

    [[nodiscard]] Vector tuple() const;
    static SymFormCoord from_tuple(int p, int q, int degree, std::span<const Rational> values);
    [[nodiscard]] static std::size_t tuple_length(int p, int q, int degree);

    friend bool operator==(const SymFormCoord&, const SymFormCoord&) = default;

private:
    int p_;
    int q_;
    int degree_;
    Vector x_;
    Vector u_;
    Vector block_;
};

// Drops the top-degree block.
[[nodiscard]] JetCoord project(const JetCoord& j);
// Appends a zero block of degree order + 1.
[[nodiscard]] JetCoord extend_with_zero(const JetCoord& j);

// Requires project(plus) == project(minus).
[[nodiscard]] SymFormCoord jet_minus(const JetCoord& plus, const JetCoord& minus);
// Requires equal (x, u) and s.degree() == j.order().
[[nodiscard]] JetCoord jet_plus(const SymFormCoord& s, const JetCoord& j);

// Over Dsym(p, order), valued in R^{p+q}: the x part is constant and the u
// part is u + sum_I u_I d^I.
[[nodiscard]] TaylorElement embed(const JetCoord& j);
// Over Dmany(C(p+degree-1, degree)): base (x, u), e_m carries (0, s_m).
[[nodiscard]] TaylorElement embed(const SymFormCoord& s);

// True when every non-unit coefficient of the first p coordinates vanishes.
[[nodiscard]] bool is_degenerate(const TaylorElement& g, int p);

// Inverses of embed; throw PreconditionError outside the image.
[[nodiscard]] JetCoord extract_jet(const TaylorElement& g, int p);
[[nodiscard]] SymFormCoord extract_symform(const TaylorElement& g, int p, int degree);

// The Dsym family matching jets of the given order.
[[nodiscard]] AffineFamily jet_family(int p, int order);

}  // namespace jetkit
