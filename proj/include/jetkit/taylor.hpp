#pragma once

#include "jetkit/weil.hpp"

#include <span>
#include <utility>
#include <vector>

namespace jetkit {

// A point of R^m (x) W_obj: for every basis monomial of `obj` a vector in
// Q^m. The unit monomial carries the base point.
class TaylorElement {
public:
    TaylorElement(SmallObject obj, int target_dim);

    static TaylorElement constant(SmallObject obj, std::span<const Rational> point);
    // One algebra element per target coordinate, all over `obj`.
    static TaylorElement from_components(SmallObject obj, const std::vector<WeilElement>& comps);

    [[nodiscard]] const SmallObject& object() const { return obj_; }
    [[nodiscard]] int target_dim() const { return dim_; }

    [[nodiscard]] std::span<const Rational> coeff(std::size_t basis_index) const;
    [[nodiscard]] std::span<Rational> coeff(std::size_t basis_index);
    [[nodiscard]] std::span<const Rational> coeff_of(const MultiIndex& m) const;
    [[nodiscard]] std::span<Rational> coeff_of(const MultiIndex& m);
    [[nodiscard]] const Rational& at(std::size_t basis_index, int k) const;
    [[nodiscard]] Rational& at(std::size_t basis_index, int k);

    [[nodiscard]] Vector base() const;
    [[nodiscard]] WeilElement component(int k) const;

    // Coefficient-vector arithmetic. Meaningful for the linear operations of
    // the library (gluing, slices of product objects); it is not the affine
    // structure on microshapes.
    TaylorElement& operator+=(const TaylorElement& o);
    TaylorElement& operator-=(const TaylorElement& o);
    TaylorElement& operator*=(const Rational& s);
    friend TaylorElement operator+(TaylorElement a, const TaylorElement& b) { return a += b; }
    friend TaylorElement operator-(TaylorElement a, const TaylorElement& b) { return a -= b; }
    friend TaylorElement operator*(const Rational& s, TaylorElement a) { return a *= s; }

    friend bool operator==(const TaylorElement&, const TaylorElement&) = default;

private:
    SmallObject obj_;
    int dim_;
    Vector c_;  // basis-major: c_[b * dim_ + k]
};

// Polynomial map Q^in -> Q^out with rational coefficients.
class PolyMap {
public:
    using Term = std::pair<Rational, MultiIndex>;
    using Component = std::map<MultiIndex, Rational>;

    // Duplicate monomials are merged and zero terms dropped.
    PolyMap(int in_dim, int out_dim, const std::vector<std::vector<Term>>& terms);

    static PolyMap identity(int dim);
    // (x_1..x_in) -> (x_1..x_keep).
    static PolyMap projection(int in_dim, int keep);

    [[nodiscard]] int in_dim() const { return in_; }
    [[nodiscard]] int out_dim() const { return out_; }
    [[nodiscard]] const std::vector<Component>& components() const { return comps_; }
    [[nodiscard]] int degree() const;

    [[nodiscard]] Vector operator()(std::span<const Rational> x) const;

    // Evaluates each component on algebra-valued inputs.
    [[nodiscard]] std::vector<WeilElement> apply(const std::vector<WeilElement>& x) const;

    // (f . g)(x) = f(g(x)).
    friend PolyMap compose(const PolyMap& f, const PolyMap& g);

private:
    PolyMap(int in_dim, int out_dim, std::vector<Component> comps);
    int in_;
    int out_;
    std::vector<Component> comps_;
};

// F (x) id: apply F to the polynomial representative and truncate.
[[nodiscard]] TaylorElement pushforward(const PolyMap& f, const TaylorElement& g);

// id (x) W_phi: pull an element over phi.target back to phi.source.
[[nodiscard]] TaylorElement reparam(const TaylorElement& g, const ObjectMap& phi);

// The element h over phi.target with reparam(h, phi) == g. Throws
// InvariantError when no such h exists or it is not unique.
[[nodiscard]] TaylorElement descend(const TaylorElement& g, const ObjectMap& phi);
// Multiplies every coefficient by alpha^(exponent of d_i); i is 1-based.
[[nodiscard]] TaylorElement scalar_action(const Rational& alpha, int i, const TaylorElement& g);

// Reparametrization along d -> alpha d on every variable: coefficient of a
// degree-k monomial times alpha^k. For Dn(n) this is the curve t -> g(alpha t).
[[nodiscard]] TaylorElement scale_parameter(const Rational& alpha, const TaylorElement& g);

// g^sigma(d_1..d_n) = g(d_sigma(1), .., d_sigma(n)). sigma is 0-based.
[[nodiscard]] TaylorElement permute(const TaylorElement& g, const std::vector<int>& sigma);

// Dpow(n) -> Dpow(n+1), the new axis i (1-based) carries nothing.
[[nodiscard]] TaylorElement degeneracy_s(int i, const TaylorElement& g);
// Dpow(n) -> Dpow(n-1), setting d_i = 0.
[[nodiscard]] TaylorElement face_d(int i, const TaylorElement& g);

// Requires face_d(i, plus) == face_d(i, minus). Monomials containing d_i
// take plus - minus, the others are copied from plus.
[[nodiscard]] TaylorElement directional_minus(int i, const TaylorElement& plus, const TaylorElement& minus);

// Slices of an element over Product(a, b) along b's basis: slice j holds
// the coefficients of (monomial of a) x (basis j of b).
[[nodiscard]] std::vector<TaylorElement> split_product(const TaylorElement& g);
[[nodiscard]] TaylorElement join_product(const SmallObject& product, const std::vector<TaylorElement>& slices);

}  // namespace jetkit
