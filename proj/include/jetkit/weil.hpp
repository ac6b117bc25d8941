#pragma once

#include "jetkit/combinatorics.hpp"
#include "jetkit/linalg.hpp"
#include "jetkit/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jetkit {

// A finite infinitesimal object, i.e. a truncated polynomial algebra given
// by a set of variables and a monomial ideal. Immutable, cheap to copy.
class SmallObject {
public:
    enum class Kind {
        D,        // one variable, d^2 = 0
        Dn,       // one variable, d^(n+1) = 0
        Dpow,     // n variables, each d_i^2 = 0
        Dsym,     // p variables, total degree <= n
        DHole,    // Dpow(n) with the product d_1...d_n also zero
        Dmany,    // k variables, every product of two variables zero
        Product,  // monomial survives iff both halves survive
        Wedge,    // as Product, but every mixed monomial is also zero
    };

    static SmallObject d();
    static SmallObject dn(int n);
    static SmallObject dpow(int n);
    static SmallObject dsym(int p, int n);
    static SmallObject dhole(int n);
    static SmallObject dmany(int k);
    static SmallObject product(const SmallObject& a, const SmallObject& b);
    static SmallObject wedge(const SmallObject& a, const SmallObject& b);

    // The one-point object, Dpow(0).
    static SmallObject point() { return dpow(0); }

    // Inverse of name(), e.g. "Wedge(Dsym(2,2),Dmany(4))". Throws SchemaError.
    static SmallObject parse(std::string_view text);

    [[nodiscard]] Kind kind() const;
    [[nodiscard]] const std::string& name() const;
    [[nodiscard]] int num_vars() const;

    // Constructor parameters: n for Dn/Dpow/DHole, k for Dmany, (p, n) for Dsym.
    [[nodiscard]] int first_param() const;
    [[nodiscard]] int second_param() const;
    // Factors of a Product or Wedge.
    [[nodiscard]] const SmallObject& left() const;
    [[nodiscard]] const SmallObject& right() const;

    // Surviving monomials including the unit, in graded order; a wedge lists
    // its left basis followed by the non-unit monomials of its right factor.
    [[nodiscard]] const std::vector<MultiIndex>& basis() const;
    [[nodiscard]] std::size_t dim() const { return basis().size(); }
    [[nodiscard]] std::optional<std::size_t> index_of(const MultiIndex& m) const;

    [[nodiscard]] bool survives(const MultiIndex& m) const;
    // m itself when it survives, nullopt (the zero marker) otherwise.
    [[nodiscard]] std::optional<MultiIndex> reduce(const MultiIndex& m) const;

    // Basis index of basis(i) * basis(j), or nullopt when the product vanishes.
    [[nodiscard]] std::optional<std::size_t> product_index(std::size_t i, std::size_t j) const;

    friend bool operator==(const SmallObject& a, const SmallObject& b) { return a.name() == b.name(); }

    struct Node;

private:
    explicit SmallObject(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// An element of the Weil algebra of an object, as dense basis coefficients.
class WeilElement {
public:
    explicit WeilElement(SmallObject obj);
    WeilElement(SmallObject obj, const Rational& constant);

    static WeilElement variable(const SmallObject& obj, int var);
    static WeilElement monomial(const SmallObject& obj, const MultiIndex& m, const Rational& coeff = 1);

    [[nodiscard]] const SmallObject& object() const { return obj_; }
    [[nodiscard]] const Vector& coeffs() const { return c_; }
    Rational& operator[](std::size_t i) { return c_[i]; }
    const Rational& operator[](std::size_t i) const { return c_[i]; }
    [[nodiscard]] const Rational& constant() const { return c_[0]; }
    [[nodiscard]] bool is_zero() const;

    WeilElement& operator+=(const WeilElement& o);
    WeilElement& operator-=(const WeilElement& o);
    WeilElement& operator*=(const Rational& s);
    friend WeilElement operator+(WeilElement a, const WeilElement& b) { return a += b; }
    friend WeilElement operator-(WeilElement a, const WeilElement& b) { return a -= b; }
    friend WeilElement operator*(WeilElement a, const Rational& s) { return a *= s; }
    friend WeilElement operator*(const Rational& s, WeilElement a) { return a *= s; }
    friend WeilElement operator*(const WeilElement& a, const WeilElement& b);
    friend bool operator==(const WeilElement&, const WeilElement&) = default;

    [[nodiscard]] WeilElement pow(int exponent) const;

private:
    SmallObject obj_;
    Vector c_;
};

// Integer polynomial in the source variables of a map.
using IntPoly = std::map<MultiIndex, long long>;

// A base-point-preserving morphism source -> target, given by one integer
// polynomial without constant term per target variable. The induced map on
// coefficients goes the other way: target elements pull back to the source.
class ObjectMap {
public:
    // Throws PreconditionError unless the substitution kills every monomial
    // that vanishes in the target.
    ObjectMap(SmallObject source, SmallObject target, std::vector<IntPoly> components);

    static ObjectMap identity(const SmallObject& obj);

    [[nodiscard]] const SmallObject& source() const { return source_; }
    [[nodiscard]] const SmallObject& target() const { return target_; }
    [[nodiscard]] const std::vector<IntPoly>& components() const { return components_; }

    // Rows indexed by source basis, columns by target basis: column c holds
    // the source coefficients of target basis monomial c after substitution.
    [[nodiscard]] const Matrix& induced_coeff_map() const { return matrix_; }

    // Image of target variable v as an element of the source algebra.
    [[nodiscard]] WeilElement component_image(int v) const;

private:
    SmallObject source_;
    SmallObject target_;
    std::vector<IntPoly> components_;
    Matrix matrix_;
};

// outer . inner, i.e. first inner then outer on points, so that
// induced(outer . inner) = induced(inner) * induced(outer).
[[nodiscard]] ObjectMap compose(const ObjectMap& outer, const ObjectMap& inner);

// Maps agree as morphisms when their induced matrices agree.
[[nodiscard]] bool same_map(const ObjectMap& a, const ObjectMap& b);

// Polynomial building blocks over `nvars` source variables.
[[nodiscard]] IntPoly var_poly(int nvars, int var, long long coeff = 1);
[[nodiscard]] IntPoly monomial_poly(const MultiIndex& exponents, long long coeff = 1);
[[nodiscard]] IntPoly add(IntPoly a, const IntPoly& b);

}  // namespace jetkit
