#pragma once

#include "jetkit/jets.hpp"
#include "jetkit/quasicolimit.hpp"
#include "jetkit/taylor.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// The three operator models of a jet at a point x of M = R^p, acting on
// microshapes of M and returning microshapes of E = R^{p+q}:
//
//   first  tangent vectors over D  ->  tangent vectors of J^{n-1} over D
//   dpow   elements over Dpow(n)   ->  elements over Dpow(n)
//   dn     elements over Dn(n)     ->  elements over Dn(n)
namespace jetkit {

enum class Rep { first, dpow, dn };

[[nodiscard]] std::string to_string(Rep rep);
// Throws SchemaError for unknown names.
[[nodiscard]] Rep parse_rep(std::string_view text);

// A black-box operator based at `point`.
struct Operator {
    Rep rep;
    int p;
    int q;
    int order;
    Vector point;
    std::function<TaylorElement(const TaylorElement&)> fn;

    [[nodiscard]] SmallObject input_object() const;
    [[nodiscard]] SmallObject output_object() const;
    [[nodiscard]] int output_dim() const;
    // Checks the input shape and base point, then the output shape.
    [[nodiscard]] TaylorElement operator()(const TaylorElement& g) const;
};

// Closed forms on coordinates. Each requires g.base() == j.x().
[[nodiscard]] TaylorElement apply_first(const JetCoord& j, const TaylorElement& tangent);
[[nodiscard]] TaylorElement apply_dpow(const JetCoord& j, const TaylorElement& g);
[[nodiscard]] TaylorElement apply_dn(const JetCoord& j, const TaylorElement& g);

// The first-approach jet prolonged to Dpow(n) by peeling one axis at a time:
// every stage applies a lower-order jet whose coordinates live in the Weil
// algebra of Dpow(n).
[[nodiscard]] TaylorElement apply_first_iterated(const JetCoord& j, const TaylorElement& g);

// apply_dn, after checking that it agrees with apply_dpow along d = d_1+..+d_n.
// Throws InvariantError otherwise.
[[nodiscard]] TaylorElement psi(const JetCoord& j, const TaylorElement& g);

[[nodiscard]] Operator theta(Rep rep, const JetCoord& j);

// Operator-level conversions.
// first -> dpow through the peeling recursion on the reconstructed jet.
[[nodiscard]] Operator phi_operator(const Operator& first);
// dpow -> dn: evaluate on the pullback along the sum map and descend.
[[nodiscard]] Operator psi_operator(const Operator& dpow);
// The order-(n-1) operator induced by an order-n one.
[[nodiscard]] Operator project(const Operator& op);

// Probe inputs that determine an operator, and reconstruction from them.
[[nodiscard]] std::vector<TaylorElement> canonical_probes(Rep rep, int p, int q, int order, std::span<const Rational> x);
[[nodiscard]] JetCoord reconstruct(const Operator& op);

// Input/output pairs of an operator on its canonical probes.
struct OperatorTable {
    Rep rep;
    int p;
    int q;
    int order;
    Vector point;
    std::vector<std::pair<TaylorElement, TaylorElement>> entries;
};

[[nodiscard]] OperatorTable tabulate(const Operator& op);
// Looks inputs up in the table; any other input throws PreconditionError.
[[nodiscard]] Operator from_table(OperatorTable table);

// Symmetric forms at a point (x, u) of E: microshapes of M at x to tangent
// vectors of E at (x, u), vertical in the x direction.
struct FormOperator {
    Rep rep;  // dpow or dn
    int p;
    int q;
    int degree;
    Vector point;  // (x, u)
    std::function<TaylorElement(const TaylorElement&)> fn;

    [[nodiscard]] SmallObject input_object() const;
    [[nodiscard]] TaylorElement operator()(const TaylorElement& g) const;
};

// Closed form on coordinates; the result is over D with base (x, u).
[[nodiscard]] TaylorElement apply_form(Rep rep, const SymFormCoord& s, const TaylorElement& g);
[[nodiscard]] FormOperator theta_form(Rep rep, const SymFormCoord& s);
[[nodiscard]] std::vector<TaylorElement> canonical_form_probes(Rep rep, int p, int degree, std::span<const Rational> x);
[[nodiscard]] SymFormCoord reconstruct(const FormOperator& form);

// A dpow form as a dn form: evaluate on the pullback along the sum map.
[[nodiscard]] FormOperator restrict_to_line(const FormOperator& cube);

// The affine family acting on the outputs of rep at the given order.
[[nodiscard]] AffineFamily output_family(Rep rep, int order);

// Pointwise strong difference of two operators with the same projection,
// and translation of an operator by a form.
[[nodiscard]] FormOperator operator_minus(const Operator& plus, const Operator& minus);
[[nodiscard]] Operator operator_plus(const FormOperator& form, const Operator& op);

}  // namespace jetkit
