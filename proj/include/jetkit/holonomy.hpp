#pragma once

#include "jetkit/jets.hpp"
#include "jetkit/taylor.hpp"

namespace jetkit {

// A second-order iterated jet: a first-order jet of the first-order jet
// bundle. Coordinates x, u, u_i (the base first jet), u_{;i} (derivative of u
// along the lift) and u_{i1;i2} (derivative of u_{i1} along direction i2),
// with no symmetry imposed. Indices are 0-based in storage.
class IteratedJet2 {
public:
    IteratedJet2(int p, int q);

    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] int q() const { return q_; }

    [[nodiscard]] std::span<const Rational> x() const { return x_; }
    [[nodiscard]] std::span<Rational> x() { return x_; }
    [[nodiscard]] std::span<const Rational> u() const { return u_; }
    [[nodiscard]] std::span<Rational> u() { return u_; }
    [[nodiscard]] std::span<const Rational> base_derivative(int i) const;
    [[nodiscard]] std::span<Rational> base_derivative(int i);
    [[nodiscard]] std::span<const Rational> lifted_derivative(int i) const;
    [[nodiscard]] std::span<Rational> lifted_derivative(int i);
    [[nodiscard]] std::span<const Rational> second(int i1, int i2) const;
    [[nodiscard]] std::span<Rational> second(int i1, int i2);

    friend bool operator==(const IteratedJet2&, const IteratedJet2&) = default;

private:
    int p_;
    int q_;
    Vector x_;
    Vector u_;
    Vector base_;     // p blocks of q
    Vector lifted_;   // p blocks of q
    Vector second_;   // p*p blocks of q, index i1 * p + i2
};

// The image of an ordinary order-2 jet: u_{;i} = u_i, u_{i1;i2} = u_{i1 i2}.
[[nodiscard]] IteratedJet2 from_jet(const JetCoord& j);

// u_{;i} = u_i for every i.
[[nodiscard]] bool is_semiholonomic(const IteratedJet2& j);
// u_{i1;i2} = u_{i2;i1}; on semiholonomic data this is holonomy.
[[nodiscard]] bool is_holonomic(const IteratedJet2& j);

// Evaluation on an element over Dpow(2) by lifting along axis `first_axis`
// (1 or 2) and then applying the lifted first jet along the other axis.
[[nodiscard]] TaylorElement iterated_evaluation(const IteratedJet2& j, const TaylorElement& g, int first_axis);

struct ExchangePair {
    TaylorElement lift_first_axis;   // lift along axis 1, then apply along axis 2
    TaylorElement lift_second_axis;  // lift along axis 2, then apply along axis 1
};

[[nodiscard]] ExchangePair exchange_evaluations(const IteratedJet2& j, const TaylorElement& g);

// Both evaluation orders agree on every probe with y1 = e_a, y2 = e_b and no
// d1 d2 term. On semiholonomic data this holds exactly when j is holonomic.
[[nodiscard]] bool passes_exchange_test(const IteratedJet2& j);

// Tuple of all coordinates in storage order, for serialization.
[[nodiscard]] Vector tuple(const IteratedJet2& j);
[[nodiscard]] IteratedJet2 iterated_from_tuple(int p, int q, std::span<const Rational> values);

}  // namespace jetkit
