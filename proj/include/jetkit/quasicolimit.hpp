#pragma once

#include "jetkit/taylor.hpp"

#include <string>

namespace jetkit {

// A commutative square of small objects
//
//   corner --corner_to_left--> left
//     |                         |
//   corner_to_right        left_to_apex
//     v                         v
//   right ---right_to_apex---> apex
//
// Gluing asks for the element over `apex` with prescribed pullbacks to
// `left` and `right`.
struct PushoutSpec {
    std::string name;
    ObjectMap corner_to_left;
    ObjectMap corner_to_right;
    ObjectMap left_to_apex;
    ObjectMap right_to_apex;

    // Throws PreconditionError if the maps do not fit together or the
    // square does not commute.
    PushoutSpec(std::string name, ObjectMap corner_to_left, ObjectMap corner_to_right, ObjectMap left_to_apex,
                ObjectMap right_to_apex);

    [[nodiscard]] const SmallObject& apex() const { return left_to_apex.target(); }
};

// True when (M (x) W_-) turns the square into a pullback: the stacked pullback
// matrix is injective and its image has the dimension of the fibre product.
[[nodiscard]] bool is_quasi_colimit(const PushoutSpec& spec);

// The unique element over the apex pulling back to `on_left` and
// `on_right`. Throws PreconditionError when the two disagree on the corner
// and InvariantError when the linear system is not uniquely solvable.
[[nodiscard]] TaylorElement solve_pair(const PushoutSpec& spec, const TaylorElement& on_left,
                                       const TaylorElement& on_right);

enum class Family { dpow, dn, dsym };

[[nodiscard]] std::string to_string(Family f);

// The affine structure of one family: elements over `side` that agree below
// the top degree differ by an element over `tangent`.
struct AffineFamily {
    Family family;
    int order;  // top degree: n for Dpow(n), k for Dn(k), k for Dsym(p,k)
    int p;      // variable count of Dsym; 1 otherwise
    SmallObject side;
    SmallObject tangent;
    PushoutSpec minus;  // corner -> side twice; left leg psi, right leg phi
    PushoutSpec plus;   // point -> tangent and point -> side; left leg xi, right leg phi
    ObjectMap xi;       // tangent -> apex
    ObjectMap psi;      // side -> apex, carrying the top degree into the tangent
};

// Dpow(n) with corner DHole(n) and tangent D.
[[nodiscard]] AffineFamily dpow_family(int n);
// Dn(k) with corner Dn(k-1) and tangent D.
[[nodiscard]] AffineFamily dn_family(int k);
// Dsym(p,k) with corner Dsym(p,k-1) and tangent Dmany(C(p+k-1,k)).
[[nodiscard]] AffineFamily dsym_family(int p, int k);

// Strong difference: the tangent-object element by which plus exceeds minus.
[[nodiscard]] TaylorElement strong_minus(const AffineFamily& fam, const TaylorElement& plus,
                                         const TaylorElement& minus);

// Translation of g by the tangent-object element t with the same base point.
[[nodiscard]] TaylorElement strong_plus(const AffineFamily& fam, const TaylorElement& t, const TaylorElement& g);

// Vector-space structure on the fibre of tangent-object elements (over D or
// Dmany(k)) at a common base point: non-unit coefficients add or scale.
[[nodiscard]] TaylorElement fiber_sum(const TaylorElement& s, const TaylorElement& t);
[[nodiscard]] TaylorElement fiber_scale(const Rational& alpha, const TaylorElement& t);

}  // namespace jetkit
