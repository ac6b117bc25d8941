#pragma once

#include "jetkit/weil.hpp"

#include <vector>

// The concrete morphisms between small objects used by the jet machinery.
// Axis arguments are 1-based.
namespace jetkit::maps {

// Dpow(n) -> Dn(n), d = d_1 + ... + d_n.
[[nodiscard]] ObjectMap sum(int n);

// Dpow(n) -> Dpow(n), d_i -> d_sigma(i) (sigma 0-based).
[[nodiscard]] ObjectMap permutation(const std::vector<int>& sigma);

// Dpow(n+1) -> Dpow(n), forgets axis i of the source.
[[nodiscard]] ObjectMap drop_axis(int n_plus_1, int i);

// Dpow(n-1) -> Dpow(n), inserts 0 at axis i of the target.
[[nodiscard]] ObjectMap insert_zero(int n, int i);

// Dpow(n) -> Dpow(n-1), (d_1..d_n) -> (d_1, .., d_{n-2}, d_{n-1} d_n).
[[nodiscard]] ObjectMap contract_last_pair(int n);

// Dpow(n) -> D, d -> d_1 ... d_n.
[[nodiscard]] ObjectMap full_product(int n);

// Dpow(n) -> Dpow(m) sending axis block j to the product of its members:
// the j-th target variable is the product of d_sigma(a) over the j-th
// consecutive run of `blocks[j]` positions. blocks sum to n.
[[nodiscard]] ObjectMap block_products(const std::vector<int>& blocks, const std::vector<int>& sigma);

// Product(Dpow(n), Dn(m)) -> Dpow(n), d_i -> e d_i, other axes unchanged.
[[nodiscard]] ObjectMap scale_axis_by_param(int n, int m, int i);

// Product(base, Dn(m)) -> base for a one-variable base, d -> d e^power.
[[nodiscard]] ObjectMap scale_line_by_param(const SmallObject& line, int m, int power);

// Dn(n) -> Dn(l), d -> d^k. Requires k (l + 1) >= n + 1.
[[nodiscard]] ObjectMap line_power(int n, int k, int l);

// Inclusions of the point.
[[nodiscard]] ObjectMap from_point(const SmallObject& target);

// Inclusions obj -> Wedge(obj, other) and other -> Wedge(obj, other).
[[nodiscard]] ObjectMap wedge_left(const SmallObject& wedge);
[[nodiscard]] ObjectMap wedge_right(const SmallObject& wedge);

// Variable-wise inclusion of objects with equal variable count,
// e.g. DHole(n) -> Dpow(n) or Dn(n) -> Dn(n+1).
[[nodiscard]] ObjectMap same_variables(const SmallObject& source, const SmallObject& target);

}  // namespace jetkit::maps
