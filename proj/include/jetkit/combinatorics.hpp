#pragma once

#include "jetkit/rational.hpp"

#include <cstdint>
#include <vector>

namespace jetkit {

// Exponent vector of a monomial, one entry per variable.
using MultiIndex = std::vector<int>;

// Non-decreasing 1-based variable labels, e.g. exponents (2,1) <-> (1,1,2).
using IndexTuple = std::vector<int>;

struct SetPartition {
    // Blocks ordered by least element; labels inside a block ascending.
    std::vector<std::vector<int>> blocks;
    friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

// Non-decreasing positive parts.
using IntPartition = std::vector<int>;

inline constexpr int kMaxSetPartitionLabels = 12;
inline constexpr int kMaxIntegerPartition = 30;

[[nodiscard]] int total_degree(const MultiIndex& m);

// Graded order used for every monomial basis: lower degree first, then
// lexicographically larger exponent vectors first, so d1 precedes d2.
[[nodiscard]] bool graded_less(const MultiIndex& a, const MultiIndex& b);

// All exponent vectors of total degree exactly n over p variables, in the
// order (n,0,...,0), ..., (0,...,0,n). Their count is C(p+n-1, n).
[[nodiscard]] std::vector<MultiIndex> symmetric_multi_indices(int p, int n);

[[nodiscard]] IndexTuple to_index_tuple(const MultiIndex& exponents);
[[nodiscard]] MultiIndex from_index_tuple(int p, const IndexTuple& tuple);

// Throws PreconditionError when labels are empty, repeated, or more than 12.
[[nodiscard]] std::vector<SetPartition> set_partitions(std::vector<int> labels);

// Ordered by number of parts, then lexicographically. Requires 1 <= k <= 30.
[[nodiscard]] std::vector<IntPartition> integer_partitions(int k);

// Number of set partitions of a sum(parts)-element set whose block sizes
// are exactly `parts`.
[[nodiscard]] Rational set_partitions_of_shape(const IntPartition& parts);

[[nodiscard]] std::uint64_t binomial(int n, int k);

}  // namespace jetkit
