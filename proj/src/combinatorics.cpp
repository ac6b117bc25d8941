#include "jetkit/combinatorics.hpp"

#include "jetkit/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace jetkit {

int total_degree(const MultiIndex& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool graded_less(const MultiIndex& a, const MultiIndex& b)
{
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void fill_multi_indices(int var, int remaining, MultiIndex& current, std::vector<MultiIndex>& out)
{
    const int p = static_cast<int>(current.size());
    if (var == p - 1) {
        current[var] = remaining;
        out.push_back(current);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        current[var] = e;
        fill_multi_indices(var + 1, remaining - e, current, out);
    }
    current[var] = 0;
}

}  // namespace

std::vector<MultiIndex> symmetric_multi_indices(int p, int n)
{
    if (p < 1 || n < 0) throw PreconditionError("symmetric_multi_indices needs p >= 1 and n >= 0");
    std::vector<MultiIndex> out;
    MultiIndex current(static_cast<std::size_t>(p), 0);
    fill_multi_indices(0, n, current, out);
    return out;
}

IndexTuple to_index_tuple(const MultiIndex& exponents)
{
    IndexTuple tuple;
    for (std::size_t v = 0; v < exponents.size(); ++v)
        for (int k = 0; k < exponents[v]; ++k) tuple.push_back(static_cast<int>(v) + 1);
    return tuple;
}

MultiIndex from_index_tuple(int p, const IndexTuple& tuple)
{
    MultiIndex exps(static_cast<std::size_t>(p), 0);
    for (int label : tuple) {
        if (label < 1 || label > p) throw PreconditionError("index label out of range");
        ++exps[static_cast<std::size_t>(label - 1)];
    }
    return exps;
}

std::vector<SetPartition> set_partitions(std::vector<int> labels)
{
    const int size = static_cast<int>(labels.size());
    if (size < 1 || size > kMaxSetPartitionLabels)
        throw PreconditionError("set_partitions supports 1..12 labels");
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw PreconditionError("set_partitions labels must be distinct");

    // Restricted growth strings in lexicographic order: block[0] = 0 and
    // block[i] <= 1 + max(block[0..i-1]).
    std::vector<SetPartition> out;
    std::vector<int> block(static_cast<std::size_t>(size), 0);
    std::vector<int> prefix_max(static_cast<std::size_t>(size), 0);
    while (true) {
        SetPartition part;
        part.blocks.resize(static_cast<std::size_t>(prefix_max.back() + 1));
        for (int i = 0; i < size; ++i) part.blocks[static_cast<std::size_t>(block[i])].push_back(labels[i]);
        out.push_back(std::move(part));

        int i = size - 1;
        while (i > 0 && block[i] == prefix_max[i - 1] + 1) --i;
        if (i == 0) break;
        ++block[i];
        prefix_max[i] = std::max(prefix_max[i - 1], block[i]);
        for (int k = i + 1; k < size; ++k) {
            block[k] = 0;
            prefix_max[k] = prefix_max[i];
        }
    }
    return out;
}

namespace {

void fill_partitions(int remaining, int min_part, IntPartition& current, std::vector<IntPartition>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = min_part; part <= remaining; ++part) {
        current.push_back(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<IntPartition> integer_partitions(int k)
{
    if (k < 1 || k > kMaxIntegerPartition) throw PreconditionError("integer_partitions supports 1..30");
    std::vector<IntPartition> out;
    IntPartition current;
    fill_partitions(k, 1, current, out);
    std::stable_sort(out.begin(), out.end(), [](const IntPartition& a, const IntPartition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

Rational set_partitions_of_shape(const IntPartition& parts)
{
    int k = 0;
    std::map<int, int> multiplicity;
    Rational denominator = 1;
    for (int part : parts) {
        if (part < 1) throw PreconditionError("partition parts must be positive");
        k += part;
        ++multiplicity[part];
        denominator *= factorial(part);
    }
    for (const auto& [part, count] : multiplicity) denominator *= factorial(count);
    return factorial(k) / denominator;
}

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return result;
}

}  // namespace jetkit
