#include "jetkit/maps.hpp"

#include "jetkit/errors.hpp"

#include <numeric>
#include <string>

namespace jetkit::maps {

namespace {

void check_axis(int n, int i)
{
    if (i < 1 || i > n) throw PreconditionError("axis " + std::to_string(i) + " out of range 1.." + std::to_string(n));
}

}  // namespace

ObjectMap sum(int n)
{
    IntPoly poly;
    for (int i = 0; i < n; ++i) poly = add(poly, var_poly(n, i));
    return ObjectMap(SmallObject::dpow(n), SmallObject::dn(n), {poly});
}

ObjectMap permutation(const std::vector<int>& sigma)
{
    const int n = static_cast<int>(sigma.size());
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::vector<IntPoly> comps;
    for (int target = 0; target < n; ++target) {
        const int s = sigma[static_cast<std::size_t>(target)];
        if (s < 0 || s >= n || seen[static_cast<std::size_t>(s)]++) throw PreconditionError("not a permutation");
        comps.push_back(var_poly(n, s));
    }
    return ObjectMap(SmallObject::dpow(n), SmallObject::dpow(n), std::move(comps));
}

ObjectMap drop_axis(int n_plus_1, int i)
{
    check_axis(n_plus_1, i);
    std::vector<IntPoly> comps;
    for (int v = 0; v < n_plus_1; ++v)
        if (v != i - 1) comps.push_back(var_poly(n_plus_1, v));
    return ObjectMap(SmallObject::dpow(n_plus_1), SmallObject::dpow(n_plus_1 - 1), std::move(comps));
}

ObjectMap insert_zero(int n, int i)
{
    check_axis(n, i);
    std::vector<IntPoly> comps;
    int source_var = 0;
    for (int v = 0; v < n; ++v) {
        if (v == i - 1) comps.emplace_back();
        else comps.push_back(var_poly(n - 1, source_var++));
    }
    return ObjectMap(SmallObject::dpow(n - 1), SmallObject::dpow(n), std::move(comps));
}

ObjectMap contract_last_pair(int n)
{
    if (n < 2) throw PreconditionError("contract_last_pair needs n >= 2");
    std::vector<IntPoly> comps;
    for (int v = 0; v < n - 2; ++v) comps.push_back(var_poly(n, v));
    MultiIndex last(static_cast<std::size_t>(n), 0);
    last[static_cast<std::size_t>(n - 2)] = 1;
    last[static_cast<std::size_t>(n - 1)] = 1;
    comps.push_back(monomial_poly(last));
    return ObjectMap(SmallObject::dpow(n), SmallObject::dpow(n - 1), std::move(comps));
}

ObjectMap full_product(int n)
{
    return ObjectMap(SmallObject::dpow(n), SmallObject::d(), {monomial_poly(MultiIndex(static_cast<std::size_t>(n), 1))});
}

ObjectMap block_products(const std::vector<int>& blocks, const std::vector<int>& sigma)
{
    const int n = std::accumulate(blocks.begin(), blocks.end(), 0);
    if (static_cast<int>(sigma.size()) != n) throw PreconditionError("block sizes must sum to the permutation length");
    std::vector<IntPoly> comps;
    int pos = 0;
    for (int size : blocks) {
        if (size < 1) throw PreconditionError("blocks must be non-empty");
        MultiIndex m(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < size; ++k) m.at(static_cast<std::size_t>(sigma.at(static_cast<std::size_t>(pos++)))) = 1;
        comps.push_back(monomial_poly(m));
    }
    return ObjectMap(SmallObject::dpow(n), SmallObject::dpow(static_cast<int>(blocks.size())), std::move(comps));
}

ObjectMap scale_axis_by_param(int n, int m, int i)
{
    check_axis(n, i);
    std::vector<IntPoly> comps;
    for (int v = 0; v < n; ++v) {
        MultiIndex mono(static_cast<std::size_t>(n + 1), 0);
        mono[static_cast<std::size_t>(v)] = 1;
        if (v == i - 1) mono[static_cast<std::size_t>(n)] = 1;
        comps.push_back(monomial_poly(mono));
    }
    return ObjectMap(SmallObject::product(SmallObject::dpow(n), SmallObject::dn(m)), SmallObject::dpow(n),
                     std::move(comps));
}

ObjectMap scale_line_by_param(const SmallObject& line, int m, int power)
{
    if (line.num_vars() != 1) throw PreconditionError("scale_line_by_param needs a one-variable object");
    return ObjectMap(SmallObject::product(line, SmallObject::dn(m)), line, {monomial_poly({1, power})});
}

ObjectMap line_power(int n, int k, int l)
{
    return ObjectMap(SmallObject::dn(n), SmallObject::dn(l), {monomial_poly({k})});
}

ObjectMap from_point(const SmallObject& target)
{
    return ObjectMap(SmallObject::point(), target, std::vector<IntPoly>(static_cast<std::size_t>(target.num_vars())));
}

ObjectMap wedge_left(const SmallObject& wedge)
{
    const SmallObject& left = wedge.left();
    std::vector<IntPoly> comps;
    for (int v = 0; v < left.num_vars(); ++v) comps.push_back(var_poly(left.num_vars(), v));
    comps.resize(static_cast<std::size_t>(wedge.num_vars()));
    return ObjectMap(left, wedge, std::move(comps));
}

ObjectMap wedge_right(const SmallObject& wedge)
{
    const SmallObject& right = wedge.right();
    std::vector<IntPoly> comps(static_cast<std::size_t>(wedge.left().num_vars()));
    for (int v = 0; v < right.num_vars(); ++v) comps.push_back(var_poly(right.num_vars(), v));
    return ObjectMap(right, wedge, std::move(comps));
}

ObjectMap same_variables(const SmallObject& source, const SmallObject& target)
{
    if (source.num_vars() != target.num_vars()) throw PreconditionError("variable counts differ");
    std::vector<IntPoly> comps;
    for (int v = 0; v < source.num_vars(); ++v) comps.push_back(var_poly(source.num_vars(), v));
    return ObjectMap(source, target, std::move(comps));
}

}  // namespace jetkit::maps
