#include "jetkit/validate.hpp"

#include "jetkit/errors.hpp"
#include "jetkit/maps.hpp"

#include <algorithm>

namespace jetkit {

bool Report::all_pass() const
{
    return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.pass; });
}

void Report::merge(const Report& other)
{
    properties.insert(properties.end(), other.properties.begin(), other.properties.end());
}

Json to_json(const Report& r)
{
    Json props = Json::array();
    for (const PropertyResult& p : r.properties) {
        Json entry{{"name", p.name}, {"reference", p.reference}, {"pass", p.pass}};
        if (p.counterexample) entry["counterexample"] = *p.counterexample;
        props.push_back(std::move(entry));
    }
    return Json{{"suite", r.suite}, {"trials", r.trials}, {"seed", r.seed}, {"properties", std::move(props)}};
}

PropertyResult run_property(const std::string& name, const std::string& reference, int trials, std::uint64_t seed,
                            const Trial& trial)
{
    PropertyResult result{name, reference, true, std::nullopt};
    for (int t = 0; t < trials; ++t) {
        Rng rng = Rng::for_trial(seed, name, static_cast<std::uint64_t>(t));
        std::optional<Json> failure;
        try {
            failure = trial(rng);
        } catch (const std::exception& e) {
            failure = Json{{"exception", e.what()}};
        }
        if (failure) {
            (*failure)["trial"] = t;
            result.pass = false;
            result.counterexample = std::move(failure);
            break;
        }
    }
    return result;
}

TaylorElement with_parameter(const std::function<TaylorElement(const TaylorElement&)>& f, const TaylorElement& g,
                             int degree)
{
    const SmallObject& obj = g.object();
    if (obj.kind() != SmallObject::Kind::Product || obj.right().kind() != SmallObject::Kind::Dn)
        throw PreconditionError("with_parameter needs an element over Product(A, Dn(m))");
    const std::vector<TaylorElement> slices = split_product(g);
    const int m = static_cast<int>(slices.size()) - 1;
    const int samples = m * std::max(degree, 1) + 1;

    std::vector<TaylorElement> values;
    for (int e = 0; e < samples; ++e) {
        TaylorElement at = slices[0];
        Rational w = 1;
        for (int k = 1; k <= m; ++k) {
            w *= e;
            at += w * slices[static_cast<std::size_t>(k)];
        }
        values.push_back(f(at));
        if (!(values.back().object() == values.front().object()) || values.back().target_dim() != values.front().target_dim())
            throw InvariantError("with_parameter: outputs change shape along the parameter");
    }
    const SmallObject out_obj = values.front().object();
    const int dim = values.front().target_dim();
    const std::size_t width = out_obj.dim() * static_cast<std::size_t>(dim);

    Matrix vandermonde(static_cast<std::size_t>(samples), static_cast<std::size_t>(samples));
    Matrix rhs(static_cast<std::size_t>(samples), width);
    for (int e = 0; e < samples; ++e) {
        Rational w = 1;
        for (int k = 0; k < samples; ++k) {
            vandermonde(static_cast<std::size_t>(e), static_cast<std::size_t>(k)) = w;
            w *= e;
        }
        for (std::size_t b = 0; b < out_obj.dim(); ++b)
            for (int c = 0; c < dim; ++c)
                rhs(static_cast<std::size_t>(e), b * static_cast<std::size_t>(dim) + static_cast<std::size_t>(c)) =
                    values[static_cast<std::size_t>(e)].at(b, c);
    }
    const Solution sol = solve(vandermonde, rhs);
    if (sol.status != SolveStatus::unique) throw InvariantError("with_parameter: interpolation failed");

    std::vector<TaylorElement> out_slices;
    for (int k = 0; k <= m; ++k) {
        TaylorElement s(out_obj, dim);
        for (std::size_t b = 0; b < out_obj.dim(); ++b)
            for (int c = 0; c < dim; ++c)
                s.at(b, c) = sol.x(static_cast<std::size_t>(k), b * static_cast<std::size_t>(dim) + static_cast<std::size_t>(c));
        out_slices.push_back(std::move(s));
    }
    return join_product(SmallObject::product(out_obj, SmallObject::dn(m)), out_slices);
}

namespace {

std::optional<Json> compare(const TaylorElement& lhs, const TaylorElement& rhs, Json context)
{
    if (lhs == rhs) return std::nullopt;
    context["lhs"] = to_json(lhs);
    context["rhs"] = to_json(rhs);
    return context;
}

TaylorElement random_input(Rng& rng, const SmallObject& obj, const Vector& x)
{
    return random_element(rng, obj, static_cast<int>(x.size()), std::span<const Rational>(x));
}

Operator project_to(const Operator& op, int order)
{
    Operator out = op;
    while (out.order > order) out = project(out);
    return out;
}

// Smallest l with k (l + 1) >= n + 1.
int substitution_target(int n, int k) { return (n + 1 + k - 1) / k - 1; }

// (x, u) with a zero D coefficient.
bool is_zero_tangent(const TaylorElement& t, const Vector& point)
{
    return std::ranges::equal(t.coeff(0), point) && is_zero(t.coeff(1));
}

std::string prefixed(const std::string& prefix, const char* name) { return prefix + name; }

void pseudotangential_checks(const Operator& op, int trials, std::uint64_t seed, const std::string& prefix, Report& report)
{
    const int n = op.order;
    const int p = op.p;
    const SmallObject in = op.input_object();
    auto add = [&](const char* name, const char* reference, const Trial& trial) {
        report.properties.push_back(run_property(prefixed(prefix, name), reference, trials, seed, trial));
    };

    add("projection", "the base part of the output is the input", [&](Rng& rng) -> std::optional<Json> {
        const TaylorElement g = random_input(rng, in, op.point);
        return compare(pushforward(PolyMap::projection(p + op.q, p), op(g)), g, Json{{"input", to_json(g)}});
    });
    if (n == 0) return;

    add("axis scaling", "commutes with scaling one axis by alpha", [&](Rng& rng) -> std::optional<Json> {
        const TaylorElement g = random_input(rng, in, op.point);
        const int i = rng.uniform(1, n);
        const Rational a = rng.rational();
        return compare(op(scalar_action(a, i, g)), scalar_action(a, i, op(g)),
                       Json{{"input", to_json(g)}, {"axis", i}, {"alpha", to_string(a)}});
    });
    for (int m = 1; m <= 2; ++m) {
        const std::string name = "parameter square m=" + std::to_string(m);
        report.properties.push_back(run_property(prefix + name, "commutes with scaling one axis by a Dn(m) parameter", trials, seed,
                                                 [&, m](Rng& rng) -> std::optional<Json> {
                                                     const TaylorElement g = random_input(rng, in, op.point);
                                                     const int i = rng.uniform(1, n);
                                                     const ObjectMap mu = maps::scale_axis_by_param(n, m, i);
                                                     return compare(with_parameter(op, reparam(g, mu), n), reparam(op(g), mu),
                                                                    Json{{"input", to_json(g)}, {"axis", i}});
                                                 }));
    }
    add("permutation", "commutes with permuting the axes", [&](Rng& rng) -> std::optional<Json> {
        const TaylorElement g = random_input(rng, in, op.point);
        const std::vector<int> sigma = rng.permutation(n);
        return compare(op(permute(g, sigma)), permute(op(g), sigma), Json{{"input", to_json(g)}, {"sigma", sigma}});
    });
    if (n < 2) return;

    const Operator lower = project(op);
    add("contraction", "agrees with the projection on inputs pulled back along d_{n-1} d_n", [&](Rng& rng) -> std::optional<Json> {
        const TaylorElement g = random_input(rng, SmallObject::dpow(n - 1), op.point);
        const ObjectMap c = maps::contract_last_pair(n);
        return compare(op(reparam(g, c)), reparam(lower(g), c), Json{{"input", to_json(g)}});
    });
    add("block substitution", "agrees with the projection on inputs pulled back along block products",
        [&](Rng& rng) -> std::optional<Json> {
            const int m = rng.uniform(1, n - 1);
            const std::vector<int> blocks = rng.composition(n, m);
            const std::vector<int> sigma = rng.permutation(n);
            const ObjectMap chi = maps::block_products(blocks, sigma);
            const TaylorElement g = random_input(rng, SmallObject::dpow(m), op.point);
            return compare(op(reparam(g, chi)), reparam(project_to(op, m)(g), chi),
                           Json{{"input", to_json(g)}, {"blocks", blocks}, {"sigma", sigma}});
        });
    add("line square", "passing to Dn commutes with projection", [&](Rng& rng) -> std::optional<Json> {
        const TaylorElement g = random_input(rng, SmallObject::dn(n - 1), op.point);
        return compare(psi_operator(lower)(g), project(psi_operator(op))(g), Json{{"input", to_json(g)}});
    });

    pseudotangential_checks(lower, trials, seed, "order " + std::to_string(n - 1) + ": ", report);
}

void line_checks(const Operator& op, int trials, std::uint64_t seed, const std::string& prefix, Report& report)
{
    const int n = op.order;
    const int p = op.p;
    const SmallObject in = op.input_object();
    auto add = [&](const std::string& name, const char* reference, const Trial& trial) {
        report.properties.push_back(run_property(prefix + name, reference, trials, seed, trial));
    };

    add("projection", "the base part of the output is the input", [&](Rng& rng) -> std::optional<Json> {
        const TaylorElement g = random_input(rng, in, op.point);
        return compare(pushforward(PolyMap::projection(p + op.q, p), op(g)), g, Json{{"input", to_json(g)}});
    });
    if (n == 0) return;
    add("homogeneity", "commutes with the reparametrization t -> alpha t", [&](Rng& rng) -> std::optional<Json> {
        const TaylorElement g = random_input(rng, in, op.point);
        const Rational a = rng.rational();
        return compare(op(scale_parameter(a, g)), scale_parameter(a, op(g)),
                       Json{{"input", to_json(g)}, {"alpha", to_string(a)}});
    });
    for (int m = 1; m <= 2; ++m)
        add("parameter square m=" + std::to_string(m), "commutes with multiplying the curve parameter by a Dn(m) parameter",
            [&, m](Rng& rng) -> std::optional<Json> {
                const TaylorElement g = random_input(rng, in, op.point);
                const ObjectMap times = maps::scale_line_by_param(in, m, 1);
                return compare(with_parameter(op, reparam(g, times), n), reparam(op(g), times), Json{{"input", to_json(g)}});
            });
    for (int k = 2; k <= n; ++k) {
        const int l = substitution_target(n, k);
        add("power substitution k=" + std::to_string(k), "agrees with the projection on inputs pulled back along d -> d^k",
            [&, k, l](Rng& rng) -> std::optional<Json> {
                const ObjectMap rho = maps::line_power(n, k, l);
                const TaylorElement g = random_input(rng, SmallObject::dn(l), op.point);
                return compare(op(reparam(g, rho)), reparam(project_to(op, l)(g), rho), Json{{"input", to_json(g)}});
            });
    }
    if (n >= 2) line_checks(project(op), trials, seed, "order " + std::to_string(n - 1) + ": ", report);
}

}  // namespace

Report validate_pseudotangential(const Operator& op, int trials, std::uint64_t seed)
{
    if (op.rep != Rep::dpow) throw PreconditionError("validate_pseudotangential needs a dpow operator");
    Report report{"pseudotangential", trials, seed, {}};
    pseudotangential_checks(op, trials, seed, "", report);
    return report;
}

Report validate_line_tangential(const Operator& op, int trials, std::uint64_t seed)
{
    if (op.rep != Rep::dn) throw PreconditionError("validate_line_tangential needs a dn operator");
    Report report{"line tangential", trials, seed, {}};
    line_checks(op, trials, seed, "", report);
    return report;
}

Report validate_form(const FormOperator& form, int trials, std::uint64_t seed)
{
    const int n = form.degree;
    const int p = form.p;
    const SmallObject in = form.input_object();
    const Vector x(form.point.begin(), form.point.begin() + p);
    Report report{"symmetric form", trials, seed, {}};
    auto add = [&](const std::string& name, const char* reference, const Trial& trial) {
        report.properties.push_back(run_property(name, reference, trials, seed, trial));
    };
    auto vanishes = [&](const TaylorElement& g, Json context) -> std::optional<Json> {
        const TaylorElement out = form(g);
        if (is_zero_tangent(out, form.point)) return std::nullopt;
        context["input"] = to_json(g);
        context["output"] = to_json(out);
        return context;
    };

    add("vertical", "values are vertical tangents at the base point", [&](Rng& rng) -> std::optional<Json> {
        const TaylorElement g = random_input(rng, in, x);
        const TaylorElement out = form(g);
        const bool ok = std::ranges::equal(out.coeff(0), form.point) && is_zero(out.coeff(1).first(static_cast<std::size_t>(p)));
        if (ok) return std::nullopt;
        return Json{{"input", to_json(g)}, {"output", to_json(out)}};
    });
    add("homogeneity", "scaling the parameter by alpha scales the value by alpha^n", [&](Rng& rng) -> std::optional<Json> {
        const TaylorElement g = random_input(rng, in, x);
        const Rational a = rng.rational();
        return compare(form(scale_parameter(a, g)), fiber_scale(power(a, n), form(g)),
                       Json{{"input", to_json(g)}, {"alpha", to_string(a)}});
    });
    for (int m = 1; m <= 2; ++m)
        add("parameter square m=" + std::to_string(m), "a Dn(m) parameter passes through to the value",
            [&, m](Rng& rng) -> std::optional<Json> {
                const TaylorElement g = random_input(rng, in, x);
                const ObjectMap out_map = maps::scale_line_by_param(SmallObject::d(), m, form.rep == Rep::dpow ? 1 : n);
                if (form.rep == Rep::dpow) {
                    const int i = rng.uniform(1, n);
                    const ObjectMap mu = maps::scale_axis_by_param(n, m, i);
                    return compare(with_parameter(form, reparam(g, mu), n), reparam(form(g), out_map),
                                   Json{{"input", to_json(g)}, {"axis", i}});
                }
                const ObjectMap times = maps::scale_line_by_param(in, m, 1);
                return compare(with_parameter(form, reparam(g, times), n), reparam(form(g), out_map), Json{{"input", to_json(g)}});
            });

    if (form.rep == Rep::dpow) {
        add("axis scaling", "scaling one axis by alpha scales the value by alpha", [&](Rng& rng) -> std::optional<Json> {
            const TaylorElement g = random_input(rng, in, x);
            const int i = rng.uniform(1, n);
            const Rational a = rng.rational();
            return compare(form(scalar_action(a, i, g)), fiber_scale(a, form(g)),
                           Json{{"input", to_json(g)}, {"axis", i}, {"alpha", to_string(a)}});
        });
        add("permutation", "invariant under permuting the axes", [&](Rng& rng) -> std::optional<Json> {
            const TaylorElement g = random_input(rng, in, x);
            const std::vector<int> sigma = rng.permutation(n);
            return compare(form(permute(g, sigma)), form(g), Json{{"input", to_json(g)}, {"sigma", sigma}});
        });
        add("degeneracy", "vanishes on inputs constant along one axis", [&](Rng& rng) -> std::optional<Json> {
            const TaylorElement g = random_input(rng, SmallObject::dpow(n - 1), x);
            const int i = rng.uniform(1, n);
            return vanishes(degeneracy_s(i, g), Json{{"axis", i}});
        });
        if (n >= 2)
            add("contraction", "vanishes on inputs pulled back along d_{n-1} d_n", [&](Rng& rng) -> std::optional<Json> {
                const TaylorElement g = random_input(rng, SmallObject::dpow(n - 1), x);
                return vanishes(reparam(g, maps::contract_last_pair(n)), Json{});
            });
    } else {
        for (int k = 2; k <= n; ++k) {
            const int l = substitution_target(n, k);
            add("power substitution k=" + std::to_string(k), "vanishes on inputs pulled back along d -> d^k",
                [&, k, l](Rng& rng) -> std::optional<Json> {
                    const TaylorElement g = random_input(rng, SmallObject::dn(l), x);
                    return vanishes(reparam(g, maps::line_power(n, k, l)), Json{{"k", k}});
                });
        }
    }
    return report;
}

}  // namespace jetkit
