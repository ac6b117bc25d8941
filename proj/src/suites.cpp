#include "jetkit/suites.hpp"

#include "jetkit/errors.hpp"
#include "jetkit/maps.hpp"

#include <algorithm>
#include <map>

namespace jetkit {

namespace {

struct Suite {
    Report& report;
    int trials;
    std::uint64_t seed;

    void add(const std::string& name, const std::string& reference, const Trial& trial) const
    {
        report.properties.push_back(run_property(name, reference, trials, seed, trial));
    }
    // A structural fact that does not depend on random input.
    void fact(const std::string& name, const std::string& reference, bool holds, Json detail = Json::object()) const
    {
        PropertyResult r{name, reference, holds, std::nullopt};
        if (!holds) r.counterexample = std::move(detail);
        report.properties.push_back(std::move(r));
    }
};

std::optional<Json> compare(const TaylorElement& lhs, const TaylorElement& rhs, Json context = Json::object())
{
    if (lhs == rhs) return std::nullopt;
    context["lhs"] = to_json(lhs);
    context["rhs"] = to_json(rhs);
    return context;
}

std::optional<Json> expect(bool holds, Json context)
{
    if (holds) return std::nullopt;
    return context;
}

struct FamilyCase {
    std::string label;
    AffineFamily fam;
    int max_dim;
};

std::vector<FamilyCase> family_cases()
{
    std::vector<FamilyCase> out;
    for (int n = 1; n <= 3; ++n) out.push_back({"dpow(" + std::to_string(n) + ")", dpow_family(n), 3});
    for (int k = 1; k <= 3; ++k) out.push_back({"dn(" + std::to_string(k) + ")", dn_family(k), 3});
    for (int p = 1; p <= 2; ++p)
        for (int k = 1; k <= 3; ++k)
            out.push_back({"dsym(" + std::to_string(p) + "," + std::to_string(k) + ")", dsym_family(p, k), p + 2});
    return out;
}

struct Pair {
    TaylorElement plus;
    TaylorElement minus;
};

Pair random_pair(Rng& rng, const AffineFamily& fam, int dim)
{
    TaylorElement minus = random_element(rng, fam.side, dim);
    TaylorElement plus = random_agreeing(rng, fam, minus);
    return {std::move(plus), std::move(minus)};
}

TaylorElement random_tangent(Rng& rng, const AffineFamily& fam, const TaylorElement& at)
{
    const Vector base = at.base();
    return random_element(rng, fam.tangent, at.target_dim(), std::span<const Rational>(base));
}

// A linear two-argument operation applied separately to every parameter slice.
TaylorElement slicewise(const std::function<TaylorElement(const TaylorElement&, const TaylorElement&)>& f,
                        const TaylorElement& a, const TaylorElement& b, const SmallObject& out_left)
{
    const auto sa = split_product(a);
    const auto sb = split_product(b);
    std::vector<TaylorElement> out;
    for (std::size_t k = 0; k < sa.size(); ++k) out.push_back(f(sa[k], sb[k]));
    return join_product(SmallObject::product(out_left, a.object().right()), out);
}

TaylorElement random_input(Rng& rng, const SmallObject& obj, const Vector& x)
{
    return random_element(rng, obj, static_cast<int>(x.size()), std::span<const Rational>(x));
}

struct JetShape {
    int p;
    int q;
    int order;
};

JetShape random_shape(Rng& rng, int min_order, int max_order)
{
    return {rng.uniform(1, 2), rng.uniform(1, 2), rng.uniform(min_order, max_order)};
}

// Converts between the one-variable objects D, Dn(1), Dpow(1).
TaylorElement as_object(const TaylorElement& g, const SmallObject& obj)
{
    if (g.object() == obj) return g;
    return reparam(g, maps::same_variables(obj, g.object()));
}

Operator project_to(Operator op, int order)
{
    while (op.order > order) op = project(op);
    return op;
}

void combinatorics_suite(const Suite& s)
{
    // Bell numbers from the triangle recurrence.
    std::vector<std::vector<Rational>> triangle{{1}};
    for (int n = 1; n <= 8; ++n) {
        std::vector<Rational> row{triangle.back().back()};
        for (const Rational& v : triangle.back()) row.push_back(row.back() + v);
        triangle.push_back(row);
    }
    bool bell_ok = true;
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> labels(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = i + 1;
        bell_ok = bell_ok && Rational(static_cast<long>(set_partitions(labels).size())) == triangle[static_cast<std::size_t>(n)].front();
    }
    s.fact("set partition counts", "number of set partitions is the Bell number, up to 8 labels", bell_ok);

    // Partition function by the standard dynamic programme over part sizes.
    std::vector<long> counts(21, 0);
    counts[0] = 1;
    for (int part = 1; part <= 20; ++part)
        for (int k = part; k <= 20; ++k) counts[static_cast<std::size_t>(k)] += counts[static_cast<std::size_t>(k - part)];
    bool p_ok = true;
    for (int k = 1; k <= 20; ++k) p_ok = p_ok && static_cast<long>(integer_partitions(k).size()) == counts[static_cast<std::size_t>(k)];
    s.fact("integer partition counts", "number of integer partitions is p(k), up to 20", p_ok);

    bool mi_ok = true;
    for (int p = 1; p <= 5; ++p)
        for (int n = 0; n <= 6; ++n) mi_ok = mi_ok && symmetric_multi_indices(p, n).size() == binomial(p + n - 1, n);
    s.fact("multi-index counts", "degree-n multi-indices over p variables number C(p+n-1, n)", mi_ok);

    bool shape_ok = true;
    for (int k = 1; k <= 8; ++k) {
        Rational total = 0;
        for (const IntPartition& parts : integer_partitions(k)) total += set_partitions_of_shape(parts);
        shape_ok = shape_ok && total == triangle[static_cast<std::size_t>(k)].front();
    }
    s.fact("partition shapes", "set partitions counted by block shape sum to the Bell number", shape_ok);
}

SmallObject random_object(Rng& rng)
{
    switch (rng.uniform(0, 5)) {
    case 0: return SmallObject::dn(rng.uniform(1, 4));
    case 1: return SmallObject::dpow(rng.uniform(1, 3));
    case 2: return SmallObject::dsym(rng.uniform(1, 2), rng.uniform(1, 3));
    case 3: return SmallObject::dhole(rng.uniform(2, 3));
    case 4: return SmallObject::dmany(rng.uniform(1, 3));
    default: return SmallObject::wedge(SmallObject::dpow(rng.uniform(1, 2)), SmallObject::d());
    }
}

WeilElement random_weil(Rng& rng, const SmallObject& obj)
{
    WeilElement w(obj);
    for (std::size_t b = 0; b < obj.dim(); ++b) w[b] = rng.rational();
    return w;
}

void weil_suite(const Suite& s)
{
    s.add("algebra laws", "multiplication is commutative, associative and distributive with unit 1", [](Rng& rng) -> std::optional<Json> {
        const SmallObject obj = random_object(rng);
        const WeilElement a = random_weil(rng, obj);
        const WeilElement b = random_weil(rng, obj);
        const WeilElement c = random_weil(rng, obj);
        const bool ok = a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                        a * WeilElement(obj, 1) == a;
        return expect(ok, Json{{"object", obj.name()}});
    });
    s.add("pushforward is functorial", "pushing forward along F . G equals pushing along G then F", [](Rng& rng) -> std::optional<Json> {
        const SmallObject obj = random_object(rng);
        const int a = rng.uniform(1, 3);
        const int b = rng.uniform(1, 3);
        const int c = rng.uniform(1, 3);
        const PolyMap g = random_polymap(rng, a, b, 3);
        const PolyMap f = random_polymap(rng, b, c, 3);
        const TaylorElement x = random_element(rng, obj, a);
        return compare(pushforward(compose(f, g), x), pushforward(f, pushforward(g, x)), Json{{"input", to_json(x)}});
    });
    s.add("reparametrization is functorial", "pulling back along outer . inner equals pulling back twice", [](Rng& rng) -> std::optional<Json> {
        const SmallObject a = random_object(rng);
        const SmallObject b = random_object(rng);
        const SmallObject c = random_object(rng);
        const auto inner = random_object_map(rng, a, b);
        const auto outer = random_object_map(rng, b, c);
        if (!inner || !outer) return std::nullopt;
        const TaylorElement x = random_element(rng, c, rng.uniform(1, 3));
        return compare(reparam(x, compose(*outer, *inner)), reparam(reparam(x, *outer), *inner), Json{{"input", to_json(x)}});
    });
    s.add("pushforward commutes with reparametrization", "F (x) id and id (x) W_phi commute", [](Rng& rng) -> std::optional<Json> {
        const SmallObject a = random_object(rng);
        const SmallObject b = random_object(rng);
        const auto phi = random_object_map(rng, a, b);
        if (!phi) return std::nullopt;
        const int in = rng.uniform(1, 3);
        const PolyMap f = random_polymap(rng, in, rng.uniform(1, 3), 3);
        const TaylorElement x = random_element(rng, b, in);
        return compare(pushforward(f, reparam(x, *phi)), reparam(pushforward(f, x), *phi), Json{{"input", to_json(x)}});
    });
    s.add("axis scaling composes", "scaling axis i by beta then alpha equals scaling by alpha beta", [](Rng& rng) -> std::optional<Json> {
        const int n = rng.uniform(1, 3);
        const TaylorElement x = random_element(rng, SmallObject::dpow(n), rng.uniform(1, 3));
        const int i = rng.uniform(1, n);
        const Rational a = rng.rational();
        const Rational b = rng.rational();
        return compare(scalar_action(a, i, scalar_action(b, i, x)), scalar_action(a * b, i, x), Json{{"input", to_json(x)}});
    });
    s.add("serialization round trip", "parsing the JSON encoding gives back the element", [](Rng& rng) -> std::optional<Json> {
        const SmallObject obj = random_object(rng);
        const TaylorElement x = random_element(rng, obj, rng.uniform(0, 3));
        return compare(taylor_from_json(Json::parse(to_json(x).dump())), x);
    });
}

void affine_suite(const Suite& s)
{
    for (const FamilyCase& c : family_cases()) {
        const AffineFamily& fam = c.fam;
        s.add(c.label + ": difference then translation", "(g+ -. g-) +. g- = g+", [&](Rng& rng) -> std::optional<Json> {
            const Pair pr = random_pair(rng, fam, rng.uniform(1, c.max_dim));
            return compare(strong_plus(fam, strong_minus(fam, pr.plus, pr.minus), pr.minus), pr.plus,
                           Json{{"plus", to_json(pr.plus)}, {"minus", to_json(pr.minus)}});
        });
        s.add(c.label + ": translation then difference", "(t +. g) -. g = t", [&](Rng& rng) -> std::optional<Json> {
            const TaylorElement g = random_element(rng, fam.side, rng.uniform(1, c.max_dim));
            const TaylorElement t = random_tangent(rng, fam, g);
            return compare(strong_minus(fam, strong_plus(fam, t, g), g), t, Json{{"t", to_json(t)}, {"g", to_json(g)}});
        });
        s.add(c.label + ": translations add", "(s + t) +. g = s +. (t +. g)", [&](Rng& rng) -> std::optional<Json> {
            const TaylorElement g = random_element(rng, fam.side, rng.uniform(1, c.max_dim));
            const TaylorElement a = random_tangent(rng, fam, g);
            const TaylorElement b = random_tangent(rng, fam, g);
            return compare(strong_plus(fam, fiber_sum(a, b), g), strong_plus(fam, a, strong_plus(fam, b, g)),
                           Json{{"s", to_json(a)}, {"t", to_json(b)}, {"g", to_json(g)}});
        });
    }
}

TaylorElement iterated_directional_difference(const TaylorElement& plus, const TaylorElement& minus)
{
    const int n = plus.object().num_vars();
    TaylorElement acc = directional_minus(1, plus, minus);
    for (int k = 2; k <= n; ++k) {
        TaylorElement side = plus;
        for (int r = 1; r < k; ++r) side = face_d(1, side);
        for (int r = 1; r < k; ++r) side = degeneracy_s(1, side);
        acc = directional_minus(k, acc, side);
    }
    return acc;
}

void quasicolimit_suite(const Suite& s)
{
    for (const FamilyCase& c : family_cases()) {
        const AffineFamily& fam = c.fam;
        s.fact(fam.minus.name + " is a quasi-colimit", "the difference square becomes a pullback on coefficients",
               is_quasi_colimit(fam.minus));
        s.fact(fam.plus.name + " is a quasi-colimit", "the translation square becomes a pullback on coefficients",
               is_quasi_colimit(fam.plus));
        s.add(fam.minus.name + " gluing", "compatible pairs glue uniquely with the prescribed pullbacks", [&](Rng& rng) -> std::optional<Json> {
            const Pair pr = random_pair(rng, fam, rng.uniform(1, c.max_dim));
            const TaylorElement glued = solve_pair(fam.minus, pr.plus, pr.minus);
            return expect(reparam(glued, fam.minus.left_to_apex) == pr.plus && reparam(glued, fam.minus.right_to_apex) == pr.minus,
                          Json{{"plus", to_json(pr.plus)}, {"minus", to_json(pr.minus)}});
        });
        s.add(fam.plus.name + " gluing", "a tangent and an element at one base point glue uniquely", [&](Rng& rng) -> std::optional<Json> {
            const TaylorElement g = random_element(rng, fam.side, rng.uniform(1, c.max_dim));
            const TaylorElement t = random_tangent(rng, fam, g);
            const TaylorElement glued = solve_pair(fam.plus, t, g);
            return expect(reparam(glued, fam.plus.left_to_apex) == t && reparam(glued, fam.plus.right_to_apex) == g,
                          Json{{"t", to_json(t)}, {"g", to_json(g)}});
        });
    }
    s.add("jet difference in coordinates", "embedding the coordinate difference of jets gives the glued difference",
          [](Rng& rng) -> std::optional<Json> {
              const JetShape sh = random_shape(rng, 1, 3);
              const JetCoord minus = random_jet(rng, sh.p, sh.q, sh.order);
              const JetCoord plus = random_jet_over(rng, project(minus));
              const AffineFamily fam = jet_family(sh.p, sh.order);
              return compare(embed(jet_minus(plus, minus)), strong_minus(fam, embed(plus), embed(minus)),
                             Json{{"plus", to_json(plus)}, {"minus", to_json(minus)}});
          });
    s.add("jet translation in coordinates", "embedding the coordinate translation of a jet gives the glued translation",
          [](Rng& rng) -> std::optional<Json> {
              const JetShape sh = random_shape(rng, 1, 3);
              const JetCoord j = random_jet(rng, sh.p, sh.q, sh.order);
              const SymFormCoord f = random_symform_at(rng, j);
              const AffineFamily fam = jet_family(sh.p, sh.order);
              return compare(embed(jet_plus(f, j)), strong_plus(fam, embed(f), embed(j)),
                             Json{{"jet", to_json(j)}, {"form", to_json(f)}});
          });
    for (int n = 2; n <= 3; ++n) {
        const AffineFamily fam = dpow_family(n);
        s.add("directional differences dpow(" + std::to_string(n) + ")",
              "the difference pulled back along d_1...d_n is the iterated axis-wise difference", [fam, n](Rng& rng) -> std::optional<Json> {
                  const Pair pr = random_pair(rng, fam, rng.uniform(1, 3));
                  return compare(reparam(strong_minus(fam, pr.plus, pr.minus), maps::full_product(n)),
                                 iterated_directional_difference(pr.plus, pr.minus),
                                 Json{{"plus", to_json(pr.plus)}, {"minus", to_json(pr.minus)}});
              });
    }
}

void naturality_suite(const Suite& s)
{
    for (const FamilyCase& c : family_cases()) {
        const AffineFamily& fam = c.fam;
        s.add(c.label + ": pushforward of differences", "F(g+ -. g-) = F(g+) -. F(g-)", [&](Rng& rng) -> std::optional<Json> {
            const int dim = rng.uniform(1, c.max_dim);
            const Pair pr = random_pair(rng, fam, dim);
            const PolyMap f = random_polymap(rng, dim, rng.uniform(1, 3), 3);
            return compare(pushforward(f, strong_minus(fam, pr.plus, pr.minus)),
                           strong_minus(fam, pushforward(f, pr.plus), pushforward(f, pr.minus)),
                           Json{{"plus", to_json(pr.plus)}, {"minus", to_json(pr.minus)}});
        });
        s.add(c.label + ": pushforward of translations", "F(t +. g) = F(t) +. F(g)", [&](Rng& rng) -> std::optional<Json> {
            const int dim = rng.uniform(1, c.max_dim);
            const TaylorElement g = random_element(rng, fam.side, dim);
            const TaylorElement t = random_tangent(rng, fam, g);
            const PolyMap f = random_polymap(rng, dim, rng.uniform(1, 3), 3);
            return compare(pushforward(f, strong_plus(fam, t, g)), strong_plus(fam, pushforward(f, t), pushforward(f, g)),
                           Json{{"t", to_json(t)}, {"g", to_json(g)}});
        });
        if (fam.family == Family::dpow) {
            const int n = fam.order;
            s.add(c.label + ": axis scaling of differences", "alpha (g+ -. g-) = (alpha ._i g+) -. (alpha ._i g-)", [&, n](Rng& rng) -> std::optional<Json> {
                const Pair pr = random_pair(rng, fam, rng.uniform(1, 3));
                const int i = rng.uniform(1, n);
                const Rational a = rng.rational();
                return compare(fiber_scale(a, strong_minus(fam, pr.plus, pr.minus)),
                               strong_minus(fam, scalar_action(a, i, pr.plus), scalar_action(a, i, pr.minus)),
                               Json{{"plus", to_json(pr.plus)}, {"minus", to_json(pr.minus)}, {"axis", i}, {"alpha", to_string(a)}});
            });
            s.add(c.label + ": axis scaling of translations", "alpha ._i (t +. g) = (alpha t) +. (alpha ._i g)", [&, n](Rng& rng) -> std::optional<Json> {
                const TaylorElement g = random_element(rng, fam.side, rng.uniform(1, 3));
                const TaylorElement t = random_tangent(rng, fam, g);
                const int i = rng.uniform(1, n);
                const Rational a = rng.rational();
                return compare(scalar_action(a, i, strong_plus(fam, t, g)), strong_plus(fam, fiber_scale(a, t), scalar_action(a, i, g)),
                               Json{{"t", to_json(t)}, {"g", to_json(g)}, {"axis", i}, {"alpha", to_string(a)}});
            });
            s.add(c.label + ": permuted differences", "g+^sigma -. g-^sigma = g+ -. g-", [&, n](Rng& rng) -> std::optional<Json> {
                const Pair pr = random_pair(rng, fam, rng.uniform(1, 3));
                const std::vector<int> sigma = rng.permutation(n);
                return compare(strong_minus(fam, permute(pr.plus, sigma), permute(pr.minus, sigma)), strong_minus(fam, pr.plus, pr.minus),
                               Json{{"plus", to_json(pr.plus)}, {"minus", to_json(pr.minus)}, {"sigma", sigma}});
            });
            s.add(c.label + ": permuted translations", "(t +. g)^sigma = t +. g^sigma", [&, n](Rng& rng) -> std::optional<Json> {
                const TaylorElement g = random_element(rng, fam.side, rng.uniform(1, 3));
                const TaylorElement t = random_tangent(rng, fam, g);
                const std::vector<int> sigma = rng.permutation(n);
                return compare(permute(strong_plus(fam, t, g), sigma), strong_plus(fam, t, permute(g, sigma)),
                               Json{{"t", to_json(t)}, {"g", to_json(g)}, {"sigma", sigma}});
            });
            for (int m = 1; m <= 2; ++m)
                s.add(c.label + ": parameter square of differences m=" + std::to_string(m),
                      "the difference commutes with scaling one axis by a Dn(m) parameter", [&, n, m](Rng& rng) -> std::optional<Json> {
                          const Pair pr = random_pair(rng, fam, rng.uniform(1, 3));
                          const int i = rng.uniform(1, n);
                          const ObjectMap mu = maps::scale_axis_by_param(n, m, i);
                          const auto minus = [&fam](const TaylorElement& a, const TaylorElement& b) { return strong_minus(fam, a, b); };
                          return compare(slicewise(minus, reparam(pr.plus, mu), reparam(pr.minus, mu), fam.tangent),
                                         reparam(strong_minus(fam, pr.plus, pr.minus), maps::scale_line_by_param(fam.tangent, m, 1)),
                                         Json{{"plus", to_json(pr.plus)}, {"minus", to_json(pr.minus)}, {"axis", i}});
                      });
        }
        if (fam.family == Family::dn) {
            const int k = fam.order;
            s.add(c.label + ": homogeneity of differences", "(alpha g+) -. (alpha g-) = alpha^k (g+ -. g-)", [&, k](Rng& rng) -> std::optional<Json> {
                const Pair pr = random_pair(rng, fam, rng.uniform(1, 3));
                const Rational a = rng.rational();
                return compare(strong_minus(fam, scale_parameter(a, pr.plus), scale_parameter(a, pr.minus)),
                               fiber_scale(power(a, k), strong_minus(fam, pr.plus, pr.minus)),
                               Json{{"plus", to_json(pr.plus)}, {"minus", to_json(pr.minus)}, {"alpha", to_string(a)}});
            });
            for (int m = 1; m <= 2; ++m)
                s.add(c.label + ": parameter square of differences m=" + std::to_string(m),
                      "the difference commutes with multiplying the parameter by a Dn(m) parameter", [&, k, m](Rng& rng) -> std::optional<Json> {
                          const Pair pr = random_pair(rng, fam, rng.uniform(1, 3));
                          const ObjectMap times = maps::scale_line_by_param(fam.side, m, 1);
                          const auto minus = [&fam](const TaylorElement& a, const TaylorElement& b) { return strong_minus(fam, a, b); };
                          return compare(slicewise(minus, reparam(pr.plus, times), reparam(pr.minus, times), fam.tangent),
                                         reparam(strong_minus(fam, pr.plus, pr.minus), maps::scale_line_by_param(fam.tangent, m, k)),
                                         Json{{"plus", to_json(pr.plus)}, {"minus", to_json(pr.minus)}});
                      });
        }
    }
}

void prolongation_suite(const Suite& s)
{
    s.add("cube closed form matches axis peeling", "the set-partition formula equals the one-axis-at-a-time recursion",
          [](Rng& rng) -> std::optional<Json> {
              const JetShape sh = random_shape(rng, 1, 3);
              const JetCoord j = random_jet(rng, sh.p, sh.q, sh.order);
              const TaylorElement g = random_input(rng, SmallObject::dpow(sh.order), Vector(j.x().begin(), j.x().end()));
              return compare(apply_dpow(j, g), apply_first_iterated(j, g), Json{{"jet", to_json(j)}, {"input", to_json(g)}});
          });
    s.add("line and cube prolongations agree", "the line prolongation pulled back along the sum map is the cube prolongation",
          [](Rng& rng) -> std::optional<Json> {
              const JetShape sh = random_shape(rng, 1, 3);
              const JetCoord j = random_jet(rng, sh.p, sh.q, sh.order);
              const TaylorElement g = random_input(rng, SmallObject::dn(sh.order), Vector(j.x().begin(), j.x().end()));
              const ObjectMap sum = maps::sum(sh.order);
              return compare(apply_dpow(j, reparam(g, sum)), reparam(apply_dn(j, g), sum), Json{{"jet", to_json(j)}, {"input", to_json(g)}});
          });
    s.add("first-order lift", "the first approach lifts a tangent by sum_i y^i u_{I+i}", [](Rng& rng) -> std::optional<Json> {
        const JetShape sh = random_shape(rng, 1, 3);
        const JetCoord j = random_jet(rng, sh.p, sh.q, sh.order);
        const TaylorElement t = random_input(rng, SmallObject::d(), Vector(j.x().begin(), j.x().end()));
        const TaylorElement out = apply_first(j, t);
        // On Dpow(1), the cube prolongation of the projected jet must match the lift's (x, u) part.
        const JetCoord low = JetCoord::from_tuple(sh.p, sh.q, 1, [&] {
            Vector v = j.tuple();
            v.resize(JetCoord::tuple_length(sh.p, sh.q, 1));
            return v;
        }());
        const TaylorElement cube = apply_dpow(low, as_object(t, SmallObject::dpow(1)));
        const PolyMap head = PolyMap::projection(out.target_dim(), sh.p + sh.q);
        return compare(as_object(pushforward(head, out), SmallObject::dpow(1)), cube, Json{{"jet", to_json(j)}, {"input", to_json(t)}});
    });
}

void conversion_suite(const Suite& s)
{
    for (int n = 1; n <= 3; ++n) {
        const std::string tag = " (top degree " + std::to_string(n) + ")";
        const ObjectMap sum = maps::sum(n);
        const AffineFamily cube = dpow_family(n);
        const AffineFamily line = dn_family(n);
        const Rational scale = factorial(n);

        struct Setup {
            JetCoord plus;
            JetCoord minus;
            Operator cube_plus;
            Operator cube_minus;
            TaylorElement curve;
        };
        auto setup = [n](Rng& rng) {
            const JetShape sh = random_shape(rng, n, n);
            JetCoord minus = random_jet(rng, sh.p, sh.q, n);
            JetCoord plus = random_jet_over(rng, project(minus));
            Operator op_plus = theta(Rep::dpow, plus);
            Operator op_minus = theta(Rep::dpow, minus);
            TaylorElement curve = random_input(rng, SmallObject::dn(n), op_plus.point);
            return Setup{std::move(plus), std::move(minus), std::move(op_plus), std::move(op_minus), std::move(curve)};
        };

        s.add("difference compatibility" + tag, "psi(D+)(g) -. psi(D-)(g) = D+(W+ g) -. D-(W+ g)", [&, setup](Rng& rng) -> std::optional<Json> {
            const Setup st = setup(rng);
            const TaylorElement on_line = strong_minus(line, psi_operator(st.cube_plus)(st.curve), psi_operator(st.cube_minus)(st.curve));
            const TaylorElement on_cube = strong_minus(cube, st.cube_plus(reparam(st.curve, sum)), st.cube_minus(reparam(st.curve, sum)));
            return compare(on_line, on_cube, Json{{"plus", to_json(st.plus)}, {"minus", to_json(st.minus)}, {"curve", to_json(st.curve)}});
        });
        s.add("scaled difference compatibility" + tag, "n! (psi(D+)(g) -. psi(D-)(g)) = D+(W+ g) -. D-(W+ g)",
              [&, setup](Rng& rng) -> std::optional<Json> {
                  const Setup st = setup(rng);
                  const TaylorElement on_line =
                      strong_minus(line, psi_operator(st.cube_plus)(st.curve), psi_operator(st.cube_minus)(st.curve));
                  const TaylorElement on_cube =
                      strong_minus(cube, st.cube_plus(reparam(st.curve, sum)), st.cube_minus(reparam(st.curve, sum)));
                  return compare(fiber_scale(scale, on_line), on_cube, Json{{"plus", to_json(st.plus)}, {"minus", to_json(st.minus)}});
              });

        auto translation = [&, setup](Rng& rng, const Rational& line_weight) -> std::optional<Json> {
            const Setup st = setup(rng);
            const Operator& op = st.cube_plus;
            const Operator on_line = psi_operator(op);
            const TaylorElement t = random_input(rng, SmallObject::d(), op.point);
            const TaylorElement line_tangent =
                as_object(project_to(on_line, 1)(as_object(t, SmallObject::dn(1))), SmallObject::d());
            const TaylorElement cube_tangent =
                as_object(project_to(op, 1)(as_object(t, SmallObject::dpow(1))), SmallObject::d());
            const TaylorElement lhs = reparam(strong_plus(line, fiber_scale(line_weight, line_tangent), on_line(st.curve)), sum);
            const TaylorElement rhs = strong_plus(cube, cube_tangent, op(reparam(st.curve, sum)));
            return compare(lhs, rhs, Json{{"jet", to_json(st.plus)}, {"tangent", to_json(t)}, {"curve", to_json(st.curve)}});
        };
        s.add("translation compatibility" + tag, "W+(pi_1(psi D)(t) +. psi(D)(g)) = pi_1(D)(t) +. D(W+ g)",
              [translation](Rng& rng) { return translation(rng, Rational(1)); });
        s.add("scaled translation compatibility" + tag, "W+(pi_1(psi D)(t)/n! +. psi(D)(g)) = pi_1(D)(t) +. D(W+ g)",
              [translation, scale](Rng& rng) { return translation(rng, 1 / scale); });

        s.add("curve difference compatibility" + tag, "g+ -. g- on the line equals W+ g+ -. W+ g- on the cube",
              [&](Rng& rng) -> std::optional<Json> {
                  const Pair pr = random_pair(rng, line, rng.uniform(1, 3));
                  return compare(strong_minus(line, pr.plus, pr.minus), strong_minus(cube, reparam(pr.plus, sum), reparam(pr.minus, sum)),
                                 Json{{"plus", to_json(pr.plus)}, {"minus", to_json(pr.minus)}});
              });
        s.add("scaled curve difference compatibility" + tag, "n! (g+ -. g-) on the line equals W+ g+ -. W+ g- on the cube",
              [&](Rng& rng) -> std::optional<Json> {
                  const Pair pr = random_pair(rng, line, rng.uniform(1, 3));
                  return compare(fiber_scale(scale, strong_minus(line, pr.plus, pr.minus)),
                                 strong_minus(cube, reparam(pr.plus, sum), reparam(pr.minus, sum)),
                                 Json{{"plus", to_json(pr.plus)}, {"minus", to_json(pr.minus)}});
              });
        s.add("curve translation compatibility" + tag, "W+(t +. g) = t +. W+ g", [&](Rng& rng) -> std::optional<Json> {
            const TaylorElement g = random_element(rng, line.side, rng.uniform(1, 3));
            const TaylorElement t = random_tangent(rng, line, g);
            return compare(reparam(strong_plus(line, t, g), sum), strong_plus(cube, t, reparam(g, sum)),
                           Json{{"t", to_json(t)}, {"g", to_json(g)}});
        });
        s.add("scaled curve translation compatibility" + tag, "W+(t +. g) = (n! t) +. W+ g", [&](Rng& rng) -> std::optional<Json> {
            const TaylorElement g = random_element(rng, line.side, rng.uniform(1, 3));
            const TaylorElement t = random_tangent(rng, line, g);
            return compare(reparam(strong_plus(line, t, g), sum), strong_plus(cube, fiber_scale(scale, t), reparam(g, sum)),
                           Json{{"t", to_json(t)}, {"g", to_json(g)}});
        });
        s.add("affine morphism" + tag, "psi(omega +. D) = phi(omega) +. psi(D) with phi(omega) = omega . W+",
              [&, setup](Rng& rng) -> std::optional<Json> {
                  const Setup st = setup(rng);
                  const SymFormCoord f = random_symform_at(rng, st.plus);
                  const FormOperator omega = theta_form(Rep::dpow, f);
                  const TaylorElement lhs = psi_operator(operator_plus(omega, st.cube_plus))(st.curve);
                  const TaylorElement rhs = operator_plus(restrict_to_line(omega), psi_operator(st.cube_plus))(st.curve);
                  return compare(lhs, rhs, Json{{"jet", to_json(st.plus)}, {"form", to_json(f)}, {"curve", to_json(st.curve)}});
              });
        s.add("scaled affine morphism" + tag, "psi(omega +. D) = (phi(omega)/n!) +. psi(D)", [&, setup, scale](Rng& rng) -> std::optional<Json> {
            const Setup st = setup(rng);
            const SymFormCoord f = random_symform_at(rng, st.plus);
            const FormOperator omega = theta_form(Rep::dpow, f);
            const TaylorElement lhs = psi_operator(operator_plus(omega, st.cube_plus))(st.curve);
            FormOperator scaled = restrict_to_line(omega);
            scaled.fn = [inner = scaled.fn, scale](const TaylorElement& g) { return fiber_scale(1 / scale, inner(g)); };
            const TaylorElement rhs = operator_plus(scaled, psi_operator(st.cube_plus))(st.curve);
            return compare(lhs, rhs, Json{{"jet", to_json(st.plus)}, {"form", to_json(f)}, {"curve", to_json(st.curve)}});
        });
        if (n >= 2)
            s.add("line square" + tag, "psi(pi(D)) = pi(psi(D))", [&, setup](Rng& rng) -> std::optional<Json> {
                const Setup st = setup(rng);
                const TaylorElement g = random_input(rng, SmallObject::dn(n - 1), st.cube_plus.point);
                return compare(psi_operator(project(st.cube_plus))(g), project(psi_operator(st.cube_plus))(g),
                               Json{{"jet", to_json(st.plus)}, {"input", to_json(g)}});
            });
        s.add("cube triangle" + tag, "phi(theta_first(j)) = theta_dpow(j) on every probe", [n](Rng& rng) -> std::optional<Json> {
            const JetShape sh = random_shape(rng, n, n);
            const JetCoord j = random_jet(rng, sh.p, sh.q, n);
            const Operator via_first = phi_operator(theta(Rep::first, j));
            const Operator direct = theta(Rep::dpow, j);
            for (const TaylorElement& g : canonical_probes(Rep::dpow, sh.p, sh.q, n, direct.point))
                if (auto ce = compare(via_first(g), direct(g), Json{{"jet", to_json(j)}, {"input", to_json(g)}})) return ce;
            return std::nullopt;
        });
        s.add("line triangle" + tag, "psi(theta_dpow(j)) = theta_dn(j) on every probe", [n](Rng& rng) -> std::optional<Json> {
            const JetShape sh = random_shape(rng, n, n);
            const JetCoord j = random_jet(rng, sh.p, sh.q, n);
            const Operator via_cube = psi_operator(theta(Rep::dpow, j));
            const Operator direct = theta(Rep::dn, j);
            for (const TaylorElement& g : canonical_probes(Rep::dn, sh.p, sh.q, n, direct.point))
                if (auto ce = compare(via_cube(g), direct(g), Json{{"jet", to_json(j)}, {"input", to_json(g)}})) return ce;
            return std::nullopt;
        });
    }
}

void perturb_second(Rng& rng, IteratedJet2& j, int& a, int& b)
{
    const int p = j.p();
    a = rng.uniform(0, p - 1);
    do b = rng.uniform(0, p - 1);
    while (b == a);
    const int c = rng.uniform(0, j.q() - 1);
    j.second(a, b)[static_cast<std::size_t>(c)] += rng.nonzero_rational();
}

void holonomy_suite(const Suite& s)
{
    s.add("holonomic data exchange", "symmetric data pass both predicates and the two evaluation orders agree",
          [](Rng& rng) -> std::optional<Json> {
              const JetCoord base = random_jet(rng, rng.uniform(1, 3), rng.uniform(1, 2), 2);
              const IteratedJet2 j = from_jet(base);
              const TaylorElement g = random_input(rng, SmallObject::dpow(2), Vector(j.x().begin(), j.x().end()));
              const ExchangePair e = exchange_evaluations(j, g);
              return expect(is_semiholonomic(j) && is_holonomic(j) && e.lift_first_axis == e.lift_second_axis &&
                                passes_exchange_test(j),
                            Json{{"jet", to_json(j)}, {"input", to_json(g)}});
          });
    s.add("asymmetric data fail the exchange", "perturbing u_{a;b} off the symmetric subspace breaks holonomy and the exchange",
          [](Rng& rng) -> std::optional<Json> {
              IteratedJet2 j = from_jet(random_jet(rng, rng.uniform(2, 3), rng.uniform(1, 2), 2));
              int a = 0;
              int b = 0;
              perturb_second(rng, j, a, b);
              return expect(is_semiholonomic(j) && !is_holonomic(j) && !passes_exchange_test(j), Json{{"jet", to_json(j)}});
          });
    s.add("exchange defect", "the two orders differ at d1 d2 by sum y1^a y2^b (u_{b;a} - u_{a;b})", [](Rng& rng) -> std::optional<Json> {
        const IteratedJet2 j = random_iterated_jet(rng, rng.uniform(1, 3), rng.uniform(1, 2));
        const TaylorElement g = random_input(rng, SmallObject::dpow(2), Vector(j.x().begin(), j.x().end()));
        const ExchangePair e = exchange_evaluations(j, g);
        const int p = j.p();
        const auto y1 = g.coeff_of({1, 0});
        const auto y2 = g.coeff_of({0, 1});
        for (int c = 0; c < j.q(); ++c) {
            Rational expected = 0;
            for (int a = 0; a < p; ++a)
                for (int b = 0; b < p; ++b)
                    expected += y1[static_cast<std::size_t>(a)] * y2[static_cast<std::size_t>(b)] *
                                (j.second(b, a)[static_cast<std::size_t>(c)] - j.second(a, b)[static_cast<std::size_t>(c)]);
            const Rational got = e.lift_first_axis.coeff_of({1, 1})[static_cast<std::size_t>(p + c)] -
                                 e.lift_second_axis.coeff_of({1, 1})[static_cast<std::size_t>(p + c)];
            if (got != expected) return Json{{"jet", to_json(j)}, {"input", to_json(g)}};
        }
        return std::nullopt;
    });
    s.add("semiholonomic predicate", "u_{;i} = u_i exactly when the lift of u agrees with the base first jet in every direction",
          [](Rng& rng) -> std::optional<Json> {
              IteratedJet2 j = random_iterated_jet(rng, rng.uniform(1, 3), rng.uniform(1, 2));
              if (rng.coin())
                  for (int i = 0; i < j.p(); ++i)
                      std::copy(j.base_derivative(i).begin(), j.base_derivative(i).end(), j.lifted_derivative(i).begin());
              // The d1 coefficient uses u_{;i} in one order and u_i in the other.
              bool related = true;
              for (int i = 0; i < j.p(); ++i) {
                  TaylorElement g = TaylorElement::constant(SmallObject::dpow(2), j.x());
                  g.coeff_of({1, 0})[static_cast<std::size_t>(i)] = 1;
                  g.coeff_of({0, 1})[static_cast<std::size_t>(i)] = 1;
                  const ExchangePair e = exchange_evaluations(j, g);
                  related = related && std::ranges::equal(e.lift_first_axis.coeff_of({1, 0}), e.lift_second_axis.coeff_of({1, 0}));
              }
              return expect(related == is_semiholonomic(j), Json{{"jet", to_json(j)}});
          });
}

template <typename Fn>
void for_reps(Fn&& fn)
{
    for (Rep rep : {Rep::first, Rep::dpow, Rep::dn}) fn(rep);
}

void bijectivity_suite(const Suite& s)
{
    for_reps([&](Rep rep) {
        const int min_order = rep == Rep::first ? 1 : 0;
        const std::string tag = " (" + to_string(rep) + ")";
        s.add("reconstruction inverts theta" + tag, "reconstruct(theta(j)) = j", [rep, min_order](Rng& rng) -> std::optional<Json> {
            const JetShape sh = random_shape(rng, min_order, 3);
            const JetCoord j = random_jet(rng, sh.p, sh.q, sh.order);
            return expect(reconstruct(theta(rep, j)) == j, Json{{"jet", to_json(j)}});
        });
        s.add("tables determine the operator" + tag, "reconstruction from the probe table gives back j", [rep, min_order](Rng& rng) -> std::optional<Json> {
            const JetShape sh = random_shape(rng, min_order, 3);
            const JetCoord j = random_jet(rng, sh.p, sh.q, sh.order);
            return expect(reconstruct(from_table(tabulate(theta(rep, j)))) == j, Json{{"jet", to_json(j)}});
        });
        s.add("reconstruction on dense inputs" + tag, "the reconstructed operator agrees with the original on random inputs",
              [rep, min_order](Rng& rng) -> std::optional<Json> {
                  const JetShape sh = random_shape(rng, min_order, 3);
                  const JetCoord j = random_jet(rng, sh.p, sh.q, sh.order);
                  const Operator op = theta(rep, j);
                  const Operator again = theta(rep, reconstruct(op));
                  const TaylorElement g = random_input(rng, op.input_object(), op.point);
                  return compare(again(g), op(g), Json{{"jet", to_json(j)}, {"input", to_json(g)}});
              });
        s.add("theta is injective" + tag, "distinct jets give operators differing on some probe", [rep, min_order](Rng& rng) -> std::optional<Json> {
            const JetShape sh = random_shape(rng, min_order, 3);
            const JetCoord a = random_jet(rng, sh.p, sh.q, sh.order);
            JetCoord b = a;
            std::vector<Rational> t = b.tuple();
            const std::size_t pos = static_cast<std::size_t>(sh.p) + static_cast<std::size_t>(rng.uniform(0, static_cast<int>(t.size()) - sh.p - 1));
            t[pos] += rng.nonzero_rational();
            b = JetCoord::from_tuple(sh.p, sh.q, sh.order, t);
            const Operator oa = theta(rep, a);
            const Operator ob = theta(rep, b);
            for (const TaylorElement& g : canonical_probes(rep, sh.p, sh.q, sh.order, oa.point))
                if (!(oa(g) == ob(g))) return std::nullopt;
            return Json{{"a", to_json(a)}, {"b", to_json(b)}};
        });
    });
    for (Rep rep : {Rep::dpow, Rep::dn})
        s.add("form reconstruction (" + to_string(rep) + ")", "reconstruct(theta_form(s)) = s", [rep](Rng& rng) -> std::optional<Json> {
            const SymFormCoord f = random_symform(rng, rng.uniform(1, 2), rng.uniform(1, 2), rng.uniform(1, 3));
            return expect(reconstruct(theta_form(rep, f)) == f, Json{{"form", to_json(f)}});
        });
}

// Fixed inputs drawn from a stream of their own, so that a suite validates
// the same operators whatever the trial count.
Rng fixture_rng(std::uint64_t seed, const std::string& tag) { return Rng::for_trial(seed, "fixture " + tag, 0); }

void prefix_merge(Report& into, Report part, const std::string& prefix)
{
    for (PropertyResult& r : part.properties) r.name = prefix + r.name;
    into.merge(part);
}

void forms_suite(const Suite& s)
{
    for (Rep rep : {Rep::dpow, Rep::dn})
        s.add("differences are coordinate forms (" + to_string(rep) + ")", "theta(j+) -. theta(j-) = theta_form(j+ - j-)",
              [rep](Rng& rng) -> std::optional<Json> {
                  const JetShape sh = random_shape(rng, 1, 3);
                  const JetCoord minus = random_jet(rng, sh.p, sh.q, sh.order);
                  const JetCoord plus = random_jet_over(rng, project(minus));
                  const FormOperator diff = operator_minus(theta(rep, plus), theta(rep, minus));
                  const TaylorElement g = random_input(rng, diff.input_object(), Vector(plus.x().begin(), plus.x().end()));
                  return compare(diff(g), apply_form(rep, jet_minus(plus, minus), g),
                                 Json{{"plus", to_json(plus)}, {"minus", to_json(minus)}, {"input", to_json(g)}});
              });
    for (Rep rep : {Rep::dpow, Rep::dn})
        s.add("translations are coordinate translations (" + to_string(rep) + ")", "theta_form(s) +. theta(j) = theta(s + j)",
              [rep](Rng& rng) -> std::optional<Json> {
                  const JetShape sh = random_shape(rng, 1, 3);
                  const JetCoord j = random_jet(rng, sh.p, sh.q, sh.order);
                  const SymFormCoord f = random_symform_at(rng, j);
                  const Operator moved = operator_plus(theta_form(rep, f), theta(rep, j));
                  const TaylorElement g = random_input(rng, moved.input_object(), moved.point);
                  return compare(moved(g), theta(rep, jet_plus(f, j))(g), Json{{"jet", to_json(j)}, {"form", to_json(f)}});
              });
    s.add("restricted cube forms", "a cube form restricted to the line is n! times the line form of the same coordinates",
          [](Rng& rng) -> std::optional<Json> {
              const SymFormCoord f = random_symform(rng, rng.uniform(1, 2), rng.uniform(1, 2), rng.uniform(1, 3));
              const FormOperator restricted = restrict_to_line(theta_form(Rep::dpow, f));
              const TaylorElement g = random_input(rng, restricted.input_object(), Vector(f.x().begin(), f.x().end()));
              return compare(restricted(g), fiber_scale(factorial(f.degree()), apply_form(Rep::dn, f, g)), Json{{"form", to_json(f)}});
          });

    for (int n = 1; n <= 3; ++n)
        for (Rep rep : {Rep::dpow, Rep::dn}) {
            const std::string tag = to_string(rep) + " order " + std::to_string(n);
            Rng rng = fixture_rng(s.seed, "forms " + tag);
            const JetShape sh{rng.uniform(1, 2), rng.uniform(1, 2), n};
            const JetCoord minus = random_jet(rng, sh.p, sh.q, n);
            const JetCoord plus = random_jet_over(rng, project(minus));
            const FormOperator diff = operator_minus(theta(rep, plus), theta(rep, minus));
            prefix_merge(s.report, validate_form(diff, s.trials, s.seed), "difference form " + tag + ": ");
            const Operator moved = operator_plus(diff, theta(rep, minus));
            if (rep == Rep::dpow) {
                prefix_merge(s.report, validate_pseudotangential(moved, s.trials, s.seed), "translated operator " + tag + ": ");
                prefix_merge(s.report, validate_form(restrict_to_line(diff), s.trials, s.seed), "restricted form " + tag + ": ");
            } else {
                prefix_merge(s.report, validate_line_tangential(moved, s.trials, s.seed), "translated operator " + tag + ": ");
            }
        }
}

void tangential_suite(const Suite& s)
{
    for (int n = 1; n <= 3; ++n) {
        const std::string tag = "order " + std::to_string(n);
        Rng rng = fixture_rng(s.seed, "tangential " + tag);
        const JetCoord j = random_jet(rng, rng.uniform(1, 2), rng.uniform(1, 2), n);
        prefix_merge(s.report, validate_pseudotangential(theta(Rep::dpow, j), s.trials, s.seed), "cube operator " + tag + ": ");
        prefix_merge(s.report, validate_pseudotangential(phi_operator(theta(Rep::first, j)), s.trials, s.seed),
                     "operator from the first approach " + tag + ": ");
        prefix_merge(s.report, validate_line_tangential(theta(Rep::dn, j), s.trials, s.seed), "line operator " + tag + ": ");
        prefix_merge(s.report, validate_line_tangential(psi_operator(theta(Rep::dpow, j)), s.trials, s.seed),
                     "operator from the cube " + tag + ": ");
    }
}

void dimensions_suite(const Suite& s)
{
    bool ok = true;
    Json failures = Json::array();
    for (int p = 1; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            for (int n = 1; n <= 4; ++n) {
                std::size_t blocks = 0;
                for (int k = 1; k <= n; ++k) blocks += binomial(p + k - 1, k);
                const std::size_t top = binomial(p + n, n + 1);
                const bool here = SmallObject::dsym(p, n).dim() * static_cast<std::size_t>(p + q) == static_cast<std::size_t>(p + q) * (1 + blocks) &&
                                  JetCoord::tuple_length(p, q, n) == static_cast<std::size_t>(p + q) + static_cast<std::size_t>(q) * blocks &&
                                  SmallObject::dmany(static_cast<int>(top)).dim() * static_cast<std::size_t>(p + q) ==
                                      static_cast<std::size_t>(p + q) * (1 + top) &&
                                  SymFormCoord::tuple_length(p, q, n + 1) == static_cast<std::size_t>(p + q) + static_cast<std::size_t>(q) * top;
                if (!here) failures.push_back(Json{{"p", p}, {"q", q}, {"n", n}});
                ok = ok && here;
            }
    s.fact("coordinate lengths", "basis sizes match the tuple lengths of jets, forms and their microshapes", ok,
           Json{{"cases", std::move(failures)}});
}

using SuiteFn = void (*)(const Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> all{
        {"combinatorics", combinatorics_suite}, {"weil", weil_suite},
        {"affine", affine_suite},               {"quasicolimit", quasicolimit_suite},
        {"naturality", naturality_suite},       {"prolongation", prolongation_suite},
        {"conversion", conversion_suite},       {"holonomy", holonomy_suite},
        {"bijectivity", bijectivity_suite},     {"forms", forms_suite},
        {"tangential", tangential_suite},       {"dimensions", dimensions_suite},
    };
    return all;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        out.emplace_back("all");
        return out;
    }();
    return names;
}

Report run_suite(std::string_view name, int trials, std::uint64_t seed)
{
    if (trials < 1) throw PreconditionError("a suite needs at least one trial");
    Report report{std::string(name), trials, seed, {}};
    const Suite s{report, trials, seed};
    bool found = false;
    for (const auto& [suite_name, fn] : registry())
        if (name == "all" || name == suite_name) {
            fn(s);
            found = true;
        }
    if (!found) throw SchemaError("unknown suite '" + std::string(name) + "'");
    return report;
}

}  // namespace jetkit
