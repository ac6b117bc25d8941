// One line per acceptance criterion. All comparisons are exact over the
// rationals; the only pinned parameters are trial counts and seeds.

#include "jetkit/approaches.hpp"
#include "jetkit/random.hpp"
#include "jetkit/suites.hpp"

#include "oracles.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

using namespace jetkit;

namespace {

constexpr std::uint64_t kSeed = 20261014;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string failures_of(const Report& r, std::size_t limit = 4)
{
    std::string out;
    std::size_t shown = 0;
    std::size_t failed = 0;
    for (const PropertyResult& p : r.properties) {
        if (p.pass) continue;
        if (shown++ < limit) out += (out.empty() ? "" : "; ") + p.name;
        ++failed;
    }
    if (failed > limit) out += "; ...";
    return std::to_string(r.properties.size() - failed) + "/" + std::to_string(r.properties.size()) + " properties pass" +
           (out.empty() ? "" : " (failing: " + out + ")");
}

Outcome suite_outcome(const std::string& name, int trials)
{
    const Report r = run_suite(name, trials, kSeed);
    return {r.all_pass(), failures_of(r)};
}

// 1: curve prolongation against truncated power series composition.
Outcome faa_di_bruno()
{
    constexpr int kTrials = 100;
    int checked = 0;
    for (int n = 1; n <= 4; ++n)
        for (int t = 0; t < kTrials; ++t) {
            Rng rng = Rng::for_trial(kSeed, "faa di bruno n=" + std::to_string(n), static_cast<std::uint64_t>(t));
            const JetCoord j = random_jet(rng, 1, 1, n);
            const TaylorElement curve = random_element(rng, SmallObject::dn(n), 1, j.x());
            if (!(apply_dn(j, curve) == oracle::compose_series(j, curve)))
                return {false, "mismatch at n=" + std::to_string(n) + " trial " + std::to_string(t)};
            ++checked;
        }
    return {true, std::to_string(checked) + " jets, n = 1..4"};
}

// 2: cube prolongation against the axis-peeling recursion, plus the
// displayed second-order coefficient.
Outcome set_partition_formula()
{
    constexpr int kTrials = 100;
    int checked = 0;
    for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 2; ++q)
            for (int n = 2; n <= 3; ++n)
                for (int t = 0; t < kTrials; ++t) {
                    Rng rng = Rng::for_trial(kSeed, "set partitions " + std::to_string(p) + std::to_string(q) + std::to_string(n),
                                             static_cast<std::uint64_t>(t));
                    const JetCoord j = random_jet(rng, p, q, n);
                    const TaylorElement g = random_element(rng, SmallObject::dpow(n), p, j.x());
                    const TaylorElement out = apply_dpow(j, g);
                    if (!(out == oracle::cube_by_peeling(j, g)) || !(out == apply_first_iterated(j, g)))
                        return {false, "mismatch at p=" + std::to_string(p) + " q=" + std::to_string(q) + " n=" + std::to_string(n)};
                    if (n == 2)
                        for (int c = 0; c < q; ++c) {
                            Rational expected = 0;
                            for (int a = 0; a < p; ++a) {
                                MultiIndex ea(static_cast<std::size_t>(p), 0);
                                ea[static_cast<std::size_t>(a)] = 1;
                                expected += g.coeff_of({1, 1})[static_cast<std::size_t>(a)] * j.derivative(ea)[static_cast<std::size_t>(c)];
                                for (int b = 0; b < p; ++b) {
                                    MultiIndex eab = ea;
                                    ++eab[static_cast<std::size_t>(b)];
                                    expected += g.coeff_of({1, 0})[static_cast<std::size_t>(a)] * g.coeff_of({0, 1})[static_cast<std::size_t>(b)] *
                                                j.derivative(eab)[static_cast<std::size_t>(c)];
                                }
                            }
                            if (out.coeff_of({1, 1})[static_cast<std::size_t>(p + c)] != expected)
                                return {false, "second-order display mismatch"};
                        }
                    ++checked;
                }
    return {true, std::to_string(checked) + " jets, p,q in {1,2}, n in {2,3}"};
}

// 6: the conversion statements as literally stated, with the n!-scaled
// relations reported alongside.
Outcome conversion()
{
    constexpr int kTrials = 100;
    const Report r = run_suite("conversion", kTrials, kSeed);
    Report literal{r.suite, r.trials, r.seed, {}};
    Report scaled{r.suite, r.trials, r.seed, {}};
    for (const PropertyResult& p : r.properties) {
        const bool in_criterion = p.name.starts_with("difference compatibility") || p.name.starts_with("translation compatibility") ||
                                  p.name.starts_with("line square") || p.name.starts_with("cube triangle") ||
                                  p.name.starts_with("line triangle");
        if (in_criterion) literal.properties.push_back(p);
        if (p.name.starts_with("scaled difference") || p.name.starts_with("scaled translation")) scaled.properties.push_back(p);
    }
    return {literal.all_pass(), failures_of(literal) + "; with the n! factor: " + failures_of(scaled)};
}

// 10: basis sizes against the closed-form lengths.
Outcome dimensions()
{
    int checked = 0;
    for (int p = 1; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            for (int n = 0; n <= 4; ++n) {
                const auto count = [](std::size_t v) { return Rational(static_cast<unsigned long>(v)); };
                const int top = static_cast<int>(binomial(p + n, n + 1));
                const TaylorElement jet = embed(JetCoord(p, q, n));
                const TaylorElement form = embed(SymFormCoord(p, q, n + 1));
                const bool ok = count(jet.object().dim() * static_cast<std::size_t>(p + q)) == oracle::dsym_element_length(p, q, n) &&
                                count(JetCoord::tuple_length(p, q, n)) == oracle::jet_length(p, q, n) &&
                                form.object() == SmallObject::dmany(top) &&
                                count(form.object().dim() * static_cast<std::size_t>(p + q)) == oracle::dmany_element_length(p, q, n) &&
                                count(SymFormCoord::tuple_length(p, q, n + 1)) == oracle::form_length(p, q, n);
                if (!ok) return {false, "mismatch at p=" + std::to_string(p) + " q=" + std::to_string(q) + " n=" + std::to_string(n)};
                ++checked;
            }
    return {true, std::to_string(checked) + " shapes, p <= 3, q <= 3, n <= 4"};
}

}  // namespace

int main()
{
    struct Criterion {
        const char* label;
        Outcome (*run)();
    };
    const std::vector<Criterion> criteria{
        {"1 Faa di Bruno oracle", faa_di_bruno},
        {"2 set-partition closed form vs recursion", set_partition_formula},
        {"3 affine torsor laws", [] { return suite_outcome("affine", 200); }},
        {"4 quasi-colimit solvability", [] { return suite_outcome("quasicolimit", 200); }},
        {"5 naturality and equivariance", [] { return suite_outcome("naturality", 100); }},
        {"6 conversion compatibility", conversion},
        {"7 holonomy exchange", [] { return suite_outcome("holonomy", 100); }},
        {"8 bijectivity", [] { return suite_outcome("bijectivity", 50); }},
        {"9 symmetric-form laws", [] { return suite_outcome("forms", 100); }},
        {"10 dimension counts", dimensions},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS " : "FAIL ") << c.label << ": " << o.detail << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
