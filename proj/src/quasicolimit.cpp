#include "jetkit/quasicolimit.hpp"

#include "jetkit/errors.hpp"
#include "jetkit/maps.hpp"

#include <algorithm>

namespace jetkit {

PushoutSpec::PushoutSpec(std::string name_, ObjectMap c2l, ObjectMap c2r, ObjectMap l2a, ObjectMap r2a)
    : name(std::move(name_)),
      corner_to_left(std::move(c2l)),
      corner_to_right(std::move(c2r)),
      left_to_apex(std::move(l2a)),
      right_to_apex(std::move(r2a))
{
    if (!(corner_to_left.source() == corner_to_right.source()) || !(corner_to_left.target() == left_to_apex.source()) ||
        !(corner_to_right.target() == right_to_apex.source()) || !(left_to_apex.target() == right_to_apex.target()))
        throw PreconditionError(name + ": maps do not form a square");
    if (!same_map(compose(left_to_apex, corner_to_left), compose(right_to_apex, corner_to_right)))
        throw PreconditionError(name + ": square does not commute");
}

namespace {

Matrix stacked_pullbacks(const PushoutSpec& spec)
{
    return spec.left_to_apex.induced_coeff_map().stacked(spec.right_to_apex.induced_coeff_map());
}

}  // namespace

bool is_quasi_colimit(const PushoutSpec& spec)
{
    const Matrix& cl = spec.corner_to_left.induced_coeff_map();
    const Matrix& cr = spec.corner_to_right.induced_coeff_map();
    // Fibre product {(a, b) : cl a = cr b} has dimension left + right - rank[cl | -cr].
    Matrix joint(cl.rows(), cl.cols() + cr.cols());
    for (std::size_t r = 0; r < cl.rows(); ++r) {
        for (std::size_t c = 0; c < cl.cols(); ++c) joint(r, c) = cl(r, c);
        for (std::size_t c = 0; c < cr.cols(); ++c) joint(r, cl.cols() + c) = -cr(r, c);
    }
    const std::size_t fibre_dim = cl.cols() + cr.cols() - rank(joint);
    const std::size_t apex_dim = spec.apex().dim();
    return rank(stacked_pullbacks(spec)) == apex_dim && apex_dim == fibre_dim;
}

TaylorElement solve_pair(const PushoutSpec& spec, const TaylorElement& on_left, const TaylorElement& on_right)
{
    if (!(on_left.object() == spec.left_to_apex.source()) || !(on_right.object() == spec.right_to_apex.source()))
        throw PreconditionError(spec.name + ": operands are over the wrong objects");
    if (on_left.target_dim() != on_right.target_dim())
        throw PreconditionError(spec.name + ": operands have different target dimensions");
    if (!(reparam(on_left, spec.corner_to_left) == reparam(on_right, spec.corner_to_right)))
        throw PreconditionError(spec.name + ": operands disagree on the common corner");

    const int m = on_left.target_dim();
    const std::size_t nl = on_left.object().dim();
    const std::size_t nr = on_right.object().dim();
    Matrix rhs(nl + nr, static_cast<std::size_t>(m));
    for (std::size_t r = 0; r < nl; ++r)
        for (int k = 0; k < m; ++k) rhs(r, static_cast<std::size_t>(k)) = on_left.at(r, k);
    for (std::size_t r = 0; r < nr; ++r)
        for (int k = 0; k < m; ++k) rhs(nl + r, static_cast<std::size_t>(k)) = on_right.at(r, k);

    const Solution sol = solve(stacked_pullbacks(spec), rhs);
    if (sol.status != SolveStatus::unique)
        throw InvariantError(spec.name + ": gluing system is " +
                             (sol.status == SolveStatus::inconsistent ? "inconsistent" : "not uniquely solvable"));
    TaylorElement out(spec.apex(), m);
    for (std::size_t r = 0; r < spec.apex().dim(); ++r)
        for (int k = 0; k < m; ++k) out.at(r, k) = sol.x(r, static_cast<std::size_t>(k));
    return out;
}

std::string to_string(Family f)
{
    switch (f) {
    case Family::dpow: return "dpow";
    case Family::dn: return "dn";
    case Family::dsym: return "dsym";
    }
    return "?";
}

namespace {

// Phi: side -> Wedge(side, tangent), the canonical injection.
// Psi: as Phi, but the tangent variables go to `top` monomials of the side.
AffineFamily assemble(Family family, int order, int p, const SmallObject& corner, const SmallObject& side,
                      const SmallObject& tangent, const std::vector<MultiIndex>& top)
{
    const SmallObject apex = SmallObject::wedge(side, tangent);
    const ObjectMap phi = maps::wedge_left(apex);
    const ObjectMap xi = maps::wedge_right(apex);

    std::vector<IntPoly> psi_comps;
    for (int v = 0; v < side.num_vars(); ++v) psi_comps.push_back(var_poly(side.num_vars(), v));
    for (const auto& mono : top) psi_comps.push_back(monomial_poly(mono));
    const ObjectMap psi(side, apex, std::move(psi_comps));

    const ObjectMap inclusion = maps::same_variables(corner, side);
    const std::string tag = to_string(family) + "(" + side.name() + ")";
    PushoutSpec minus(tag + " difference square", inclusion, inclusion, psi, phi);
    PushoutSpec plus(tag + " translation square", maps::from_point(tangent), maps::from_point(side), xi, phi);
    return AffineFamily{family, order, p, side, tangent, std::move(minus), std::move(plus), xi, psi};
}

}  // namespace

AffineFamily dpow_family(int n)
{
    if (n < 1) throw PreconditionError("dpow_family needs n >= 1");
    return assemble(Family::dpow, n, 1, SmallObject::dhole(n), SmallObject::dpow(n), SmallObject::d(),
                    {MultiIndex(static_cast<std::size_t>(n), 1)});
}

AffineFamily dn_family(int k)
{
    if (k < 1) throw PreconditionError("dn_family needs k >= 1");
    return assemble(Family::dn, k, 1, SmallObject::dn(k - 1), SmallObject::dn(k), SmallObject::d(), {{k}});
}

AffineFamily dsym_family(int p, int k)
{
    if (p < 1 || k < 1) throw PreconditionError("dsym_family needs p >= 1 and k >= 1");
    const auto top = symmetric_multi_indices(p, k);
    return assemble(Family::dsym, k, p, SmallObject::dsym(p, k - 1), SmallObject::dsym(p, k),
                    SmallObject::dmany(static_cast<int>(top.size())), top);
}

TaylorElement strong_minus(const AffineFamily& fam, const TaylorElement& plus, const TaylorElement& minus)
{
    return reparam(solve_pair(fam.minus, plus, minus), fam.xi);
}

TaylorElement strong_plus(const AffineFamily& fam, const TaylorElement& t, const TaylorElement& g)
{
    return reparam(solve_pair(fam.plus, t, g), fam.psi);
}

TaylorElement fiber_sum(const TaylorElement& s, const TaylorElement& t)
{
    if (!(s.object() == t.object()) || s.target_dim() != t.target_dim())
        throw PreconditionError("fiber_sum: operands have different shapes");
    if (!std::ranges::equal(s.coeff(0), t.coeff(0))) throw PreconditionError("fiber_sum: base points differ");
    TaylorElement out = s;
    for (std::size_t b = 1; b < s.object().dim(); ++b)
        for (int k = 0; k < s.target_dim(); ++k) out.at(b, k) += t.at(b, k);
    return out;
}

TaylorElement fiber_scale(const Rational& alpha, const TaylorElement& t)
{
    TaylorElement out = t;
    for (std::size_t b = 1; b < t.object().dim(); ++b)
        for (int k = 0; k < t.target_dim(); ++k) out.at(b, k) *= alpha;
    return out;
}

}  // namespace jetkit
