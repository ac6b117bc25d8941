#include "jetkit/json_io.hpp"

#include "jetkit/errors.hpp"

#include <algorithm>
#include <set>

namespace jetkit {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

std::vector<int> int_list(const Json& j, const char* what)
{
    if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const Json& e : j) {
        if (!e.is_number_integer()) throw SchemaError(std::string(what) + " must be an array of integers");
        out.push_back(e.get<int>());
    }
    return out;
}

Vector sized_vector(const Json& j, std::size_t n, const char* what)
{
    Vector v = vector_from_json(j);
    if (v.size() != n) throw SchemaError(std::string(what) + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(n));
    return v;
}

// Validates a 1-based non-decreasing index tuple of the given length.
MultiIndex index_from_json(const Json& j, int p, int degree, const char* what)
{
    const IndexTuple t = int_list(j, what);
    if (static_cast<int>(t.size()) != degree) throw SchemaError(std::string(what) + " has the wrong length");
    if (!std::is_sorted(t.begin(), t.end()) || (!t.empty() && (t.front() < 1 || t.back() > p)))
        throw SchemaError(std::string(what) + " must be non-decreasing labels in 1..p");
    return from_index_tuple(p, t);
}

Json index_json(const MultiIndex& m)
{
    Json out = Json::array();
    for (int l : to_index_tuple(m)) out.push_back(l);
    return out;
}

template <typename Fn>
auto guarded(Fn&& fn)
{
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(e.what());
    } catch (const PreconditionError& e) {
        throw SchemaError(e.what());
    }
}

}  // namespace

Json to_json(const Rational& r, const Format& fmt)
{
    if (fmt.decimal) return to_decimal(r, *fmt.decimal);
    return to_string(r);
}

Json to_json(std::span<const Rational> v, const Format& fmt)
{
    Json out = Json::array();
    for (const Rational& r : v) out.push_back(to_json(r, fmt));
    return out;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw SchemaError("rationals are \"p/q\" strings or integers");
}

Vector vector_from_json(const Json& j)
{
    if (!j.is_array()) throw SchemaError("expected an array of rationals");
    Vector v;
    for (const Json& e : j) v.push_back(rational_from_json(e));
    return v;
}

Json to_json(const TaylorElement& g, const Format& fmt)
{
    Json coeffs = Json::array();
    for (std::size_t b = 0; b < g.object().dim(); ++b)
        coeffs.push_back(Json::array({Json(g.object().basis()[b]), to_json(g.coeff(b), fmt)}));
    return Json{{"object", g.object().name()}, {"target_dim", g.target_dim()}, {"coeffs", std::move(coeffs)}};
}

TaylorElement taylor_from_json(const Json& j)
{
    return guarded([&] {
        const Json& obj_field = field(j, "object");
        if (!obj_field.is_string()) throw SchemaError("'object' must be a string");
        const SmallObject obj = SmallObject::parse(obj_field.get<std::string>());
        const int dim = int_field(j, "target_dim");
        if (dim < 0) throw SchemaError("'target_dim' must be non-negative");
        TaylorElement g(obj, dim);
        const Json& coeffs = field(j, "coeffs");
        if (!coeffs.is_array()) throw SchemaError("'coeffs' must be an array");
        std::set<std::size_t> seen;
        for (const Json& c : coeffs) {
            if (!c.is_array() || c.size() != 2) throw SchemaError("each coefficient is a [monomial, value] pair");
            const MultiIndex m = int_list(c[0], "monomial");
            if (static_cast<int>(m.size()) != obj.num_vars()) throw SchemaError("monomial has the wrong arity");
            const auto idx = obj.index_of(m);
            if (!idx) throw SchemaError("monomial is not in the basis of " + obj.name());
            if (!seen.insert(*idx).second) throw SchemaError("duplicate monomial");
            const Vector v = sized_vector(c[1], static_cast<std::size_t>(dim), "value");
            std::copy(v.begin(), v.end(), g.coeff(*idx).begin());
        }
        return g;
    });
}

Json to_json(const JetCoord& j, const Format& fmt)
{
    Json ders = Json::array();
    for (int k = 1; k <= j.order(); ++k)
        for (const MultiIndex& m : symmetric_multi_indices(j.p(), k))
            ders.push_back(Json{{"index", index_json(m)}, {"value", to_json(j.derivative(m), fmt)}});
    return Json{{"p", j.p()}, {"q", j.q()}, {"order", j.order()}, {"x", to_json(j.x(), fmt)},
                {"u", to_json(j.u(), fmt)}, {"derivatives", std::move(ders)}};
}

JetCoord jet_from_json(const Json& j)
{
    return guarded([&] {
        const int p = int_field(j, "p");
        const int q = int_field(j, "q");
        const int order = int_field(j, "order");
        if (p < 1 || q < 0 || order < 0) throw SchemaError("jet shape needs p >= 1, q >= 0, order >= 0");
        JetCoord out(p, q, order);
        const Vector x = sized_vector(field(j, "x"), static_cast<std::size_t>(p), "x");
        const Vector u = sized_vector(field(j, "u"), static_cast<std::size_t>(q), "u");
        std::copy(x.begin(), x.end(), out.x().begin());
        std::copy(u.begin(), u.end(), out.u().begin());
        if (j.contains("derivatives")) {
            const Json& ders = j.at("derivatives");
            if (!ders.is_array()) throw SchemaError("'derivatives' must be an array");
            std::set<MultiIndex> seen;
            for (const Json& d : ders) {
                const Json& idx = field(d, "index");
                if (!idx.is_array()) throw SchemaError("'index' must be an array");
                const int degree = static_cast<int>(idx.size());
                if (degree < 1 || degree > order) throw SchemaError("derivative index degree outside 1..order");
                const MultiIndex m = index_from_json(idx, p, degree, "index");
                if (!seen.insert(m).second) throw SchemaError("duplicate derivative index");
                const Vector v = sized_vector(field(d, "value"), static_cast<std::size_t>(q), "value");
                std::copy(v.begin(), v.end(), out.derivative(m).begin());
            }
        }
        return out;
    });
}

Json to_json(const SymFormCoord& s, const Format& fmt)
{
    Json entries = Json::array();
    for (const MultiIndex& m : symmetric_multi_indices(s.p(), s.degree()))
        entries.push_back(Json{{"index", index_json(m)}, {"value", to_json(s.entry(m), fmt)}});
    return Json{{"p", s.p()}, {"q", s.q()}, {"degree", s.degree()}, {"x", to_json(s.x(), fmt)},
                {"u", to_json(s.u(), fmt)}, {"entries", std::move(entries)}};
}

SymFormCoord symform_from_json(const Json& j)
{
    return guarded([&] {
        const int p = int_field(j, "p");
        const int q = int_field(j, "q");
        const int degree = int_field(j, "degree");
        if (p < 1 || q < 0 || degree < 1) throw SchemaError("form shape needs p >= 1, q >= 0, degree >= 1");
        SymFormCoord out(p, q, degree);
        const Vector x = sized_vector(field(j, "x"), static_cast<std::size_t>(p), "x");
        const Vector u = sized_vector(field(j, "u"), static_cast<std::size_t>(q), "u");
        std::copy(x.begin(), x.end(), out.x().begin());
        std::copy(u.begin(), u.end(), out.u().begin());
        if (j.contains("entries")) {
            const Json& entries = j.at("entries");
            if (!entries.is_array()) throw SchemaError("'entries' must be an array");
            std::set<MultiIndex> seen;
            for (const Json& e : entries) {
                const MultiIndex m = index_from_json(field(e, "index"), p, degree, "index");
                if (!seen.insert(m).second) throw SchemaError("duplicate entry index");
                const Vector v = sized_vector(field(e, "value"), static_cast<std::size_t>(q), "value");
                std::copy(v.begin(), v.end(), out.entry(m).begin());
            }
        }
        return out;
    });
}

Json to_json(const IteratedJet2& j, const Format& fmt)
{
    Json first = Json::array();
    Json lifted = Json::array();
    Json second = Json::array();
    for (int i = 0; i < j.p(); ++i) {
        first.push_back(to_json(j.base_derivative(i), fmt));
        lifted.push_back(to_json(j.lifted_derivative(i), fmt));
        Json row = Json::array();
        for (int k = 0; k < j.p(); ++k) row.push_back(to_json(j.second(i, k), fmt));
        second.push_back(std::move(row));
    }
    return Json{{"p", j.p()},          {"q", j.q()},           {"x", to_json(j.x(), fmt)}, {"u", to_json(j.u(), fmt)},
                {"first", std::move(first)}, {"lifted", std::move(lifted)}, {"second", std::move(second)}};
}

Json to_json(const OperatorTable& t, const Format& fmt)
{
    Json entries = Json::array();
    for (const auto& [in, out] : t.entries) entries.push_back(Json{{"input", to_json(in, fmt)}, {"output", to_json(out, fmt)}});
    return Json{{"rep", to_string(t.rep)}, {"p", t.p},         {"q", t.q}, {"order", t.order},
                {"point", to_json(std::span<const Rational>(t.point), fmt)}, {"entries", std::move(entries)}};
}

OperatorTable table_from_json(const Json& j)
{
    return guarded([&] {
        const Json& rep = field(j, "rep");
        if (!rep.is_string()) throw SchemaError("'rep' must be a string");
        OperatorTable t{parse_rep(rep.get<std::string>()), int_field(j, "p"), int_field(j, "q"), int_field(j, "order"),
                        vector_from_json(field(j, "point")), {}};
        if (t.p < 1 || t.q < 0 || t.order < 0) throw SchemaError("operator shape needs p >= 1, q >= 0, order >= 0");
        if (static_cast<int>(t.point.size()) != t.p) throw SchemaError("'point' must have p entries");
        const Json& entries = field(j, "entries");
        if (!entries.is_array()) throw SchemaError("'entries' must be an array");
        for (const Json& e : entries) t.entries.emplace_back(taylor_from_json(field(e, "input")), taylor_from_json(field(e, "output")));
        return t;
    });
}

Json error_json(std::string_view kind, std::string_view message)
{
    return Json{{"error", Json{{"kind", std::string(kind)}, {"message", std::string(message)}}}};
}

}  // namespace jetkit
