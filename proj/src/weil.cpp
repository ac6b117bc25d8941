#include "jetkit/weil.hpp"

#include "jetkit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>

namespace jetkit {

struct SmallObject::Node {
    Kind kind;
    int a = 0;
    int b = 0;
    std::optional<SmallObject> left;
    std::optional<SmallObject> right;
    int vars = 0;
    std::string name;
    std::vector<MultiIndex> basis;
    std::map<MultiIndex, std::size_t> index;

    mutable std::once_flag table_once;
    mutable std::vector<int> table;  // dim*dim, -1 for a vanishing product
};

namespace {

using Kind = SmallObject::Kind;

std::vector<MultiIndex> square_free_basis(int n)
{
    std::vector<MultiIndex> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        MultiIndex m(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), graded_less);
    return out;
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b)
{
    MultiIndex out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool all_zero(const MultiIndex& m)
{
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

}  // namespace

bool SmallObject::survives(const MultiIndex& m) const
{
    const Node& n = *node_;
    if (static_cast<int>(m.size()) != n.vars) throw PreconditionError("monomial arity does not match " + n.name);
    if (std::any_of(m.begin(), m.end(), [](int e) { return e < 0; }))
        throw PreconditionError("negative exponent");
    switch (n.kind) {
    case Kind::D: return m[0] <= 1;
    case Kind::Dn: return m[0] <= n.a;
    case Kind::Dpow: return std::all_of(m.begin(), m.end(), [](int e) { return e <= 1; });
    case Kind::Dsym: return total_degree(m) <= n.b;
    case Kind::DHole:
        return std::all_of(m.begin(), m.end(), [](int e) { return e <= 1; }) && total_degree(m) < n.a;
    case Kind::Dmany: return total_degree(m) <= 1;
    case Kind::Product:
    case Kind::Wedge: {
        const auto split = m.begin() + n.left->num_vars();
        const MultiIndex lm(m.begin(), split);
        const MultiIndex rm(split, m.end());
        if (n.kind == Kind::Product) return n.left->survives(lm) && n.right->survives(rm);
        if (all_zero(rm)) return n.left->survives(lm);
        return all_zero(lm) && n.right->survives(rm);
    }
    }
    return false;
}

std::optional<MultiIndex> SmallObject::reduce(const MultiIndex& m) const
{
    if (survives(m)) return m;
    return std::nullopt;
}

namespace {

std::shared_ptr<SmallObject::Node> make_node(Kind kind, int a, int b)
{
    auto n = std::make_shared<SmallObject::Node>();
    n->kind = kind;
    n->a = a;
    n->b = b;
    return n;
}

}  // namespace

// Shared tail of every constructor: derive the basis and its index.
static std::shared_ptr<const SmallObject::Node> finish(std::shared_ptr<SmallObject::Node> n)
{
    using K = SmallObject::Kind;
    switch (n->kind) {
    case K::D:
        n->vars = 1;
        n->name = "D";
        n->basis = {{0}, {1}};
        break;
    case K::Dn:
        n->vars = 1;
        n->name = "Dn(" + std::to_string(n->a) + ")";
        for (int e = 0; e <= n->a; ++e) n->basis.push_back({e});
        break;
    case K::Dpow:
        n->vars = n->a;
        n->name = "Dpow(" + std::to_string(n->a) + ")";
        n->basis = square_free_basis(n->a);
        break;
    case K::DHole:
        n->vars = n->a;
        n->name = "DHole(" + std::to_string(n->a) + ")";
        n->basis = square_free_basis(n->a);
        n->basis.pop_back();  // the full product sorts last
        break;
    case K::Dsym:
        n->vars = n->a;
        n->name = "Dsym(" + std::to_string(n->a) + "," + std::to_string(n->b) + ")";
        for (int k = 0; k <= n->b; ++k)
            for (auto& m : symmetric_multi_indices(n->a, k)) n->basis.push_back(std::move(m));
        break;
    case K::Dmany:
        n->vars = n->a;
        n->name = "Dmany(" + std::to_string(n->a) + ")";
        n->basis.emplace_back(static_cast<std::size_t>(n->a), 0);
        for (int i = 0; i < n->a; ++i) {
            MultiIndex m(static_cast<std::size_t>(n->a), 0);
            m[static_cast<std::size_t>(i)] = 1;
            n->basis.push_back(std::move(m));
        }
        break;
    case K::Product:
    case K::Wedge: {
        const SmallObject& l = *n->left;
        const SmallObject& r = *n->right;
        n->vars = l.num_vars() + r.num_vars();
        n->name = std::string(n->kind == K::Product ? "Product(" : "Wedge(") + l.name() + "," + r.name() + ")";
        const MultiIndex lzero(static_cast<std::size_t>(l.num_vars()), 0);
        const MultiIndex rzero(static_cast<std::size_t>(r.num_vars()), 0);
        if (n->kind == K::Product) {
            for (const auto& lm : l.basis())
                for (const auto& rm : r.basis()) n->basis.push_back(concat(lm, rm));
            std::sort(n->basis.begin(), n->basis.end(), graded_less);
        } else {
            for (const auto& lm : l.basis()) n->basis.push_back(concat(lm, rzero));
            for (const auto& rm : r.basis())
                if (!all_zero(rm)) n->basis.push_back(concat(lzero, rm));
        }
        break;
    }
    }
    for (std::size_t i = 0; i < n->basis.size(); ++i) n->index.emplace(n->basis[i], i);
    return n;
}

SmallObject SmallObject::d() { return SmallObject(finish(make_node(Kind::D, 0, 0))); }

SmallObject SmallObject::dn(int n)
{
    if (n < 0) throw PreconditionError("Dn needs n >= 0");
    return SmallObject(finish(make_node(Kind::Dn, n, 0)));
}

SmallObject SmallObject::dpow(int n)
{
    if (n < 0 || n > 16) throw PreconditionError("Dpow needs 0 <= n <= 16");
    return SmallObject(finish(make_node(Kind::Dpow, n, 0)));
}

SmallObject SmallObject::dsym(int p, int n)
{
    if (p < 1 || n < 0) throw PreconditionError("Dsym needs p >= 1 and n >= 0");
    return SmallObject(finish(make_node(Kind::Dsym, p, n)));
}

SmallObject SmallObject::dhole(int n)
{
    if (n < 1 || n > 16) throw PreconditionError("DHole needs 1 <= n <= 16");
    return SmallObject(finish(make_node(Kind::DHole, n, 0)));
}

SmallObject SmallObject::dmany(int k)
{
    if (k < 0) throw PreconditionError("Dmany needs k >= 0");
    return SmallObject(finish(make_node(Kind::Dmany, k, 0)));
}

SmallObject SmallObject::product(const SmallObject& a, const SmallObject& b)
{
    auto n = make_node(Kind::Product, 0, 0);
    n->left = a;
    n->right = b;
    return SmallObject(finish(std::move(n)));
}

SmallObject SmallObject::wedge(const SmallObject& a, const SmallObject& b)
{
    auto n = make_node(Kind::Wedge, 0, 0);
    n->left = a;
    n->right = b;
    return SmallObject(finish(std::move(n)));
}

SmallObject::Kind SmallObject::kind() const { return node_->kind; }
const std::string& SmallObject::name() const { return node_->name; }
int SmallObject::num_vars() const { return node_->vars; }
int SmallObject::first_param() const { return node_->a; }
int SmallObject::second_param() const { return node_->b; }

const SmallObject& SmallObject::left() const
{
    if (!node_->left) throw PreconditionError(name() + " has no factors");
    return *node_->left;
}

const SmallObject& SmallObject::right() const
{
    if (!node_->right) throw PreconditionError(name() + " has no factors");
    return *node_->right;
}

const std::vector<MultiIndex>& SmallObject::basis() const { return node_->basis; }

std::optional<std::size_t> SmallObject::index_of(const MultiIndex& m) const
{
    const auto it = node_->index.find(m);
    if (it == node_->index.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> SmallObject::product_index(std::size_t i, std::size_t j) const
{
    const Node& n = *node_;
    std::call_once(n.table_once, [&n] {
        const std::size_t dim = n.basis.size();
        n.table.assign(dim * dim, -1);
        for (std::size_t x = 0; x < dim; ++x)
            for (std::size_t y = 0; y < dim; ++y) {
                MultiIndex m = n.basis[x];
                for (std::size_t v = 0; v < m.size(); ++v) m[v] += n.basis[y][v];
                const auto it = n.index.find(m);
                if (it != n.index.end()) n.table[x * dim + y] = static_cast<int>(it->second);
            }
    });
    const int k = n.table[i * n.basis.size() + j];
    if (k < 0) return std::nullopt;
    return static_cast<std::size_t>(k);
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    SmallObject parse_all()
    {
        SmallObject obj = parse_object();
        skip_space();
        if (pos_ != text_.size()) fail("trailing characters");
        return obj;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw SchemaError("cannot parse object '" + std::string(text_) + "': " + why);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    std::string identifier()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    int integer()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_ || pos_ - start > 6) fail("expected a small non-negative integer");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    SmallObject parse_object()
    {
        const std::string tag = identifier();
        try {
            if (tag == "D") return SmallObject::d();
            if (tag == "Product" || tag == "Wedge") {
                expect('(');
                SmallObject a = parse_object();
                expect(',');
                SmallObject b = parse_object();
                expect(')');
                return tag == "Product" ? SmallObject::product(a, b) : SmallObject::wedge(a, b);
            }
            if (tag == "Dsym") {
                expect('(');
                const int p = integer();
                expect(',');
                const int n = integer();
                expect(')');
                return SmallObject::dsym(p, n);
            }
            if (tag == "Dn" || tag == "Dpow" || tag == "DHole" || tag == "Dmany") {
                expect('(');
                const int n = integer();
                expect(')');
                if (tag == "Dn") return SmallObject::dn(n);
                if (tag == "Dpow") return SmallObject::dpow(n);
                if (tag == "DHole") return SmallObject::dhole(n);
                return SmallObject::dmany(n);
            }
        } catch (const PreconditionError& e) {
            fail(e.what());
        }
        fail("unknown tag '" + tag + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

SmallObject SmallObject::parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// WeilElement

WeilElement::WeilElement(SmallObject obj) : obj_(std::move(obj)), c_(zeros(obj_.dim())) {}

WeilElement::WeilElement(SmallObject obj, const Rational& constant) : WeilElement(std::move(obj))
{
    c_[0] = constant;
}

WeilElement WeilElement::variable(const SmallObject& obj, int var)
{
    MultiIndex m(static_cast<std::size_t>(obj.num_vars()), 0);
    m.at(static_cast<std::size_t>(var)) = 1;
    return monomial(obj, m);
}

WeilElement WeilElement::monomial(const SmallObject& obj, const MultiIndex& m, const Rational& coeff)
{
    WeilElement out(obj);
    if (const auto idx = obj.index_of(m)) out.c_[*idx] = coeff;
    else (void)obj.survives(m);  // arity check
    return out;
}

bool WeilElement::is_zero() const { return jetkit::is_zero(c_); }

WeilElement& WeilElement::operator+=(const WeilElement& o)
{
    if (!(obj_ == o.obj_)) throw PreconditionError("adding elements of different algebras");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

WeilElement& WeilElement::operator-=(const WeilElement& o)
{
    if (!(obj_ == o.obj_)) throw PreconditionError("subtracting elements of different algebras");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

WeilElement& WeilElement::operator*=(const Rational& s)
{
    for (auto& c : c_) c *= s;
    return *this;
}

WeilElement operator*(const WeilElement& a, const WeilElement& b)
{
    if (!(a.obj_ == b.obj_)) throw PreconditionError("multiplying elements of different algebras");
    WeilElement out(a.obj_);
    const std::size_t dim = a.c_.size();
    for (std::size_t i = 0; i < dim; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (b.c_[j] == 0) continue;
            if (const auto k = a.obj_.product_index(i, j)) out.c_[*k] += a.c_[i] * b.c_[j];
        }
    }
    return out;
}

WeilElement WeilElement::pow(int exponent) const
{
    WeilElement out(obj_, 1);
    for (int i = 0; i < exponent; ++i) out = out * *this;
    return out;
}

// ---------------------------------------------------------------------------
// ObjectMap

namespace {

WeilElement evaluate(const IntPoly& poly, const std::vector<WeilElement>& vars, const SmallObject& obj)
{
    WeilElement out(obj);
    for (const auto& [exps, coeff] : poly) {
        WeilElement term(obj, Rational(static_cast<long>(coeff)));
        for (std::size_t v = 0; v < exps.size(); ++v)
            if (exps[v] > 0) term = term * vars[v].pow(exps[v]);
        out += term;
    }
    return out;
}

WeilElement image_of(const MultiIndex& m, const std::vector<WeilElement>& comps, const SmallObject& obj)
{
    WeilElement out(obj, 1);
    for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v] > 0) out = out * comps[v].pow(m[v]);
    return out;
}

}  // namespace

ObjectMap::ObjectMap(SmallObject source, SmallObject target, std::vector<IntPoly> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
{
    if (static_cast<int>(components_.size()) != target_.num_vars())
        throw PreconditionError("map into " + target_.name() + " needs one component per target variable");
    for (auto& poly : components_) {
        std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
        for (const auto& [exps, coeff] : poly) {
            if (static_cast<int>(exps.size()) != source_.num_vars())
                throw PreconditionError("component monomial arity does not match " + source_.name());
            if (all_zero(exps)) throw PreconditionError("map components must not have a constant term");
        }
    }

    std::vector<WeilElement> images;
    for (int v = 0; v < source_.num_vars(); ++v) images.push_back(WeilElement::variable(source_, v));
    std::vector<WeilElement> comps;
    for (const auto& poly : components_) comps.push_back(evaluate(poly, images, source_));

    matrix_ = Matrix(source_.dim(), target_.dim());
    const auto& tbasis = target_.basis();
    for (std::size_t c = 0; c < tbasis.size(); ++c) {
        const WeilElement img = image_of(tbasis[c], comps, source_);
        for (std::size_t r = 0; r < source_.dim(); ++r) matrix_(r, c) = img[r];
        for (int v = 0; v < target_.num_vars(); ++v) {
            MultiIndex next = tbasis[c];
            ++next[static_cast<std::size_t>(v)];
            if (target_.survives(next)) continue;
            if (!(img * comps[static_cast<std::size_t>(v)]).is_zero())
                throw PreconditionError("map " + source_.name() + " -> " + target_.name() +
                                        " does not preserve the defining ideal");
        }
    }
}

ObjectMap ObjectMap::identity(const SmallObject& obj)
{
    std::vector<IntPoly> comps;
    for (int v = 0; v < obj.num_vars(); ++v) comps.push_back(var_poly(obj.num_vars(), v));
    return ObjectMap(obj, obj, std::move(comps));
}

WeilElement ObjectMap::component_image(int v) const
{
    std::vector<WeilElement> images;
    for (int k = 0; k < source_.num_vars(); ++k) images.push_back(WeilElement::variable(source_, k));
    return evaluate(components_.at(static_cast<std::size_t>(v)), images, source_);
}

ObjectMap compose(const ObjectMap& outer, const ObjectMap& inner)
{
    if (!(outer.source() == inner.target()))
        throw PreconditionError("compose: " + inner.target().name() + " vs " + outer.source().name());
    const SmallObject& src = inner.source();
    std::vector<WeilElement> inner_images;
    for (int v = 0; v < inner.target().num_vars(); ++v) inner_images.push_back(inner.component_image(v));
    std::vector<IntPoly> comps;
    for (const auto& poly : outer.components()) {
        const WeilElement img = evaluate(poly, inner_images, src);
        IntPoly out;
        for (std::size_t i = 1; i < src.dim(); ++i) {
            if (img[i] == 0) continue;
            if (img[i].get_den() != 1) throw InvariantError("composed map has a non-integer coefficient");
            out[src.basis()[i]] = img[i].get_num().get_si();
        }
        if (img[0] != 0) throw InvariantError("composed map has a constant term");
        comps.push_back(std::move(out));
    }
    return ObjectMap(src, outer.target(), std::move(comps));
}

bool same_map(const ObjectMap& a, const ObjectMap& b)
{
    return a.source() == b.source() && a.target() == b.target() && a.induced_coeff_map() == b.induced_coeff_map();
}

IntPoly var_poly(int nvars, int var, long long coeff)
{
    MultiIndex m(static_cast<std::size_t>(nvars), 0);
    m.at(static_cast<std::size_t>(var)) = 1;
    return IntPoly{{m, coeff}};
}

IntPoly monomial_poly(const MultiIndex& exponents, long long coeff) { return IntPoly{{exponents, coeff}}; }

IntPoly add(IntPoly a, const IntPoly& b)
{
    for (const auto& [m, c] : b) a[m] += c;
    std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
    return a;
}

}  // namespace jetkit
