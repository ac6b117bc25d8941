#include "jetkit/approaches.hpp"
#include "jetkit/errors.hpp"
#include "jetkit/json_io.hpp"
#include "jetkit/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

using namespace jetkit;

constexpr int kSchemaExit = 1;
constexpr int kPreconditionExit = 2;
constexpr int kInvariantExit = 3;

struct Options {
    std::string object;
    std::string rep;
    std::string jet_path;
    std::string gamma_path;
    std::string input_path = "-";
    std::string output_path = "-";
    std::string target;
    std::string operation;
    std::string suite = "all";
    int trials = 100;
    std::uint64_t seed = 0;
    std::optional<int> decimal;
};

Json read_json(const std::string& path)
{
    std::stringstream text;
    if (path == "-") {
        text << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw SchemaError("cannot read '" + path + "'");
        text << in.rdbuf();
    }
    try {
        return Json::parse(text.str());
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON in '") + path + "': " + e.what());
    }
}

void write_json(const std::string& path, const Json& payload)
{
    const std::string text = payload.dump(2) + "\n";
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw PreconditionError("cannot write '" + path + "'");
    out << text;
}

const Json& field(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
    return doc.at(key);
}

Json basis_command(const Options& opt)
{
    const SmallObject obj = SmallObject::parse(opt.object);
    Json monomials = Json::array();
    std::map<int, int> by_degree;
    for (const MultiIndex& m : obj.basis()) {
        monomials.push_back(m);
        ++by_degree[total_degree(m)];
    }
    Json counts = Json::object();
    for (const auto& [degree, count] : by_degree) counts[std::to_string(degree)] = count;
    return Json{{"object", obj.name()},
                {"variables", obj.num_vars()},
                {"dim", obj.dim()},
                {"non_unit", obj.dim() - 1},
                {"counts_by_degree", std::move(counts)},
                {"monomials", std::move(monomials)}};
}

Json prolong_command(const Options& opt, const Format& fmt)
{
    if (opt.jet_path == "-" && opt.gamma_path == "-") throw SchemaError("only one of --jet and --gamma can read stdin");
    const JetCoord j = jet_from_json(read_json(opt.jet_path));
    const TaylorElement g = taylor_from_json(read_json(opt.gamma_path));
    return to_json(theta(parse_rep(opt.rep), j)(g), fmt);
}

// A table answers only on its probes, so the conversion maps run on the
// operator it determines.
Operator operator_from_table(const Json& doc)
{
    const Operator probed = from_table(table_from_json(doc));
    return theta(probed.rep, reconstruct(probed));
}

Json convert_command(const Options& opt, const Format& fmt)
{
    const Json doc = read_json(opt.input_path);
    const bool is_jet = !(doc.is_object() && doc.contains("rep"));
    if (opt.target == "jet") {
        if (is_jet) return to_json(jet_from_json(doc), fmt);
        return to_json(reconstruct(from_table(table_from_json(doc))), fmt);
    }
    const Rep to = parse_rep(opt.target);
    if (is_jet) return to_json(tabulate(theta(to, jet_from_json(doc))), fmt);
    const Operator from = operator_from_table(doc);
    if (from.rep == to) return to_json(tabulate(from), fmt);
    if (from.rep == Rep::first && to == Rep::dpow) return to_json(tabulate(phi_operator(from)), fmt);
    if (from.rep == Rep::dpow && to == Rep::dn) return to_json(tabulate(psi_operator(from)), fmt);
    if (from.rep == Rep::first && to == Rep::dn) return to_json(tabulate(psi_operator(phi_operator(from))), fmt);
    // Reverse directions go through the coordinates of the operator.
    return to_json(tabulate(theta(to, reconstruct(from))), fmt);
}

AffineFamily family_of(const SmallObject& side)
{
    switch (side.kind()) {
    case SmallObject::Kind::Dpow: return dpow_family(side.first_param());
    case SmallObject::Kind::Dn: return dn_family(side.first_param());
    case SmallObject::Kind::Dsym: return dsym_family(side.first_param(), side.second_param());
    default: throw PreconditionError("no affine family acts on elements over " + side.name());
    }
}

Json affine_command(const Options& opt, const Format& fmt)
{
    const Json doc = read_json(opt.input_path);
    if (opt.operation == "jet_minus")
        return to_json(jet_minus(jet_from_json(field(doc, "plus")), jet_from_json(field(doc, "minus"))), fmt);
    if (opt.operation == "jet_plus")
        return to_json(jet_plus(symform_from_json(field(doc, "form")), jet_from_json(field(doc, "jet"))), fmt);
    if (opt.operation == "strong_minus") {
        const TaylorElement plus = taylor_from_json(field(doc, "plus"));
        const TaylorElement minus = taylor_from_json(field(doc, "minus"));
        return to_json(strong_minus(family_of(plus.object()), plus, minus), fmt);
    }
    if (opt.operation == "strong_plus") {
        const TaylorElement t = taylor_from_json(field(doc, "tangent"));
        const TaylorElement g = taylor_from_json(field(doc, "element"));
        return to_json(strong_plus(family_of(g.object()), t, g), fmt);
    }
    throw SchemaError("unknown affine operation '" + opt.operation + "'");
}

int emit_error(const Options& opt, std::string_view kind, std::string_view message, int code)
{
    try {
        write_json(opt.output_path, error_json(kind, message));
    } catch (const std::exception&) {
        std::cout << error_json(kind, message).dump(2) << "\n";
    }
    return code;
}

}  // namespace

int main(int argc, char** argv)
{
    Options opt;
    CLI::App app{"Exact jet prolongation, conversion and verification"};
    app.require_subcommand(1);
    app.add_option("-o,--output", opt.output_path, "Output path, - for stdout");
    app.add_option("--decimal", opt.decimal, "Render rationals as decimals with this many digits")->check(CLI::Range(0, 60));

    CLI::App* basis = app.add_subcommand("basis", "Monomial basis of a small object");
    basis->add_option("--object", opt.object, "Object name, e.g. Dsym(2,2)")->required();

    CLI::App* prolong = app.add_subcommand("prolong", "Apply a jet to a microshape");
    prolong->add_option("--rep", opt.rep, "first, dpow or dn")->required();
    prolong->add_option("--jet", opt.jet_path, "Jet JSON path, - for stdin")->required();
    prolong->add_option("--gamma", opt.gamma_path, "Input element JSON path, - for stdin")->required();

    CLI::App* convert = app.add_subcommand("convert", "Convert a jet or an operator table to another representation");
    convert->add_option("-i,--input", opt.input_path, "Jet or table JSON path, - for stdin");
    convert->add_option("--to", opt.target, "jet, first, dpow or dn")->required();

    CLI::App* affine = app.add_subcommand("affine", "Affine operations on jets and microshapes");
    affine->add_option("--op", opt.operation, "jet_minus, jet_plus, strong_minus or strong_plus")->required();
    affine->add_option("-i,--input", opt.input_path, "Operand JSON path, - for stdin");

    CLI::App* verify = app.add_subcommand("verify", "Run a randomized property suite");
    verify->add_option("--suite", opt.suite, "Suite name or all");
    verify->add_option("--trials", opt.trials, "Trials per property")->check(CLI::PositiveNumber);
    verify->add_option("--seed", opt.seed, "64-bit seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return emit_error(opt, "schema", e.what(), kSchemaExit);
    }

    const Format fmt{opt.decimal};
    try {
        Json payload;
        int code = 0;
        if (*basis) {
            payload = basis_command(opt);
        } else if (*prolong) {
            payload = prolong_command(opt, fmt);
        } else if (*convert) {
            payload = convert_command(opt, fmt);
        } else if (*affine) {
            payload = affine_command(opt, fmt);
        } else {
            const Report report = run_suite(opt.suite, opt.trials, opt.seed);
            payload = to_json(report);
            if (!report.all_pass()) code = kInvariantExit;
        }
        write_json(opt.output_path, payload);
        return code;
    } catch (const SchemaError& e) {
        return emit_error(opt, "schema", e.what(), kSchemaExit);
    } catch (const PreconditionError& e) {
        return emit_error(opt, "precondition", e.what(), kPreconditionExit);
    } catch (const InvariantError& e) {
        return emit_error(opt, "invariant", e.what(), kInvariantExit);
    } catch (const Json::exception& e) {
        return emit_error(opt, "schema", e.what(), kSchemaExit);
    }
}
