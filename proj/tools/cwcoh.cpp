// cwcoh: command-line front end for complexes, maps, (co)homology and checks.
//
// Exit codes: 0 success, 1 semantic failure (validation or check),
// 2 parse/schema error, 3 usage error.

#include "cwcoh/ab_group.hpp"
#include "cwcoh/chain_map.hpp"
#include "cwcoh/complex.hpp"
#include "cwcoh/document.hpp"
#include "cwcoh/errors.hpp"
#include "cwcoh/homology.hpp"
#include "cwcoh/verify.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace cwcoh;

namespace {

enum Exit { ok = 0, semantic = 1, parse = 2, usage = 3 };

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

/// A validation failure that has already been reported.
struct SemanticFailure
{
};

void emit(const std::string& text, const std::string& out)
{
    if (out.empty())
        std::cout << text;
    else
        write_file(out, text);
}

CwComplex load_valid_complex(const std::string& path)
{
    CwComplex x = load_complex(path);
    const auto report = validate(x);
    if (!report.ok()) {
        for (const auto& v : report.violations)
            std::cerr << path << ": " << v.condition << " violation at dimension " << v.dimension << ": " << v.detail
                      << '\n';
        throw SemanticFailure{};
    }
    return x;
}

ChainMap load_valid_map(const std::string& path, bool require_pointed)
{
    ChainMap f = load_map(path);
    const auto report = validate_map(f, require_pointed);
    if (!report.ok()) {
        for (const auto& v : report.violations)
            std::cerr << path << ": " << v.condition << " violation at dimension " << v.dimension << ": " << v.detail
                      << '\n';
        throw SemanticFailure{};
    }
    return f;
}

DimRange parse_range(const std::string& text)
{
    static const std::regex pattern(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
    std::smatch m;
    if (!std::regex_match(text, m, pattern)) throw UsageError("--range expects a..b, got '" + text + "'");
    DimRange r{std::stoi(m[1]), std::stoi(m[2])};
    if (r.lo > r.hi) throw UsageError("--range is empty");
    return r;
}

FgAbGroup parse_coeff(const std::string& text)
{
    try {
        return parse_group(text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--coeff: ") + e.what());
    }
}

std::vector<CheckReport> complex_suite(const CwComplex& x, const FgAbGroup& g, DimRange range,
                                       const std::string& suite)
{
    const bool all = suite == "all";
    std::vector<CheckReport> reports;
    if (all || suite == "dimension") reports.push_back(check_dimension(g, range));
    if (all || suite == "suspension") reports.push_back(check_suspension(x, g, range));
    if (all || suite == "wedge") {
        reports.push_back(check_wedge({x, x}, g, range));
        reports.push_back(check_wedge({x, zoo::sphere(1), zoo::klein()}, g, range));
    }
    if (all || suite == "les") {
        reports.push_back(check_les_exactness(identity_map(x), g, range));
        for (std::size_t m = 0; m < x.dim(); ++m) reports.push_back(check_les_exactness(skeleton_inclusion(x, m), g, range));
    }
    if (all || suite == "reformulation")
        for (int n = std::max(range.lo, 0); n <= std::min(range.hi, static_cast<int>(x.dim())); ++n)
            reports.push_back(check_skeletal_reformulation(x, g, n));
    return reports;
}

std::vector<CheckReport> map_suite(const ChainMap& f, const FgAbGroup& g, DimRange range, const std::string& suite)
{
    const bool all = suite == "all";
    std::vector<CheckReport> reports;
    if (all || suite == "les") reports.push_back(check_les_exactness(f, g, range));
    if (all || suite == "wedge") reports.push_back(check_wedge({f.source(), f.target()}, g, range));
    for (const auto* x : {&f.source(), &f.target()}) {
        if (all || suite == "suspension") reports.push_back(check_suspension(*x, g, range));
        if (all || suite == "reformulation")
            for (int n = std::max(range.lo, 0); n <= std::min(range.hi, static_cast<int>(x->dim())); ++n)
                reports.push_back(check_skeletal_reformulation(*x, g, n));
    }
    if (all || suite == "dimension") reports.push_back(check_dimension(g, range));
    return reports;
}

int run(int argc, char** argv)
{
    CLI::App app{"Cellular homology and cohomology of finite CW complexes"};
    app.require_subcommand(1);

    std::string file, out, coeff = "Z", range_text, suite = "all", zoo_name;
    std::vector<std::string> files;
    std::vector<long> params;
    std::optional<int> dim;
    std::size_t below = 0;
    bool reduced = false, cohomology_flag = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check the structure of a complex or map document");
    validate_cmd->add_option("file", file, "Complex or map document")->required();

    auto* homology_cmd = app.add_subcommand("homology", "Print (co)homology groups");
    homology_cmd->add_option("file", file, "Complex document")->required();
    homology_cmd->add_option("--dim", dim, "Only this dimension");
    homology_cmd->add_option("--coeff", coeff, "Coefficient group, e.g. Z, Z/2, Z + Z/4");
    homology_cmd->add_flag("--reduced", reduced, "Reduced groups");
    homology_cmd->add_flag("--cohomology", cohomology_flag, "Cohomology instead of homology");

    auto* euler_cmd = app.add_subcommand("euler", "Print the Euler characteristic");
    euler_cmd->add_option("file", file, "Complex document")->required();

    auto* susp_cmd = app.add_subcommand("susp", "Reduced suspension");
    susp_cmd->add_option("file", file, "Complex document")->required();
    susp_cmd->add_option("-o,--output", out, "Output document (default: stdout)");

    auto* wedge_cmd = app.add_subcommand("wedge", "One-point union");
    wedge_cmd->add_option("files", files, "Complex documents")->required();
    wedge_cmd->add_option("-o,--output", out, "Output document (default: stdout)");

    auto* quotient_cmd = app.add_subcommand("quotient", "Collapse a skeleton to the basepoint");
    quotient_cmd->add_option("file", file, "Complex document")->required();
    quotient_cmd->add_option("--below", below, "Collapse the m-skeleton")->required();
    quotient_cmd->add_option("-o,--output", out, "Output document (default: stdout)");

    auto* cone_cmd = app.add_subcommand("cone", "Mapping cone of a chain map");
    cone_cmd->add_option("mapfile", file, "Map document")->required();
    cone_cmd->add_option("-o,--output", out, "Output document (default: stdout)");

    auto* zoo_cmd = app.add_subcommand("zoo", "Emit a standard complex");
    zoo_cmd->add_option("name", zoo_name, "point, sphere n, torus, klein, rp n, cp n, moore q n, surface g, lens p")
        ->required();
    zoo_cmd->add_option("params", params, "Integer parameters");
    zoo_cmd->add_option("-o,--output", out, "Output document (default: stdout)");

    auto* degree_cmd = app.add_subcommand("degree", "Degree of a self map of a sphere model");
    degree_cmd->add_option("mapfile", file, "Map document")->required();

    auto* check_cmd = app.add_subcommand("check", "Run the axiom and reformulation checks");
    check_cmd->add_option("file", file, "Complex or map document")->required();
    check_cmd->add_option("--coeff", coeff, "Coefficient group");
    check_cmd->add_option("--range", range_text, "Dimension range a..b (default -1..dim+2)");
    check_cmd->add_option("--suite", suite, "Which checks to run")
        ->check(CLI::IsMember({"dimension", "suspension", "wedge", "les", "reformulation", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    if (validate_cmd->parsed()) {
        const std::string text = read_file(file);
        ValidationReport report;
        if (is_map_document(text))
            report = validate_map(parse_map_document(text, fs::path(file).parent_path()));
        else
            report = validate(parse_complex_document(text));
        if (report.ok()) {
            std::cout << "ok\n";
            return ok;
        }
        for (const auto& v : report.violations)
            std::cout << "violation dimension " << v.dimension << ' ' << v.condition << ": " << v.detail << '\n';
        return semantic;
    }

    if (homology_cmd->parsed()) {
        const CwComplex x = load_valid_complex(file);
        const FgAbGroup g = parse_coeff(coeff);
        const Variant variant = cohomology_flag ? Variant::cohomology : Variant::homology;
        const int lo = dim ? *dim : 0;
        const int hi = dim ? *dim : static_cast<int>(x.dim());
        for (int n = lo; n <= hi; ++n)
            std::cout << (cohomology_flag ? "H^" : "H_") << n << " = "
                      << format_group(compute_group(x, n, g, variant, reduced).group()) << '\n';
        return ok;
    }

    if (euler_cmd->parsed()) {
        std::cout << euler_characteristic(load_valid_complex(file)) << '\n';
        return ok;
    }

    if (susp_cmd->parsed()) {
        emit(serialize_complex(suspension(load_valid_complex(file))), out);
        return ok;
    }

    if (wedge_cmd->parsed()) {
        std::vector<CwComplex> xs;
        for (const auto& f : files) xs.push_back(load_valid_complex(f));
        emit(serialize_complex(wedge(xs)), out);
        return ok;
    }

    if (quotient_cmd->parsed()) {
        const CwComplex x = load_valid_complex(file);
        if (below >= x.dim()) throw UsageError("--below must be less than the dimension " + std::to_string(x.dim()));
        emit(serialize_complex(quotient_by_skeleton(x, below)), out);
        return ok;
    }

    if (cone_cmd->parsed()) {
        emit(serialize_complex(mapping_cone(load_valid_map(file, true)).cone), out);
        return ok;
    }

    if (zoo_cmd->parsed()) {
        CwComplex x = [&] {
            try {
                return zoo::by_name(zoo_name, params);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }();
        emit(serialize_complex(x), out);
        return ok;
    }

    if (degree_cmd->parsed()) {
        const ChainMap f = load_valid_map(file, false);
        try {
            std::cout << degree(f) << '\n';
        } catch (const NotASphereModel& e) {
            std::cerr << "NotASphereModel: " << e.what() << '\n';
            return semantic;
        }
        return ok;
    }

    if (check_cmd->parsed()) {
        const FgAbGroup g = parse_coeff(coeff);
        const std::string text = read_file(file);
        std::vector<CheckReport> reports;
        if (is_map_document(text)) {
            const ChainMap f = load_valid_map(file, true);
            const DimRange range = range_text.empty()
                                       ? DimRange{-1, static_cast<int>(std::max(f.source().dim(), f.target().dim())) + 2}
                                       : parse_range(range_text);
            reports = map_suite(f, g, range, suite);
        } else {
            const CwComplex x = load_valid_complex(file);
            const DimRange range = range_text.empty() ? default_range(x) : parse_range(range_text);
            reports = complex_suite(x, g, range, suite);
        }
        bool passed = true;
        for (const auto& r : reports) {
            std::cout << render(r) << '\n';
            passed = passed && r.passed;
        }
        return passed ? ok : semantic;
    }
    return usage;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const SemanticFailure&) {
        return semantic;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return parse;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return parse;
    } catch (const ShapeMismatch& e) {
        std::cerr << "schema error: " << e.what() << '\n';
        return parse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return semantic;
    }
}
