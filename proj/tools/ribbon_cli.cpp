// ribbon: command-line front end for the ribbon-code pipelines.
// Exit codes: 0 success, 1 data error, 2 parse or usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ribbon/acceptance.hpp"
#include "ribbon/fixtures.hpp"
#include "ribbon/ribbon.hpp"

namespace {

using namespace ribbon;
using nlohmann::json;

struct Globals {
    int threads = 0;
    std::string out;
    std::string format = "tsv";
    std::string data_dir = default_data_dir().string();
};

// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path);
        if (!*file_) throw DataError("cannot write " + path);
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

json poly_json(const LaurentPoly& p) { return {{"text", to_string(p)}, {"poly", p}}; }

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    if (detail::trim(s).empty()) return out;
    for (const auto& item : detail::split(s, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ParseError("bad integer in list: '" + item + "'");
        }
    }
    return out;
}

std::string join_ints(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// ---------------------------------------------------------------------------

void run_alex(const Globals& g, const std::string& text, bool verbose)
{
    const RibbonCode code = parse_code(text);
    const GroupPresentation pres = presentation_of(code);
    if (verbose) {
        std::cerr << "presentation: " << to_string(pres) << "\n";
        std::cerr << "matrix:\n" << to_string(alexander_matrix(pres)) << "\n";
    }
    const CodePolynomials p = knot_polynomial(code);
    const Coeff det = determinant(p.knot.poly());
    Sink sink(g.out);
    if (g.format == "json") {
        sink.os() << json{{"code", to_string(code)}, {"disk", poly_json(p.disk.poly())},
                          {"knot", poly_json(p.knot.poly())}, {"det", det}}
                         .dump(2)
                  << "\n";
        return;
    }
    sink.os() << "disk: " << p.disk << "\nknot: " << p.knot << "\ndet: " << det << "\n";
}

void run_enumerate(const Globals& g, int r, const std::string& emit, const std::vector<std::string>& fixtures)
{
    EnumerationOptions opt;
    opt.threads = g.threads;
    opt.max_r = std::max(r, opt.max_r);
    Sink sink(g.out);
    std::ostream& os = sink.os();

    if (g.format == "json") {
        os << rsets_to_json(compute_rsets(r, opt)).dump(2) << "\n";
    } else {
        if (emit == "codes" || emit == "both") {
            auto codes = enumerate_codes(r, opt);
            std::vector<std::tuple<Coeff, CanonicalPoly, std::string, const EnumeratedCode*>> rows;
            for (const auto& c : codes) rows.emplace_back(determinant(c.knot.poly()), c.knot, to_string(c.code), &c);
            std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
                return std::tie(std::get<0>(a), std::get<1>(a), std::get<2>(a)) <
                       std::tie(std::get<0>(b), std::get<1>(b), std::get<2>(b));
            });
            os << "code\tdisk\tknot\tdet\n";
            for (const auto& [det, knot, text, c] : rows) os << text << "\t" << c->disk << "\t" << knot << "\t" << det << "\n";
        }
        if (emit == "polys" || emit == "both") {
            if (emit == "both") os << "\n";
            const RSet set = compute_rset(r, opt);
            std::vector<std::pair<Coeff, CanonicalPoly>> rows;
            for (const auto& p : set.polys()) rows.emplace_back(determinant(p.poly()), p);
            std::sort(rows.begin(), rows.end());
            os << "det\talexander\twitness\n";
            for (const auto& [det, p] : rows) os << det << "\t" << p << "\t" << set.witnesses.at(p) << "\n";
        }
    }

    if (!fixtures.empty()) {
        std::vector<CanonicalPoly> expected;
        for (const auto& path : fixtures) {
            for (const auto& row : load_poly_table(path)) expected.push_back(row.alexander);
        }
        const FixtureDiff diff = diff_against_fixture(compute_rset(r, opt).polys(), expected);
        std::cerr << "fixture: " << diff.matched.size() << " matched, " << diff.missing.size() << " missing, "
                  << diff.extra.size() << " extra\n";
        for (const auto& p : diff.missing) std::cerr << "  missing " << p << "\n";
        for (const auto& p : diff.extra) std::cerr << "  extra " << p << "\n";
        if (!diff.exact()) throw DataError("enumeration does not match fixture");
    }
}

void run_halfpoly(const Globals& g, const std::string& text)
{
    const auto halves = half_polynomials(parse_poly(text));
    Sink sink(g.out);
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& h : halves) arr.push_back(poly_json(h));
        sink.os() << arr.dump(2) << "\n";
        return;
    }
    for (const auto& h : halves) sink.os() << h << "\n";
}

void run_tabulate(const Globals& g, const std::string& knots, const std::string& rsets_path)
{
    std::ifstream in(rsets_path);
    if (!in) throw DataError("cannot open " + rsets_path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DataError(rsets_path + ": " + e.what());
    }
    const auto reports = tabulate(load_knots(knots), rsets_from_json(j));
    Sink sink(g.out);
    std::ostream& os = sink.os();
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& r : reports) {
            json just = json::array();
            for (const auto& x : r.justifications) just.push_back({{"rule", rule_id(x.rule)}, {"value", x.value}, {"detail", x.detail}});
            arr.push_back({{"name", r.name},
                           {"lower", r.lower},
                           {"upper", r.upper ? json(*r.upper) : json(nullptr)},
                           {"resolved", r.resolved()},
                           {"justifications", just}});
        }
        os << arr.dump(2) << "\n";
        return;
    }
    os << "name\tlower\tupper\tresolved\tjustifications\n";
    for (const auto& r : reports) {
        std::string just;
        for (const auto& x : r.justifications) {
            const bool binding = std::find(r.binding.begin(), r.binding.end(), x.rule) != r.binding.end();
            just += (just.empty() ? "" : "; ") + rule_id(x.rule) + "=" + std::to_string(x.value) + (binding ? "*" : "");
        }
        os << r.name << "\t" << r.lower << "\t" << (r.upper ? std::to_string(*r.upper) : "-") << "\t"
           << (r.resolved() ? "yes" : "no") << "\t" << just << "\n";
    }
}

int run_gamma(const Globals& g, const std::string& n_text, bool check)
{
    const WindingSequence n = parse_int_list(n_text);
    const RibbonCode code = gamma_code(n);
    const LaurentPoly f = gamma_halfpoly(n);
    const CanonicalPoly fox = knot_polynomial(code).knot;
    const bool ok = mul_reciprocal(f) == fox;
    Sink sink(g.out);
    if (g.format == "json") {
        json j{{"n", n}, {"code", to_string(code)}, {"f", poly_json(f)}, {"alexander", poly_json(fox.poly())}};
        if (check) j["check"] = ok;
        sink.os() << j.dump(2) << "\n";
    } else {
        sink.os() << "code: " << code << "\nf: " << f << "\nalexander: " << fox << "\n";
        if (check) sink.os() << "check: " << (ok ? "ok" : "MISMATCH f(t)f(1/t) = " + to_string(mul_reciprocal(f).poly())) << "\n";
    }
    return check && !ok ? 1 : 0;
}

void run_realize(const Globals& g, const std::string& text)
{
    const LaurentPoly h = parse_poly(text);
    const WindingSequence n = realize_halfpoly(h);
    const RibbonCode code = gamma_code(n);
    Sink sink(g.out);
    if (g.format == "json") {
        sink.os() << json{{"n", n}, {"code", to_string(code)}, {"f", poly_json(gamma_halfpoly(n))}}.dump(2) << "\n";
        return;
    }
    sink.os() << "n: " << join_ints(n) << "\ncode: " << code << "\nf: " << gamma_halfpoly(n) << "\n";
}

void print_spectrum(const Globals& g, const SpectrumBounds& b, bool verbose)
{
    Sink sink(g.out);
    std::ostream& os = sink.os();
    if (g.format == "json") {
        json levels = json::array();
        for (const auto& L : b.levels) {
            levels.push_back({{"genus", L.genus}, {"lower", bound_text(L.lo)}, {"upper", bound_text(L.hi)},
                              {"provenance", L.provenance}});
        }
        os << json{{"levels", levels}, {"notes", b.notes}}.dump(2) << "\n";
        return;
    }
    os << "genus\tlower\tupper\n";
    for (const auto& L : b.levels) os << L.genus << "\t" << bound_text(L.lo) << "\t" << bound_text(L.hi) << "\n";
    for (const auto& note : b.notes) os << "# " << note << "\n";
    if (verbose) {
        for (const auto& L : b.levels) {
            for (const auto& p : L.provenance) std::cerr << "g=" << L.genus << ": " << p << "\n";
        }
    }
}

std::pair<int, int> parse_upper(const std::string& s)
{
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ParseError("--upper expects g:v, got '" + s + "'");
    const auto parts = parse_int_list(s.substr(0, colon) + "," + s.substr(colon + 1));
    return {parts[0], parts[1]};
}

int run_selfcheck(const Globals& g, bool quick)
{
    acceptance::Context ctx;
    ctx.data_dir = g.data_dir;
    ctx.quick = quick;
    const auto drift = verify_checksums(ctx.data_dir);
    if (!drift.empty()) {
        for (const auto& p : drift) std::cerr << "selfcheck: " << p << "\n";
        std::cerr << "selfcheck: refusing to run against modified fixtures\n";
        return 1;
    }
    Sink sink(g.out);
    return acceptance::run_all(ctx, sink.os()) == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ribbon codes, Alexander polynomials and ribbon-number bounds"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--threads", g.threads, "worker threads for enumeration (0 = hardware)")->check(CLI::NonNegativeNumber);
    app.add_option("--out", g.out, "write output to this file instead of stdout");
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"tsv", "json"}));
    app.add_option("--data-dir", g.data_dir, "fixture directory");

    std::string code_text;
    bool verbose = false;
    auto* alex = app.add_subcommand("alex", "disk polynomial, Alexander polynomial and determinant of a code");
    alex->add_option("code", code_text, "ribbon code, e.g. \"([1,2,1],[2,1,2])\"")->required();
    alex->add_flag("--verbose", verbose, "print the presentation and matrix to stderr");

    int r = 0;
    std::string emit = "polys";
    std::vector<std::string> fixtures;
    auto* enumerate = app.add_subcommand("enumerate", "enumerate irreducible codes and their polynomial sets");
    enumerate->add_option("--r", r, "number of ribbon singularities")->required()->check(CLI::Range(1, 5));
    enumerate->add_option("--emit", emit, "what to print")->check(CLI::IsMember({"codes", "polys", "both"}));
    enumerate->add_option("--fixture", fixtures, "polynomial table(s) the set must equal; repeatable")->check(CLI::ExistingFile);

    std::string poly_text;
    auto* halfpoly = app.add_subcommand("halfpoly", "all f with f(t)f(1/t) equal to the given polynomial");
    halfpoly->add_option("poly", poly_text, "Alexander polynomial")->required();

    std::string knots_path, rsets_path;
    auto* tab = app.add_subcommand("tabulate", "lower and upper bounds for a knot table");
    tab->add_option("--knots", knots_path, "knot CSV")->required()->check(CLI::ExistingFile);
    tab->add_option("--rsets", rsets_path, "JSON from `enumerate --format json`")->required()->check(CLI::ExistingFile);

    std::string n_text;
    bool check = false;
    auto* gamma = app.add_subcommand("gamma", "single-edge winding code and its half-polynomial");
    gamma->add_option("--n", n_text, "comma-separated winding numbers, e.g. \"4,-2\"")->required();
    gamma->add_flag("--check", check, "compare the closed form with Fox calculus");

    auto* realize = app.add_subcommand("realize", "winding sequence realizing a half-polynomial");
    realize->add_option("--halfpoly", poly_text, "half-polynomial with g(1) = 1")->required();

    SpectrumInput spec_in;
    int crosscap = -1, genus4 = -1;
    std::vector<std::string> uppers;
    auto* spectrum = app.add_subcommand("spectrum", "bounds on genus-g ribbon numbers");
    spectrum->add_option("--genus", spec_in.genus, "Seifert genus")->required();
    spectrum->add_option("--crosscap", crosscap, "crosscap number");
    spectrum->add_option("--genus4", genus4, "smooth 4-genus");
    spectrum->add_option("--r0-lower", spec_in.r0_lower, "known lower bound on the ribbon number");
    spectrum->add_option("--upper", uppers, "known upper bound g:v; repeatable");
    spectrum->add_flag("--verbose", verbose, "print provenance to stderr");

    int pn = 0, pp = 0, pq = 1, pr0 = 0;
    auto* pretzel = app.add_subcommand("pretzel", "bounds for the pretzel family P(q, p, -p, ..., p, -p)");
    pretzel->add_option("--n", pn, "genus n (2n+1 strands)")->required();
    pretzel->add_option("--p", pp, "odd p >= 3")->required();
    pretzel->add_option("--q", pq, "odd q");
    pretzel->add_option("--r0-lower", pr0, "known lower bound on the ribbon number");
    pretzel->add_flag("--verbose", verbose, "print provenance to stderr");

    bool quick = false;
    auto* selfcheck = app.add_subcommand("selfcheck", "run the acceptance suite against the shipped fixtures");
    selfcheck->add_flag("--quick", quick, "skip the exhaustive winding grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*alex) run_alex(g, code_text, verbose);
        if (*enumerate) run_enumerate(g, r, emit, fixtures);
        if (*halfpoly) run_halfpoly(g, poly_text);
        if (*tab) run_tabulate(g, knots_path, rsets_path);
        if (*gamma) return run_gamma(g, n_text, check);
        if (*realize) run_realize(g, poly_text);
        if (*spectrum) {
            if (crosscap >= 0) spec_in.crosscap = crosscap;
            if (genus4 >= 0) spec_in.genus4 = genus4;
            for (const auto& u : uppers) {
                const auto [gg, v] = parse_upper(u);
                spec_in.uppers[gg] = v;
            }
            print_spectrum(g, spectrum_bounds(spec_in), verbose);
        }
        if (*pretzel) print_spectrum(g, pretzel_bounds(pn, pp, pq, pr0), verbose);
        if (*selfcheck) return run_selfcheck(g, quick);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
