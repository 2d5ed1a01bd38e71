#pragma once

// The acceptance criteria as executable checks. Shared by the acceptance test
// binary and `ribbon selfcheck`. Every check is exact; wall-clock limits are
// the only numeric tolerances and are fixed below.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ribbon/code.hpp"
#include "ribbon/enumeration.hpp"
#include "ribbon/fixtures.hpp"
#include "ribbon/fox.hpp"
#include "ribbon/laurent.hpp"
#include "ribbon/obstruction.hpp"
#include "ribbon/spectrum.hpp"

namespace ribbon::acceptance {

inline constexpr double kGoldenCodesSeconds = 5.0;
inline constexpr double kRsetSeconds = 120.0;
inline constexpr double kGammaGridSeconds = 30.0;
inline constexpr double kTabulationSeconds = 1.0;
inline constexpr int kGammaMaxM = 3;
inline constexpr int kGammaMaxWinding = 3;
inline constexpr int kRealizeMaxDegree = 5;
inline constexpr int kRealizeMaxCoeff = 4;
inline constexpr int kInvarianceCodes = 500;
inline constexpr int kInvarianceMaxVertices = 5;
inline constexpr int kInvarianceMaxMarks = 6;
inline constexpr std::uint64_t kInvarianceSeed = 0x5eed2024;

struct Result {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct Context {
    fs::path data_dir = default_data_dir();
    bool quick = false;
    std::optional<std::vector<RSet>> rsets;  // filled by the set-reconstruction check

    const std::vector<RSet>& sets()
    {
        if (!rsets) {
            EnumerationOptions opt;
            opt.threads = 1;
            rsets = compute_rsets(4, opt);
        }
        return *rsets;
    }
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline std::string join(const std::vector<std::string>& v, std::size_t limit = 5)
{
    std::string s;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) s += (i ? "; " : "") + v[i];
    if (v.size() > limit) s += "; ... (" + std::to_string(v.size() - limit) + " more)";
    return s;
}

inline LaurentPoly unit_normalized_half(const LaurentPoly& f)
{
    LaurentPoly g = f.shifted(-f.min_deg());
    return evaluate(g, 1).num < 0 ? -g : g;
}

}  // namespace detail

inline Result golden_codes(Context& ctx)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = load_code_table(ctx.data_dir / "r4_codes.tsv");
    std::vector<std::string> bad;
    for (const auto& row : rows) {
        const auto polys = knot_polynomial(row.code);
        if (polys.knot != row.alexander || determinant(polys.knot) != row.det) {
            bad.push_back(row.code_text + " gives " + to_string(polys.knot.poly()));
        }
    }
    const double s = detail::seconds_since(t0);
    const bool ok = rows.size() == 118 && bad.empty() && s < kGoldenCodesSeconds;
    std::ostringstream d;
    d << rows.size() - bad.size() << "/" << rows.size() << " codes match (expected 118 rows)";
    if (!bad.empty()) d << ": " << detail::join(bad);
    return {1, "golden code polynomials", ok, d.str(), s};
}

inline Result worked_example(Context&)
{
    const auto t0 = std::chrono::steady_clock::now();
    const RibbonCode code = parse_code("([1,-3,2,-3,2],[2,1,3])");
    const AlexMatrix m = alexander_matrix(presentation_of(code));
    const AlexMatrix expected = {
        {parse_poly("1"), parse_poly("1 - 2t^-1"), parse_poly("-2 + 2t^-1")},
        {parse_poly("-1 + t^-1"), parse_poly("1"), parse_poly("-t^-1")},
    };
    const CanonicalPoly disk = disk_polynomial(m);
    const bool ok = m == expected && disk == canonicalize(parse_poly("2 - 3t + 2t^2"));
    return {2, "worked example matrix and disk polynomial", ok,
            "disk " + to_string(disk.poly()) + (m == expected ? ", matrix matches" : ", matrix differs:\n" + to_string(m)),
            detail::seconds_since(t0)};
}

inline Result set_reconstruction(Context& ctx)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto& sets = ctx.sets();
    const auto t1 = load_poly_table(ctx.data_dir / "r3_polynomials.tsv");
    const auto t3 = load_poly_table(ctx.data_dir / "r4_new_polynomials.tsv");
    std::vector<CanonicalPoly> table1, table3;
    for (const auto& r : t1) table1.push_back(r.alexander);
    for (const auto& r : t3) table3.push_back(r.alexander);

    std::vector<CanonicalPoly> new4;
    for (const auto& p : sets[4].polys()) {
        if (!sets[3].contains(p)) new4.push_back(p);
    }
    const auto d3 = diff_against_fixture(sets[3].polys(), table1);
    const auto d4 = diff_against_fixture(new4, table3);
    const double s = detail::seconds_since(t0);
    const bool ok = sets[2].size() == 3 && sets[3].size() == 10 && sets[4].size() == 56 && d3.exact() &&
                    d4.exact() && table1.size() == 10 && table3.size() == 46 && s < kRsetSeconds;
    std::ostringstream d;
    d << "|r2|=" << sets[2].size() << " |r3|=" << sets[3].size() << " |r4|=" << sets[4].size() << "; r3 vs table: "
      << d3.matched.size() << " matched/" << d3.missing.size() << " missing/" << d3.extra.size()
      << " extra; r4\\r3 vs table: " << d4.matched.size() << "/" << d4.missing.size() << "/" << d4.extra.size();
    return {3, "polynomial set reconstruction", ok, d.str(), s};
}

inline Result structure_count(Context&)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto n = enumerate_structures(4).size();
    return {4, "structure count", n == 8, std::to_string(n) + " structures (expected 8)", detail::seconds_since(t0)};
}

inline Result half_polynomial_suite(Context& ctx)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> bad;
    std::size_t rows = 0, dual = 0;
    for (const char* file : {"r3_polynomials.tsv", "r4_new_polynomials.tsv"}) {
        for (const auto& row : load_poly_table(ctx.data_dir / file)) {
            ++rows;
            std::set<CanonicalPoly> found;
            for (const auto& f : half_polynomials(row.alexander.poly())) found.insert(half_class(f));
            if (row.halves.size() > 1) ++dual;
            for (const auto& h : row.halves) {
                if (!found.count(half_class(h))) bad.push_back(to_string(row.alexander.poly()) + " misses " + to_string(h));
            }
        }
    }
    const bool ok = bad.empty() && rows == 56 && dual == 1;
    std::string d = std::to_string(rows) + " rows, " + std::to_string(dual) + " with two factorizations";
    if (!bad.empty()) d += ": " + detail::join(bad);
    return {5, "half-polynomials", ok, d, detail::seconds_since(t0)};
}

inline Result gamma_closed_form(Context& ctx)
{
    const auto t0 = std::chrono::steady_clock::now();
    if (ctx.quick) return {6, "winding family closed form", true, "skipped (--quick)", 0};
    std::size_t cases = 0;
    std::vector<std::string> bad;
    for (int len = 1; len <= kGammaMaxM + 1; ++len) {
        WindingSequence n(static_cast<std::size_t>(len), -kGammaMaxWinding);
        for (;;) {
            ++cases;
            const LaurentPoly f = gamma_halfpoly(n);
            const auto fox = knot_polynomial(gamma_code(n)).knot;
            if (evaluate(f, 1).num != 1 || mul_reciprocal(f) != fox) {
                std::string s = "(";
                for (std::size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
                bad.push_back(s + ")");
            }
            std::size_t i = 0;
            while (i < n.size() && n[i] == kGammaMaxWinding) n[i++] = -kGammaMaxWinding;
            if (i == n.size()) break;
            ++n[i];
        }
    }
    const double s = detail::seconds_since(t0);
    std::string d = std::to_string(cases - bad.size()) + "/" + std::to_string(cases) + " sequences agree";
    if (!bad.empty()) d += ": " + detail::join(bad);
    return {6, "winding family closed form", bad.empty() && s < kGammaGridSeconds, d, s};
}

inline Result realization(Context& ctx)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> bad;
    std::size_t cases = 0;
    auto check = [&](const LaurentPoly& g) {
        ++cases;
        const WindingSequence n = realize_halfpoly(g);
        const int d = g.max_deg();
        if (gamma_halfpoly(n) != g || static_cast<int>(n.size()) != d) bad.push_back(to_string(g));
    };
    for (const char* file : {"r3_polynomials.tsv", "r4_new_polynomials.tsv"}) {
        for (const auto& row : load_poly_table(ctx.data_dir / file)) {
            for (const auto& h : row.halves) check(detail::unit_normalized_half(h));
        }
    }
    // Every g = a_0 + ... + a_d t^d with a_0, a_d != 0, |a_i| <= bound and g(1) = 1.
    for (int d = 0; d <= kRealizeMaxDegree; ++d) {
        std::vector<Coeff> a(static_cast<std::size_t>(d + 1), -kRealizeMaxCoeff);
        for (;;) {
            Coeff sum = 0;
            for (Coeff x : a) sum += x;
            if (sum == 1 && a.front() != 0 && a.back() != 0) check(LaurentPoly(a, 0));
            std::size_t i = 0;
            while (i < a.size() && a[i] == kRealizeMaxCoeff) a[i++] = -kRealizeMaxCoeff;
            if (i == a.size()) break;
            ++a[i];
        }
    }
    std::string d = std::to_string(cases - bad.size()) + "/" + std::to_string(cases) + " round trips";
    if (!bad.empty()) d += ": " + detail::join(bad);
    return {7, "half-polynomial realization", bad.empty(), d, detail::seconds_since(t0)};
}

inline Result tabulation(Context& ctx)
{
    const auto& sets = ctx.sets();
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> bad;
    std::size_t rows = 0;
    std::size_t resolved_rows = 0;
    std::vector<std::size_t> counts;
    for (const char* file : {"knots_12n.csv", "knots_12a.csv"}) {
        const auto records = load_knots(ctx.data_dir / file);
        counts.push_back(records.size());
        const auto reports = tabulate(records, sets);
        std::map<std::string, const KnotRecord*> by_name;
        for (const auto& k : records) by_name[k.name] = &k;
        for (const auto& rep : reports) {
            ++rows;
            const KnotRecord& k = *by_name.at(rep.name);
            const std::string& range = k.extra.at("table_r");
            const auto dots = range.find("..");
            const int lo = std::stoi(range.substr(0, dots));
            const int hi = dots == std::string::npos ? lo : std::stoi(range.substr(dots + 2));
            const auto rule = parse_rule(k.extra.at("table_lower"));
            const bool class_ok = rule && std::find(rep.binding.begin(), rep.binding.end(), *rule) != rep.binding.end();
            bool value_ok = true;
            if (lo == hi) {
                ++resolved_rows;
                value_ok = rep.resolved() && rep.lower == lo;
            }
            if (!class_ok || !value_ok) {
                std::string why = rep.name + ": lower " + std::to_string(rep.lower) + " via";
                for (Rule r : rep.binding) why += " " + rule_id(r);
                why += ", upper " + (rep.upper ? std::to_string(*rep.upper) : std::string("none")) + "; table " + range +
                       " via " + k.extra.at("table_lower");
                bad.push_back(why);
            }
        }
    }
    const double s = detail::seconds_since(t0);
    const bool ok = counts == std::vector<std::size_t>{58, 49} && bad.empty() && s < kTabulationSeconds;
    std::string d = std::to_string(rows - bad.size()) + "/" + std::to_string(rows) + " rows reproduce (" +
                    std::to_string(resolved_rows) + " resolved in the table)";
    if (!bad.empty()) d += ": " + detail::join(bad);
    return {8, "tabulation", ok, d, s};
}

inline Result spectrum_suite(Context&)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::string> bad;
    auto expect = [&](const std::string& label, const SpectrumBounds& b, std::vector<int> lo, std::vector<int> hi) {
        if (b.lower() != lo || b.upper() != hi) bad.push_back(label);
    };
    SpectrumInput a{2, 5, std::nullopt, 4, {{0, 4}, {1, 2}}};
    expect("genus 2 crosscap 5 exact", spectrum_bounds(a), {4, 2, 0}, {4, 2, 0});
    SpectrumInput b{2, 5, std::nullopt, 5, {{0, 6}, {1, 3}}};
    expect("genus 2 crosscap 5 interval", spectrum_bounds(b), {5, 2, 0}, {6, 3, 0});
    expect("pretzel n=2 p=3 with r3 exclusion", pretzel_bounds(2, 3, 1, 4), {4, 2, 0}, {4, 2, 0});
    expect("pretzel n=4 p=3", pretzel_bounds(4, 3, 1), {5, 4, 3, 2, 0}, {8, 6, 4, 2, 0});
    std::string d = std::to_string(4 - bad.size()) + "/4 cases";
    if (!bad.empty()) d += ": failing " + detail::join(bad);
    return {9, "ribbon spectrum", bad.empty(), d, detail::seconds_since(t0)};
}

// Random valid code: random tree, random markings spread over the edges.
inline RibbonCode random_code(std::mt19937_64& rng, int max_vertices, int max_marks)
{
    const int V = std::uniform_int_distribution<int>(2, max_vertices)(rng);
    const int M = std::uniform_int_distribution<int>(0, max_marks)(rng);
    std::vector<int> perm(static_cast<std::size_t>(V));
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (int v = 1; v < V; ++v) {
        const int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
        Edge e{perm[static_cast<std::size_t>(parent)], perm[static_cast<std::size_t>(v)], {}};
        if (rng() & 1) std::swap(e.tail, e.head);
        edges.push_back(std::move(e));
    }
    std::uniform_int_distribution<int> pick_edge(0, V - 2);
    std::uniform_int_distribution<int> pick_vertex(1, V);
    for (int k = 0; k < M; ++k) {
        auto& marks = edges[static_cast<std::size_t>(pick_edge(rng))].marks;
        const int label = pick_vertex(rng) * ((rng() & 1) ? 1 : -1);
        marks.insert(marks.begin() + std::uniform_int_distribution<int>(0, static_cast<int>(marks.size()))(rng), label);
    }
    return RibbonCode(V, std::move(edges));
}

// Invariance of the knot polynomial under every move, plus matrix sanity. Returns failures.
inline std::vector<std::string> invariance_failures(const RibbonCode& code, std::mt19937_64& rng)
{
    std::vector<std::string> bad;
    const std::string name = to_string(code);
    const AlexMatrix m = alexander_matrix(presentation_of(code));
    for (const auto& row : m) {
        LaurentPoly s;
        for (const auto& x : row) s += x;
        if (!s.is_zero()) bad.push_back(name + ": nonzero row sum");
    }
    std::optional<CanonicalPoly> minor;
    for (std::size_t j = 0; j < m.front().size(); ++j) {
        const LaurentPoly d = determinant_up_to_unit(delete_column(m, j));
        if (d.is_zero() || (minor && canonicalize(d) != *minor)) {
            bad.push_back(name + ": maximal minors disagree");
            break;
        }
        minor = canonicalize(d);
    }
    const CanonicalPoly knot = knot_polynomial(code).knot;
    auto same = [&](const RibbonCode& other, const std::string& move) {
        if (knot_polynomial(other).knot != knot) bad.push_back(name + ": changed by " + move + " -> " + to_string(other));
    };

    std::vector<int> perm(static_cast<std::size_t>(code.vertex_count() + 1));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    same(relabel(code, perm), "relabeling");

    auto edges = code.edges();
    for (auto& e : edges) {
        if (rng() & 1) e = e.reversed();
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    same(RibbonCode(code.vertex_count(), edges), "edge reversal");

    same(negate(code), "negation");
    for (int v = 1; v <= code.vertex_count(); ++v) {
        if (auto moved = leaf_isotopy(code, v)) same(*moved, "leaf isotopy at v" + std::to_string(v));
    }
    RibbonCode cur = code;
    for (;;) {
        std::optional<ReducibleWitness> w;
        for (int rule = 1; rule <= 3 && !w; ++rule) w = find_rule(cur, rule);
        if (!w) break;
        RibbonCode next;
        if (w->rule == 1) {
            next = contract_edge(cur, static_cast<std::size_t>(w->edge));
        } else {
            auto es = cur.edges();
            auto& marks = es[static_cast<std::size_t>(w->edge)].marks;
            marks.erase(marks.begin() + w->position, marks.begin() + w->position + (w->rule == 2 ? 2 : 1));
            next = RibbonCode(cur.vertex_count(), std::move(es));
        }
        same(next, "reduction rule " + std::to_string(w->rule));
        cur = next;
    }
    if (reduce(code) != cur) bad.push_back(name + ": reduce disagrees with stepwise reduction");
    return bad;
}

inline Result invariance(Context&)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(kInvarianceSeed);
    std::vector<std::string> bad;
    for (int i = 0; i < kInvarianceCodes; ++i) {
        const RibbonCode code = random_code(rng, kInvarianceMaxVertices, kInvarianceMaxMarks);
        for (auto& b : invariance_failures(code, rng)) bad.push_back(std::move(b));
    }
    std::string d = std::to_string(kInvarianceCodes) + " random codes, " + std::to_string(bad.size()) + " failures";
    if (!bad.empty()) d += ": " + detail::join(bad);
    return {10, "invariance properties", bad.empty(), d, detail::seconds_since(t0)};
}

struct Check {
    int id;
    const char* name;
    std::function<Result(Context&)> run;
};

inline std::vector<Check> all_checks()
{
    return {
        {1, "golden code polynomials", golden_codes},
        {2, "worked example matrix and disk polynomial", worked_example},
        {3, "polynomial set reconstruction", set_reconstruction},
        {4, "structure count", structure_count},
        {5, "half-polynomials", half_polynomial_suite},
        {6, "winding family closed form", gamma_closed_form},
        {7, "half-polynomial realization", realization},
        {8, "tabulation", tabulation},
        {9, "ribbon spectrum", spectrum_suite},
        {10, "invariance properties", invariance},
    };
}

inline std::string format(const Result& r)
{
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << ": " << r.detail;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << " (" << r.seconds << " s)";
    return os.str();
}

/// Runs every check, printing one line each. Returns the number of failures.
inline int run_all(Context& ctx, std::ostream& out)
{
    int failures = 0;
    const auto drift = verify_checksums(ctx.data_dir);
    if (!drift.empty()) {
        out << "FAIL  fixtures: " << detail::join(drift) << "\n";
        ++failures;
    }
    for (const auto& check : all_checks()) {
        Result r{check.id, check.name, false, {}, 0};
        try {
            r = check.run(ctx);
        } catch (const std::exception& e) {
            r.detail = std::string("exception: ") + e.what();
        }
        out << format(r) << "\n" << std::flush;
        failures += !r.passed;
    }
    out << (failures ? "FAILED: " + std::to_string(failures) + " check(s)" : std::string("ALL PASSED")) << "\n";
    return failures;
}

}  // namespace ribbon::acceptance
