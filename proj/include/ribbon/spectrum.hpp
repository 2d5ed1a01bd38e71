#pragma once

// Genus-g ribbon numbers: the single-edge winding family, its closed-form
// half-polynomial, realization of a half-polynomial by that family, and
// interval propagation across genera.

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ribbon/code.hpp"
#include "ribbon/error.hpp"
#include "ribbon/laurent.hpp"

namespace ribbon {

using WindingSequence = std::vector<int>;

/// Single edge [1, B(n0), -1, B(n1), ..., -1, B(nm), 2] where B(k) repeats
/// (-1,-2) k times for k > 0 and (2,1) |k| times for k < 0.
inline RibbonCode gamma_code(const WindingSequence& n)
{
    Edge e{1, 2, {}};
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (i > 0) e.marks.push_back(-1);
        const int a = n[i] > 0 ? -1 : 2;
        const int b = n[i] > 0 ? -2 : 1;
        for (int k = 0; k < std::abs(n[i]); ++k) {
            e.marks.push_back(a);
            e.marks.push_back(b);
        }
    }
    return RibbonCode(2, {e});
}

/// f(t) = -n0 + sum_{i=1..m} (n_{i-1} - n_i) t^i + n_m t^{m+1} + t^m.
inline LaurentPoly gamma_halfpoly(const WindingSequence& n)
{
    if (n.empty()) return LaurentPoly::constant(1);
    const std::size_t m = n.size() - 1;
    std::vector<Coeff> c(m + 2, 0);
    c[0] = -n[0];
    for (std::size_t i = 1; i <= m; ++i) c[i] = static_cast<Coeff>(n[i - 1]) - n[i];
    c[m + 1] += n[m];
    c[m] += 1;
    return LaurentPoly(std::move(c), 0);
}

/// Inverse of gamma_halfpoly for g with g(1) = 1 and no negative powers:
/// the result has length deg g, and is empty when g is constant.
inline WindingSequence realize_halfpoly(const LaurentPoly& g)
{
    if (g.is_zero()) throw DataError("realize_halfpoly: zero polynomial");
    if (g.min_deg() < 0) throw DataError("realize_halfpoly: negative exponents");
    if (evaluate(g, 1).num != 1) throw DataError("realize_halfpoly: g(1) != 1");
    const int d = g.max_deg();
    if (d == 0) return {};
    const int m = d - 1;
    WindingSequence n(static_cast<std::size_t>(m + 1));
    Coeff partial = 0;
    for (int j = 0; j <= m; ++j) {
        partial = detail::add(partial, g.coeff(j));
        const Coeff v = j < m ? -partial : 1 - partial;
        if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min()) {
            throw DataError("realize_halfpoly: winding number out of range");
        }
        n[static_cast<std::size_t>(j)] = static_cast<int>(v);
    }
    return n;
}

// ---------------------------------------------------------------------------
// Spectrum intervals

constexpr int kInfinity = std::numeric_limits<int>::max();

inline std::string bound_text(int v) { return v == kInfinity ? "\xE2\x88\x9E" : std::to_string(v); }

struct GenusInterval {
    int genus = 0;
    int lo = 0;
    int hi = kInfinity;
    std::vector<std::string> provenance;
};

struct SpectrumBounds {
    std::vector<GenusInterval> levels;  // g = 0..genus
    std::vector<std::string> notes;

    std::vector<int> lower() const
    {
        std::vector<int> v;
        for (const auto& l : levels) v.push_back(l.lo);
        return v;
    }
    std::vector<int> upper() const
    {
        std::vector<int> v;
        for (const auto& l : levels) v.push_back(l.hi);
        return v;
    }
};

struct SpectrumInput {
    int genus = 0;
    std::optional<int> crosscap;
    std::optional<int> genus4;
    int r0_lower = 0;
    std::map<int, int> uppers;  // genus -> upper bound
};

inline SpectrumBounds spectrum_bounds(const SpectrumInput& in)
{
    const int G = in.genus;
    if (G < 0) throw DataError("spectrum: negative genus");
    if (in.genus4 && (*in.genus4 < 0 || *in.genus4 > G)) throw DataError("spectrum: 4-genus out of range");
    SpectrumBounds out;
    out.levels.resize(static_cast<std::size_t>(G + 1));
    auto at = [&](int g) -> GenusInterval& { return out.levels[static_cast<std::size_t>(g)]; };

    for (int g = 0; g <= G; ++g) {
        auto& L = at(g);
        L.genus = g;
        L.lo = G - g;
        if (g < G) L.provenance.push_back("lo " + std::to_string(G - g) + ": genus gap");
        // The crosscap inequality needs r_g > 0, which the genus gap forces for g < genus.
        if (in.crosscap && g < G) {
            const int c = (*in.crosscap - 2 * g + 1) / 2;
            if (*in.crosscap - 2 * g > 0 && c > L.lo) {
                L.lo = c;
                L.provenance.push_back("lo " + std::to_string(c) + ": crosscap " + std::to_string(*in.crosscap));
            }
        }
    }
    if (G >= 0 && in.r0_lower > at(0).lo) {
        at(0).lo = in.r0_lower;
        at(0).provenance.push_back("lo " + std::to_string(in.r0_lower) + ": supplied r0 lower bound");
    }
    for (int g = G - 1; g >= 0; --g) {
        if (at(g + 1).lo + 1 > at(g).lo) {
            at(g).lo = at(g + 1).lo + 1;
            at(g).provenance.push_back("lo " + std::to_string(at(g).lo) + ": strict decrease");
        }
    }

    for (const auto& [g, v] : in.uppers) {
        if (g < 0 || g > G) throw DataError("spectrum: upper bound for genus " + std::to_string(g) + " out of range");
        if (v < 0) throw DataError("spectrum: negative upper bound");
        if (v < at(g).hi) {
            at(g).hi = v;
            at(g).provenance.push_back("hi " + std::to_string(v) + ": supplied");
        }
    }
    if (at(G).hi > 0) {
        at(G).hi = 0;
        at(G).provenance.push_back("hi 0: Seifert surface");
    }
    for (int g = 1; g <= G; ++g) {
        const int prev = at(g - 1).hi;
        if (prev == kInfinity) continue;
        const int cap = std::max(prev - 1, 0);
        if (cap < at(g).hi) {
            at(g).hi = cap;
            at(g).provenance.push_back("hi " + std::to_string(cap) + ": strict decrease");
        }
    }

    if (in.genus4) {
        for (int g = 0; g < *in.genus4; ++g) {
            at(g).lo = kInfinity;
            at(g).hi = kInfinity;
            at(g).provenance.push_back("\xE2\x88\x9E: below 4-genus");
        }
    }
    for (const auto& L : out.levels) {
        if (L.lo != kInfinity && L.lo > L.hi) {
            throw DataError("spectrum: lower bound " + std::to_string(L.lo) + " exceeds upper bound " +
                            std::to_string(L.hi) + " at genus " + std::to_string(L.genus));
        }
    }
    return out;
}

/// Bounds for the (2n+1)-strand pretzel P(q, p, -p, ..., p, -p).
inline SpectrumBounds pretzel_bounds(int n, int p, int q, int r0_lower = 0)
{
    if (n < 1) throw DataError("pretzel: n must be at least 1");
    if (p < 3 || p % 2 == 0) throw DataError("pretzel: p must be odd and at least 3");
    if (q % 2 == 0) throw DataError("pretzel: q must be odd");
    SpectrumInput in;
    in.genus = n;
    in.crosscap = 2 * n + 1;
    in.r0_lower = r0_lower;
    for (int g = 0; g < n; ++g) in.uppers[g] = (n - g) * (p - 1);
    auto out = spectrum_bounds(in);
    std::string conj = "conjecture (not a bound): r_g = (n - g)(p - 1) =";
    for (int g = 0; g <= n; ++g) conj += " " + std::to_string((n - g) * (p - 1));
    out.notes.push_back(conj);
    return out;
}

}  // namespace ribbon
