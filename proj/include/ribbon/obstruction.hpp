#pragma once

// Lower bounds on ribbon numbers from genus, polynomial-set exclusion,
// crosscap number and the 2 - 5t + 2t^2 special case, combined with supplied
// upper bounds into per-knot intervals.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ribbon/enumeration.hpp"
#include "ribbon/error.hpp"
#include "ribbon/laurent.hpp"

namespace ribbon {

struct UpperBound {
    int value = 0;
    std::string source;
};

struct KnotRecord {
    std::string name;
    Coeff determinant = 0;
    CanonicalPoly alexander;
    int genus = 0;
    std::optional<int> crosscap;
    std::optional<int> genus4;
    std::vector<UpperBound> uppers;
    bool nontrivial = false;  // explicit flag for knots whose polynomial is 1
    std::map<std::string, std::string> extra;  // unrecognized CSV columns
};

enum class Rule { baseline, genus, rset_exclusion, crosscap, special };

inline std::string rule_id(Rule r)
{
    switch (r) {
    case Rule::baseline: return "baseline";
    case Rule::genus: return "genus";
    case Rule::rset_exclusion: return "rset-exclusion";
    case Rule::crosscap: return "crosscap";
    case Rule::special: return "special";
    }
    return "?";
}

inline std::optional<Rule> parse_rule(const std::string& s)
{
    for (Rule r : {Rule::baseline, Rule::genus, Rule::rset_exclusion, Rule::crosscap, Rule::special}) {
        if (rule_id(r) == s) return r;
    }
    return std::nullopt;
}

struct Justification {
    Rule rule;
    int value;
    std::string detail;
};

struct LowerBound {
    int value = 0;
    std::vector<Justification> fired;  // every rule that produced a bound, in rule order
    std::vector<Rule> binding;         // rules whose bound equals `value`
};

/// Rejects records whose determinant, symmetry or factorization rule them out
/// as ribbon-knot data.
inline void validate_record(const KnotRecord& k)
{
    const LaurentPoly& d = k.alexander.poly();
    if (!d.is_palindromic()) throw DataError(k.name + ": Alexander polynomial is not palindromic");
    if (determinant(d) != k.determinant) {
        throw DataError(k.name + ": determinant " + std::to_string(k.determinant) + " does not match |Δ(-1)| = " +
                        std::to_string(determinant(d)));
    }
    const Coeff at_one = evaluate(d, 1).num;
    if (at_one != 1 && at_one != -1) throw DataError(k.name + ": |Δ(1)| != 1");
    if (half_polynomials(d).empty()) throw DataError(k.name + ": Alexander polynomial has no half-polynomial");
    if (k.genus < 0) throw DataError(k.name + ": negative genus");
    if (k.crosscap && *k.crosscap < 0) throw DataError(k.name + ": negative crosscap number");
    if (k.genus4 && (*k.genus4 < 0 || *k.genus4 > k.genus)) throw DataError(k.name + ": 4-genus out of range");
}

inline const CanonicalPoly& special_polynomial()
{
    static const CanonicalPoly p = canonicalize(LaurentPoly({2, -5, 2}));
    return p;
}

/// `rsets` holds complete polynomial sets; each one with r >= 1 that misses the
/// polynomial forces ribbon number at least r + 1.
inline LowerBound lower_bound(const KnotRecord& k, const std::vector<RSet>& rsets)
{
    LowerBound lb;
    auto fire = [&](Rule rule, int value, std::string detail) {
        lb.fired.push_back({rule, value, std::move(detail)});
    };
    const bool trivial_poly = k.alexander == CanonicalPoly::one();
    if (!trivial_poly) fire(Rule::baseline, 2, "nontrivial Alexander polynomial");
    else if (k.nontrivial) fire(Rule::baseline, 2, "flagged nontrivial");
    if (k.genus > 0) fire(Rule::genus, k.genus, "genus " + std::to_string(k.genus));

    int excluded = 0;
    for (const auto& s : rsets) {
        if (s.r >= 1 && s.r > excluded && !s.contains(k.alexander)) excluded = s.r;
    }
    if (excluded > 0) fire(Rule::rset_exclusion, excluded + 1, "not in the r <= " + std::to_string(excluded) + " set");

    if (k.genus >= 2 && k.crosscap && *k.crosscap >= 3) {
        fire(Rule::crosscap, 3, "genus " + std::to_string(k.genus) + ", crosscap " + std::to_string(*k.crosscap));
    }
    if (k.genus >= 2 && k.alexander == special_polynomial()) fire(Rule::special, 3, "Δ = 2 - 5t + 2t^2, genus >= 2");

    for (const auto& j : lb.fired) lb.value = std::max(lb.value, j.value);
    for (const auto& j : lb.fired) {
        if (j.value == lb.value && lb.value > 0) lb.binding.push_back(j.rule);
    }
    return lb;
}

/// Upper bound c - ell from a symmetric-union presentation with c crossings
/// off the axis and ell of them removable.
inline int symmetric_union_bound(int c, int ell)
{
    if (c < 0 || ell < 0) throw DataError("symmetric_union_bound: negative argument");
    if (ell > c) throw DataError("symmetric_union_bound: ell exceeds c");
    return c - ell;
}

struct BoundReport {
    std::string name;
    int lower = 0;
    std::optional<int> upper;  // empty: unbounded
    std::vector<Justification> justifications;
    std::vector<Rule> binding;
    std::string upper_source;

    bool resolved() const { return upper && *upper == lower; }
    bool consistent() const { return !upper || lower <= *upper; }
};

namespace detail {

// "12n_4" < "12n_19": split into text and number runs.
inline std::vector<std::pair<std::string, long>> natural_key(const std::string& s)
{
    std::vector<std::pair<std::string, long>> key;
    std::size_t i = 0;
    while (i < s.size()) {
        std::string text;
        while (i < s.size() && !std::isdigit(static_cast<unsigned char>(s[i]))) text += s[i++];
        long num = -1;
        if (i < s.size()) {
            num = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num = num * 10 + (s[i++] - '0');
        }
        key.push_back({text, num});
    }
    return key;
}

}  // namespace detail

inline BoundReport bound_report(const KnotRecord& k, const std::vector<RSet>& rsets)
{
    const LowerBound lb = lower_bound(k, rsets);
    BoundReport rep{k.name, lb.value, std::nullopt, lb.fired, lb.binding, {}};
    for (const auto& u : k.uppers) {
        if (!rep.upper || u.value < *rep.upper) {
            rep.upper = u.value;
            rep.upper_source = u.source;
        }
    }
    return rep;
}

/// One report per record, ordered by name (natural order).
inline std::vector<BoundReport> tabulate(const std::vector<KnotRecord>& records, const std::vector<RSet>& rsets)
{
    std::vector<BoundReport> out;
    out.reserve(records.size());
    for (const auto& k : records) out.push_back(bound_report(k, rsets));
    std::sort(out.begin(), out.end(), [](const BoundReport& a, const BoundReport& b) {
        return std::tuple(detail::natural_key(a.name), a.name) < std::tuple(detail::natural_key(b.name), b.name);
    });
    return out;
}

}  // namespace ribbon
