#pragma once

// Exhaustive enumeration of irreducible, indecomposable ribbon codes with a
// fixed total marking count, and the sets of knot polynomials they realize.

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iterator>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ribbon/code.hpp"
#include "ribbon/error.hpp"
#include "ribbon/fox.hpp"
#include "ribbon/laurent.hpp"

namespace ribbon {

/// Unlabeled tree with a positive marking count on every edge.
struct Structure {
    int vertex_count = 1;
    std::vector<std::pair<int, int>> edges;  // (a, b) with a < b, 1-based
    std::vector<int> marks;                  // per edge, each >= 1

    int total_marks() const { return std::accumulate(marks.begin(), marks.end(), 0); }
};

inline std::string to_string(const Structure& s)
{
    std::string out = "V" + std::to_string(s.vertex_count) + ":";
    for (std::size_t i = 0; i < s.edges.size(); ++i) {
        out += (i ? " " : "") + std::to_string(s.edges[i].first) + "-" + std::to_string(s.edges[i].second) + "x" +
               std::to_string(s.marks[i]);
    }
    return out;
}

enum class StructureFilter {
    none,         // every tree with every composition of r
    irreducible,  // only structures that carry at least one irreducible labeling
};

struct EnumerationOptions {
    int max_r = 4;                      // hard ceiling is 5
    unsigned threads = 0;               // 0: hardware concurrency
    std::optional<std::chrono::milliseconds> time_budget;
};

namespace detail {

using StructureKey = std::vector<std::array<int, 3>>;

inline StructureKey structure_key(int V, const std::vector<std::pair<int, int>>& edges, const std::vector<int>& marks)
{
    std::vector<int> perm(static_cast<std::size_t>(V + 1));
    std::iota(perm.begin(), perm.end(), 0);
    StructureKey best;
    bool have = false;
    do {
        StructureKey k;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const int a = perm[static_cast<std::size_t>(edges[i].first)];
            const int b = perm[static_cast<std::size_t>(edges[i].second)];
            k.push_back({std::min(a, b), std::max(a, b), marks[i]});
        }
        std::sort(k.begin(), k.end());
        if (!have || k < best) {
            best = std::move(k);
            have = true;
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best;
}

// All trees on V labeled vertices, one per isomorphism class.
inline std::vector<std::vector<std::pair<int, int>>> unlabeled_trees(int V)
{
    std::vector<std::vector<std::pair<int, int>>> out;
    if (V == 1) return {{}};
    if (V == 2) return {{{1, 2}}};
    std::set<StructureKey> seen;
    const int len = V - 2;
    std::vector<int> seq(static_cast<std::size_t>(len), 1);
    for (;;) {
        // Decode the Pruefer sequence.
        std::vector<int> degree(static_cast<std::size_t>(V + 1), 1);
        for (int x : seq) ++degree[static_cast<std::size_t>(x)];
        std::vector<std::pair<int, int>> edges;
        for (int x : seq) {
            int leaf = 1;
            while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
            edges.push_back({std::min(leaf, x), std::max(leaf, x)});
            --degree[static_cast<std::size_t>(leaf)];
            --degree[static_cast<std::size_t>(x)];
        }
        int u = 0;
        for (int v = 1; v <= V; ++v) {
            if (degree[static_cast<std::size_t>(v)] == 1) {
                if (u == 0) {
                    u = v;
                } else {
                    edges.push_back({u, v});
                }
            }
        }
        std::sort(edges.begin(), edges.end());
        const std::vector<int> ones(edges.size(), 1);
        if (seen.insert(structure_key(V, edges, ones)).second) out.push_back(edges);

        int i = len - 1;
        while (i >= 0 && seq[static_cast<std::size_t>(i)] == V) seq[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++seq[static_cast<std::size_t>(i)];
    }
    return out;
}

inline void compositions(int total, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (parts == 0) {
        if (total == 0) out.push_back(cur);
        return;
    }
    for (int k = 1; k <= total - (parts - 1); ++k) {
        cur.push_back(k);
        compositions(total - k, parts - 1, cur, out);
        cur.pop_back();
    }
}

// Walks every labeling of a structure's marking slots that avoids rules 2 and 3.
class LabelWalker {
public:
    explicit LabelWalker(const Structure& s) : s_(s)
    {
        for (std::size_t i = 0; i < s.edges.size(); ++i) {
            for (int k = 0; k < s.marks[i]; ++k) {
                slots_.push_back({i, k == 0, k == s.marks[i] - 1});
            }
        }
        labels_.assign(slots_.size(), 0);
        for (int v = 1; v <= s.vertex_count; ++v) {
            alphabet_.push_back(v);
            alphabet_.push_back(-v);
        }
    }

    const std::vector<int>& alphabet() const { return alphabet_; }

    // Visit labelings whose first slot is `first`; the visitor returns false to stop.
    template <class Visit>
    bool walk(int first, Visit&& visit)
    {
        if (slots_.empty()) return visit(build());
        if (!allowed(0, first)) return true;
        labels_[0] = first;
        return descend(1, visit);
    }

    RibbonCode build() const
    {
        std::vector<Edge> edges;
        std::size_t k = 0;
        for (std::size_t i = 0; i < s_.edges.size(); ++i) {
            Edge e{s_.edges[i].first, s_.edges[i].second, {}};
            for (int j = 0; j < s_.marks[i]; ++j) e.marks.push_back(labels_[k++]);
            edges.push_back(std::move(e));
        }
        return RibbonCode(s_.vertex_count, std::move(edges));
    }

private:
    struct Slot {
        std::size_t edge;
        bool first;
        bool last;
    };

    bool allowed(std::size_t k, int label) const
    {
        const auto& slot = slots_[k];
        const auto& e = s_.edges[slot.edge];
        if (slot.first && std::abs(label) == e.first) return false;
        if (slot.last && std::abs(label) == e.second) return false;
        if (!slot.first && labels_[k - 1] == -label) return false;
        return true;
    }

    template <class Visit>
    bool descend(std::size_t k, Visit& visit)
    {
        if (k == slots_.size()) return visit(build());
        for (int label : alphabet_) {
            if (!allowed(k, label)) continue;
            labels_[k] = label;
            if (!descend(k + 1, visit)) return false;
        }
        return true;
    }

    const Structure& s_;
    std::vector<Slot> slots_;
    std::vector<int> labels_;
    std::vector<int> alphabet_;
};

inline bool admits_irreducible_labeling(const Structure& s)
{
    LabelWalker walker(s);
    bool found = false;
    for (int first : walker.alphabet()) {
        walker.walk(first, [&](const RibbonCode& c) {
            found = !find_rule(c, 4).has_value();
            return !found;
        });
        if (found) return true;
    }
    return false;
}

}  // namespace detail

/// Trees with r markings distributed over their edges, every edge marked, up to
/// isomorphism. With the irreducible filter, structures on which every labeling
/// is reducible are dropped.
inline std::vector<Structure> enumerate_structures(int r, StructureFilter filter = StructureFilter::irreducible)
{
    if (r < 1) throw std::invalid_argument("enumerate_structures: r must be positive");
    std::vector<Structure> out;
    for (int V = 2; V <= r + 1; ++V) {
        for (const auto& tree : detail::unlabeled_trees(V)) {
            std::vector<std::vector<int>> comps;
            std::vector<int> cur;
            detail::compositions(r, V - 1, cur, comps);
            std::set<detail::StructureKey> seen;
            for (const auto& c : comps) {
                if (!seen.insert(detail::structure_key(V, tree, c)).second) continue;
                Structure s{V, tree, c};
                if (filter == StructureFilter::irreducible && !detail::admits_irreducible_labeling(s)) continue;
                out.push_back(std::move(s));
            }
        }
    }
    return out;
}

struct EnumeratedCode {
    RibbonCode code;  // canonical representative modulo relabeling, reversal and negation
    CanonicalPoly disk;
    CanonicalPoly knot;
};

/// Irreducible, indecomposable codes with exactly r markings, one per class
/// modulo relabeling, edge reversal and global negation, sorted by canonical form.
inline std::vector<EnumeratedCode> enumerate_codes(int r, const EnumerationOptions& opt = {})
{
    if (r < 1) throw std::invalid_argument("enumerate_codes: r must be positive");
    if (r > std::min(opt.max_r, 5)) {
        throw BudgetExceeded("enumerate_codes: r = " + std::to_string(r) + " exceeds the configured maximum " +
                             std::to_string(std::min(opt.max_r, 5)));
    }
    const auto structures = enumerate_structures(r, StructureFilter::irreducible);

    std::vector<std::pair<std::size_t, int>> tasks;
    for (std::size_t i = 0; i < structures.size(); ++i) {
        for (int v = 1; v <= structures[i].vertex_count; ++v) {
            tasks.push_back({i, v});
            tasks.push_back({i, -v});
        }
    }

    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();
    std::atomic<std::size_t> next{0};
    std::atomic<bool> over_budget{false};
    std::mutex merge_mutex;
    std::map<CanonicalCode, RibbonCode> merged;

    auto worker = [&] {
        std::map<CanonicalCode, RibbonCode> local;
        std::size_t ticks = 0;
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size() && !over_budget;) {
            detail::LabelWalker walker(structures[tasks[t].first]);
            walker.walk(tasks[t].second, [&](const RibbonCode& c) {
                if (opt.time_budget && (++ticks & 0x3ff) == 0 && Clock::now() - start > *opt.time_budget) {
                    over_budget = true;
                }
                if (over_budget) return false;
                if (find_rule(c, 4) || is_decomposable(c)) return true;
                auto key = canonical_form(c, true);
                if (!local.count(key)) {
                    RibbonCode rep = key.code();
                    local.emplace(std::move(key), std::move(rep));
                }
                return true;
            });
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        merged.merge(local);
    };

    unsigned n = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (over_budget) throw BudgetExceeded("enumerate_codes: time budget exhausted at r = " + std::to_string(r));

    std::vector<EnumeratedCode> out;
    out.reserve(merged.size());
    for (auto& [key, code] : merged) {
        auto polys = knot_polynomial(code);
        out.push_back({code, polys.disk, polys.knot});
    }
    return out;
}

/// Join two codes at a vertex: vertex 1 of `b` is identified with vertex 1 of `a`.
inline RibbonCode wedge(const RibbonCode& a, const RibbonCode& b)
{
    const int shift = a.vertex_count() - 1;
    auto map = [&](int v) {
        const int x = std::abs(v);
        const int y = x == 1 ? 1 : x + shift;
        return v < 0 ? -y : y;
    };
    auto edges = a.edges();
    for (auto e : b.edges()) {
        e.tail = map(e.tail);
        e.head = map(e.head);
        for (auto& m : e.marks) m = map(m);
        edges.push_back(std::move(e));
    }
    return RibbonCode(a.vertex_count() + b.vertex_count() - 1, std::move(edges));
}

struct RSet {
    int r = 0;
    std::map<CanonicalPoly, RibbonCode> witnesses;

    std::vector<CanonicalPoly> polys() const
    {
        std::vector<CanonicalPoly> out;
        for (const auto& kv : witnesses) out.push_back(kv.first);
        return out;
    }
    std::size_t size() const { return witnesses.size(); }
    bool contains(const CanonicalPoly& p) const { return witnesses.count(p) > 0; }
};

/// Knot polynomials of ribbon number at most r for every r in 0..max_r,
/// including products from decomposable codes. Index i holds the set for r = i.
inline std::vector<RSet> compute_rsets(int max_r, const EnumerationOptions& opt = {})
{
    std::vector<RSet> sets;
    sets.push_back({0, {{CanonicalPoly::one(), RibbonCode()}}});
    for (int r = 1; r <= max_r; ++r) {
        RSet cur = sets.back();
        cur.r = r;
        for (const auto& e : enumerate_codes(r, opt)) cur.witnesses.emplace(e.knot, e.code);
        for (int a = 1; a < r; ++a) {
            for (const auto& [p, wp] : sets[static_cast<std::size_t>(a)].witnesses) {
                for (const auto& [q, wq] : sets[static_cast<std::size_t>(r - a)].witnesses) {
                    cur.witnesses.emplace(canonicalize(p.poly() * q.poly()), wedge(wp, wq));
                }
            }
        }
        sets.push_back(std::move(cur));
    }
    return sets;
}

inline RSet compute_rset(int r, const EnumerationOptions& opt = {})
{
    return compute_rsets(r, opt).back();
}

struct FixtureDiff {
    std::vector<CanonicalPoly> matched;
    std::vector<CanonicalPoly> missing;  // in the fixture, not computed
    std::vector<CanonicalPoly> extra;    // computed, not in the fixture

    bool exact() const { return missing.empty() && extra.empty(); }
};

inline FixtureDiff diff_against_fixture(const std::vector<CanonicalPoly>& ours,
                                        const std::vector<CanonicalPoly>& fixture)
{
    const std::set<CanonicalPoly> a(ours.begin(), ours.end());
    const std::set<CanonicalPoly> b(fixture.begin(), fixture.end());
    FixtureDiff d;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d.matched));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(d.missing));
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d.extra));
    return d;
}

}  // namespace ribbon
