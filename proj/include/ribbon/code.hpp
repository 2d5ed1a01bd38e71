#pragma once

// Ribbon codes: trees on vertices 1..V whose edges carry ordered lists of
// signed markings. An edge is written [tail, m1, ..., mk, head] and is the same
// edge as [head, mk, ..., m1, tail].

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ribbon/error.hpp"

namespace ribbon {

struct Edge {
    int tail = 0;
    int head = 0;
    std::vector<int> marks;

    Edge reversed() const
    {
        return {head, tail, std::vector<int>(marks.rbegin(), marks.rend())};
    }

    // Tuple form [tail, marks..., head].
    std::vector<int> as_tuple() const
    {
        std::vector<int> t;
        t.reserve(marks.size() + 2);
        t.push_back(tail);
        t.insert(t.end(), marks.begin(), marks.end());
        t.push_back(head);
        return t;
    }

    friend bool operator==(const Edge&, const Edge&) = default;
};

class RibbonCode {
public:
    // The trivial code: one vertex, no edges.
    RibbonCode() = default;

    RibbonCode(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count), edges_(std::move(edges))
    {
        validate();
    }

    // Vertex count is inferred as the largest endpoint index.
    explicit RibbonCode(std::vector<Edge> edges) : edges_(std::move(edges))
    {
        int v = 1;
        for (const auto& e : edges_) v = std::max({v, e.tail, e.head});
        vertex_count_ = v;
        validate();
    }

    int vertex_count() const { return vertex_count_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t i) const { return edges_.at(i); }

    int ribbon_number() const
    {
        int r = 0;
        for (const auto& e : edges_) r += static_cast<int>(e.marks.size());
        return r;
    }
    int fusion_number() const { return vertex_count_ - 1; }
    bool is_trivial() const { return edges_.empty(); }

    int degree(int v) const
    {
        int d = 0;
        for (const auto& e : edges_) d += (e.tail == v) + (e.head == v);
        return d;
    }

    // Edge indices incident to v.
    std::vector<std::size_t> incident(int v) const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (edges_[i].tail == v || edges_[i].head == v) out.push_back(i);
        }
        return out;
    }

    // in_head[v] is true when v lies in the head's component of the tree minus edge i.
    std::vector<bool> head_component(std::size_t i) const
    {
        std::vector<bool> seen(static_cast<std::size_t>(vertex_count_ + 1), false);
        std::vector<int> stack{edges_.at(i).head};
        seen[static_cast<std::size_t>(edges_[i].head)] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < edges_.size(); ++j) {
                if (j == i) continue;
                const auto& e = edges_[j];
                int w = 0;
                if (e.tail == v) w = e.head;
                else if (e.head == v) w = e.tail;
                else continue;
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = true;
                    stack.push_back(w);
                }
            }
        }
        return seen;
    }

    friend bool operator==(const RibbonCode&, const RibbonCode&) = default;

private:
    void validate() const
    {
        if (vertex_count_ < 1) throw DataError("ribbon code: vertex count must be positive");
        if (static_cast<int>(edges_.size()) != vertex_count_ - 1) {
            throw DataError("ribbon code: a tree on " + std::to_string(vertex_count_) + " vertices needs " +
                            std::to_string(vertex_count_ - 1) + " edges, got " + std::to_string(edges_.size()));
        }
        std::vector<int> parent(static_cast<std::size_t>(vertex_count_ + 1));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        for (const auto& e : edges_) {
            for (int v : {e.tail, e.head}) {
                if (v < 1 || v > vertex_count_) throw DataError("ribbon code: vertex index out of range");
            }
            if (e.tail == e.head) throw DataError("ribbon code: edge with identical endpoints");
            const int a = find(e.tail);
            const int b = find(e.head);
            if (a == b) throw DataError("ribbon code: graph is not a tree (cycle or repeated edge)");
            parent[static_cast<std::size_t>(a)] = b;
            for (int m : e.marks) {
                if (m == 0 || std::abs(m) > vertex_count_) {
                    throw DataError("ribbon code: marking label " + std::to_string(m) + " out of range");
                }
            }
        }
    }

    int vertex_count_ = 1;
    std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Text form

inline std::string to_string(const Edge& e)
{
    std::string s = "[";
    const auto t = e.as_tuple();
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(t[i]);
    }
    return s + "]";
}

inline std::string to_string(const RibbonCode& c)
{
    std::string s = "(";
    for (std::size_t i = 0; i < c.edges().size(); ++i) {
        if (i) s += ",";
        s += to_string(c.edges()[i]);
    }
    return s + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RibbonCode& c) { return os << to_string(c); }

namespace detail {

class CodeParser {
public:
    explicit CodeParser(std::string_view text) : text_(text) {}

    RibbonCode parse()
    {
        std::vector<Edge> edges;
        expect('(');
        skip_ws();
        while (peek() == '[') {
            edges.push_back(edge());
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                skip_ws();
            } else {
                break;
            }
        }
        expect(')');
        skip_ws();
        if (pos_ != text_.size()) fail("trailing characters");
        return RibbonCode(std::move(edges));
    }

private:
    Edge edge()
    {
        expect('[');
        std::vector<int> t;
        t.push_back(integer());
        while (skip_ws(), peek() == ',') {
            ++pos_;
            t.push_back(integer());
        }
        expect(']');
        if (t.size() < 2) fail("edge needs two endpoints");
        if (t.front() <= 0 || t.back() <= 0) fail("edge endpoints must be positive");
        return {t.front(), t.back(), std::vector<int>(t.begin() + 1, t.end() - 1)};
    }

    int integer()
    {
        skip_ws();
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
        } else if (text_.compare(pos_, 3, "\xE2\x88\x92") == 0) {
            negative = true;
            pos_ += 3;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (peek() - '0');
            if (v > 1000000) fail("integer too large");
            ++pos_;
        }
        return static_cast<int>(negative ? -v : v);
    }

    void expect(char c)
    {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("ribbon code '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Text that is well formed but does not describe a valid code is also a ParseError.
inline RibbonCode parse_code(std::string_view text)
{
    try {
        return detail::CodeParser(text).parse();
    } catch (const DataError& e) {
        throw ParseError("ribbon code '" + std::string(text) + "': " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Sides

enum class Side { tail, head };

/// Which component of the tree minus edge `edge_index` contains v_|label|;
/// an endpoint lies on its own side.
inline Side side_of(const RibbonCode& code, std::size_t edge_index, int label)
{
    const auto in_head = code.head_component(edge_index);
    return in_head.at(static_cast<std::size_t>(std::abs(label))) ? Side::head : Side::tail;
}

// ---------------------------------------------------------------------------
// Reducibility

struct ReducibleWitness {
    int rule = 0;          // 1..4
    int edge = -1;         // rules 1-3
    int position = -1;     // rules 2-3: index into the edge's marks
    int vertex = 0;        // rule 4
};

inline std::optional<ReducibleWitness> find_rule(const RibbonCode& code, int rule)
{
    const auto& edges = code.edges();
    switch (rule) {
    case 1:
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (edges[i].marks.empty()) return ReducibleWitness{1, static_cast<int>(i), -1, 0};
        }
        break;
    case 2:
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& m = edges[i].marks;
            for (std::size_t k = 0; k + 1 < m.size(); ++k) {
                if (m[k] == -m[k + 1]) return ReducibleWitness{2, static_cast<int>(i), static_cast<int>(k), 0};
            }
        }
        break;
    case 3:
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& e = edges[i];
            if (e.marks.empty()) continue;
            if (std::abs(e.marks.front()) == e.tail) return ReducibleWitness{3, static_cast<int>(i), 0, e.tail};
            if (std::abs(e.marks.back()) == e.head) {
                return ReducibleWitness{3, static_cast<int>(i), static_cast<int>(e.marks.size()) - 1, e.head};
            }
        }
        break;
    case 4: {
        std::vector<bool> referenced(static_cast<std::size_t>(code.vertex_count() + 1), false);
        for (const auto& e : edges) {
            for (int m : e.marks) referenced[static_cast<std::size_t>(std::abs(m))] = true;
        }
        for (int v = 1; v <= code.vertex_count(); ++v) {
            const int d = code.degree(v);
            if ((d == 1 || d == 2) && !referenced[static_cast<std::size_t>(v)]) return ReducibleWitness{4, -1, -1, v};
        }
        break;
    }
    default:
        break;
    }
    return std::nullopt;
}

/// First reducibility rule (in order 1..4) that applies, with its location.
inline std::optional<ReducibleWitness> is_reducible(const RibbonCode& code)
{
    for (int rule = 1; rule <= 4; ++rule) {
        if (auto w = find_rule(code, rule)) return w;
    }
    return std::nullopt;
}

inline bool is_irreducible(const RibbonCode& code) { return !is_reducible(code).has_value(); }

/// Merge the endpoints of edge i into the smaller index; higher indices shift down.
inline RibbonCode contract_edge(const RibbonCode& code, std::size_t i)
{
    const int keep = std::min(code.edge(i).tail, code.edge(i).head);
    const int drop = std::max(code.edge(i).tail, code.edge(i).head);
    auto remap = [&](int v) {
        const int a = std::abs(v);
        int r = a == drop ? keep : (a > drop ? a - 1 : a);
        return v < 0 ? -r : r;
    };
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < code.edges().size(); ++j) {
        if (j == i) continue;
        Edge e = code.edges()[j];
        e.tail = remap(e.tail);
        e.head = remap(e.head);
        for (auto& m : e.marks) m = remap(m);
        edges.push_back(std::move(e));
    }
    // Markings on the contracted edge disappear with it.
    return RibbonCode(code.vertex_count() - 1, std::move(edges));
}

/// Apply rules 1-3 until none applies. Rule 4 is never rewritten.
inline RibbonCode reduce(RibbonCode code)
{
    for (;;) {
        std::optional<ReducibleWitness> w;
        for (int rule = 1; rule <= 3 && !w; ++rule) w = find_rule(code, rule);
        if (!w) return code;
        if (w->rule == 1) {
            code = contract_edge(code, static_cast<std::size_t>(w->edge));
            continue;
        }
        auto edges = code.edges();
        auto& marks = edges[static_cast<std::size_t>(w->edge)].marks;
        const auto at = marks.begin() + w->position;
        if (w->rule == 2) {
            marks.erase(at, at + 2);
        } else {
            marks.erase(at);
        }
        code = RibbonCode(code.vertex_count(), std::move(edges));
    }
}

// ---------------------------------------------------------------------------
// Decomposability

struct DecompositionWitness {
    int vertex = 0;
    // Neighbors of `vertex` identifying the branches in each part.
    std::vector<int> left;
    std::vector<int> right;
};

namespace detail {

// branch[v] = neighbor of `center` whose branch contains v; 0 for center itself.
inline std::vector<int> branches_at(const RibbonCode& code, int center)
{
    std::vector<int> branch(static_cast<std::size_t>(code.vertex_count() + 1), -1);
    branch[static_cast<std::size_t>(center)] = 0;
    for (std::size_t i : code.incident(center)) {
        const auto& e = code.edge(i);
        const int root = e.tail == center ? e.head : e.tail;
        std::vector<int> stack{root};
        branch[static_cast<std::size_t>(root)] = root;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& f : code.edges()) {
                int w = 0;
                if (f.tail == v) w = f.head;
                else if (f.head == v) w = f.tail;
                else continue;
                if (branch[static_cast<std::size_t>(w)] == -1) {
                    branch[static_cast<std::size_t>(w)] = root;
                    stack.push_back(w);
                }
            }
        }
    }
    return branch;
}

// Branch of the edge's markings relative to `center`: the far endpoint's branch.
inline int host_branch(const Edge& e, const std::vector<int>& branch)
{
    const int a = branch[static_cast<std::size_t>(e.tail)];
    return a != 0 ? a : branch[static_cast<std::size_t>(e.head)];
}

}  // namespace detail

inline std::optional<DecompositionWitness> is_decomposable(const RibbonCode& code)
{
    const int V = code.vertex_count();
    for (int v = 1; v <= V; ++v) {
        if (code.degree(v) < 2) continue;
        const auto branch = detail::branches_at(code, v);
        std::vector<int> parent(static_cast<std::size_t>(V + 1));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
            return x;
        };
        for (const auto& e : code.edges()) {
            const int host = detail::host_branch(e, branch);
            for (int m : e.marks) {
                const int target = branch[static_cast<std::size_t>(std::abs(m))];
                if (target == 0) continue;
                parent[static_cast<std::size_t>(find(host))] = find(target);
            }
        }
        std::vector<int> roots;
        std::vector<int> neighbors;
        for (std::size_t i : code.incident(v)) {
            const auto& e = code.edge(i);
            neighbors.push_back(e.tail == v ? e.head : e.tail);
        }
        std::sort(neighbors.begin(), neighbors.end());
        for (int n : neighbors) roots.push_back(find(n));
        const int first = roots.front();
        if (std::all_of(roots.begin(), roots.end(), [&](int r) { return r == first; })) continue;
        DecompositionWitness w{v, {}, {}};
        for (std::size_t k = 0; k < neighbors.size(); ++k) {
            (roots[k] == first ? w.left : w.right).push_back(neighbors[k]);
        }
        return w;
    }
    return std::nullopt;
}

/// Split at the witness vertex. Each part keeps the split vertex and is
/// renumbered in increasing order of original index.
inline std::pair<RibbonCode, RibbonCode> decompose(const RibbonCode& code, const DecompositionWitness& w)
{
    const int V = code.vertex_count();
    if (w.vertex < 1 || w.vertex > V || w.left.empty() || w.right.empty()) {
        throw DataError("decompose: invalid witness");
    }
    const auto branch = detail::branches_at(code, w.vertex);
    auto build = [&](const std::vector<int>& part, const std::vector<int>& other) {
        std::vector<bool> keep(static_cast<std::size_t>(V + 1), false);
        keep[static_cast<std::size_t>(w.vertex)] = true;
        for (int v = 1; v <= V; ++v) {
            const int b = branch[static_cast<std::size_t>(v)];
            if (b > 0 && std::find(part.begin(), part.end(), b) != part.end()) keep[static_cast<std::size_t>(v)] = true;
            else if (b > 0 && std::find(other.begin(), other.end(), b) == other.end()) {
                throw DataError("decompose: witness does not cover every branch");
            }
        }
        std::vector<int> index(static_cast<std::size_t>(V + 1), 0);
        int next = 0;
        for (int v = 1; v <= V; ++v) {
            if (keep[static_cast<std::size_t>(v)]) index[static_cast<std::size_t>(v)] = ++next;
        }
        std::vector<Edge> edges;
        for (const auto& e : code.edges()) {
            if (!keep[static_cast<std::size_t>(e.tail)] || !keep[static_cast<std::size_t>(e.head)]) continue;
            Edge f{index[static_cast<std::size_t>(e.tail)], index[static_cast<std::size_t>(e.head)], {}};
            for (int m : e.marks) {
                const int mapped = index[static_cast<std::size_t>(std::abs(m))];
                if (mapped == 0) throw DataError("decompose: witness separates a marking from its vertex");
                f.marks.push_back(m < 0 ? -mapped : mapped);
            }
            edges.push_back(std::move(f));
        }
        return RibbonCode(next, std::move(edges));
    };
    return {build(w.left, w.right), build(w.right, w.left)};
}

// ---------------------------------------------------------------------------
// Moves

inline RibbonCode negate(const RibbonCode& code)
{
    auto edges = code.edges();
    for (auto& e : edges) {
        for (auto& m : e.marks) m = -m;
    }
    return RibbonCode(code.vertex_count(), std::move(edges));
}

/// Leaf isotopy at leaf vertex v_i. Returns nothing when the move does not apply.
inline std::optional<RibbonCode> leaf_isotopy(const RibbonCode& code, int leaf)
{
    if (leaf < 1 || leaf > code.vertex_count() || code.degree(leaf) != 1) return std::nullopt;
    auto edges = code.edges();
    const std::size_t ei = code.incident(leaf).front();
    // Orient the leaf edge so the leaf is the tail.
    if (edges[ei].head == leaf) edges[ei] = edges[ei].reversed();
    if (edges[ei].marks.empty()) return std::nullopt;
    const int mu = edges[ei].marks.front();
    const int j = std::abs(mu);
    if (j == leaf) return std::nullopt;

    // The unique marking labeled ±leaf must sit nearest v_j on an edge at v_j.
    int count = 0;
    for (const auto& e : edges) {
        for (int m : e.marks) count += std::abs(m) == leaf;
    }
    if (count != 1) return std::nullopt;

    edges[ei].marks.erase(edges[ei].marks.begin());
    for (auto& e : edges) {
        if (e.marks.empty()) continue;
        if (e.tail == j && std::abs(e.marks.front()) == leaf) {
            e.marks.insert(e.marks.begin() + 1, mu);
            return RibbonCode(code.vertex_count(), std::move(edges));
        }
        if (e.head == j && std::abs(e.marks.back()) == leaf) {
            e.marks.insert(e.marks.end() - 1, mu);
            return RibbonCode(code.vertex_count(), std::move(edges));
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Canonical form

/// Relabel vertices: v becomes perm[v] (perm has size V + 1, perm[0] unused).
inline RibbonCode relabel(const RibbonCode& code, const std::vector<int>& perm)
{
    auto edges = code.edges();
    for (auto& e : edges) {
        e.tail = perm.at(static_cast<std::size_t>(e.tail));
        e.head = perm.at(static_cast<std::size_t>(e.head));
        for (auto& m : e.marks) m = m < 0 ? -perm.at(static_cast<std::size_t>(-m)) : perm.at(static_cast<std::size_t>(m));
    }
    return RibbonCode(code.vertex_count(), std::move(edges));
}

class CanonicalCode {
public:
    const RibbonCode& code() const { return code_; }
    const std::string& text() const { return text_; }

    friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) { return a.key_ == b.key_; }
    friend auto operator<=>(const CanonicalCode& a, const CanonicalCode& b) { return a.key_ <=> b.key_; }

private:
    friend CanonicalCode canonical_form(const RibbonCode&, bool);
    CanonicalCode(RibbonCode code, std::vector<std::vector<int>> key)
        : code_(std::move(code)), text_(to_string(code_)), key_(std::move(key))
    {
    }

    RibbonCode code_;
    std::string text_;
    std::vector<std::vector<int>> key_;
};

namespace detail {

// Edge tuples, each in its lexicographically smaller orientation, sorted.
inline std::vector<std::vector<int>> oriented_key(const RibbonCode& code, const std::vector<int>& perm, int sign)
{
    std::vector<std::vector<int>> key;
    key.reserve(code.edges().size());
    for (const auto& e : code.edges()) {
        std::vector<int> t;
        t.reserve(e.marks.size() + 2);
        t.push_back(perm[static_cast<std::size_t>(e.tail)]);
        for (int m : e.marks) t.push_back(m < 0 ? -sign * perm[static_cast<std::size_t>(-m)] : sign * perm[static_cast<std::size_t>(m)]);
        t.push_back(perm[static_cast<std::size_t>(e.head)]);
        std::vector<int> r(t.rbegin(), t.rend());
        key.push_back(std::min(t, r));
    }
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace detail

/// Minimal tuple form over all vertex relabelings and edge orientations, and
/// over global negation when `modulo_negation` is set.
inline CanonicalCode canonical_form(const RibbonCode& code, bool modulo_negation = false)
{
    const int V = code.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(V + 1));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> best;
    bool have = false;
    do {
        for (int sign : {1, -1}) {
            if (sign < 0 && !modulo_negation) break;
            auto key = detail::oriented_key(code, perm, sign);
            if (!have || key < best) {
                best = std::move(key);
                have = true;
            }
        }
    } while (std::next_permutation(perm.begin() + 1, perm.end()));

    std::vector<Edge> edges;
    for (const auto& t : best) edges.push_back({t.front(), t.back(), std::vector<int>(t.begin() + 1, t.end() - 1)});
    return CanonicalCode(RibbonCode(V, std::move(edges)), std::move(best));
}

}  // namespace ribbon
