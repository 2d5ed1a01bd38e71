#pragma once

// Disk-group presentations of ribbon codes, Fox derivatives at x_i -> t, and
// the resulting Alexander matrix and polynomials.

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ribbon/code.hpp"
#include "ribbon/laurent.hpp"

namespace ribbon {

struct Letter {
    int generator = 0;  // 1-based
    int exponent = 1;   // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word inverse(const Word& w)
{
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->generator, -it->exponent});
    return r;
}

inline Word free_reduce(const Word& w)
{
    Word r;
    for (const auto& l : w) {
        if (!r.empty() && r.back().generator == l.generator && r.back().exponent == -l.exponent) {
            r.pop_back();
        } else {
            r.push_back(l);
        }
    }
    return r;
}

inline int exponent_sum(const Word& w)
{
    int s = 0;
    for (const auto& l : w) s += l.exponent;
    return s;
}

struct GroupPresentation {
    int generator_count = 0;
    std::vector<Word> relations;
};

/// Letters of the band word for edge i of the code.
inline Word band_word(const RibbonCode& code, std::size_t i)
{
    const auto in_head = code.head_component(i);
    Word w;
    for (int m : code.edge(i).marks) {
        const int g = std::abs(m);
        const int sign = m > 0 ? 1 : -1;
        w.push_back({g, in_head[static_cast<std::size_t>(g)] ? sign : -sign});
    }
    return w;
}

/// One generator per vertex; edge [a, ..., b] with band word w gives a w b^-1 w^-1.
inline GroupPresentation presentation_of(const RibbonCode& code)
{
    GroupPresentation p{code.vertex_count(), {}};
    for (std::size_t i = 0; i < code.edges().size(); ++i) {
        const auto& e = code.edge(i);
        const Word w = band_word(code, i);
        Word r{{e.tail, 1}};
        r.insert(r.end(), w.begin(), w.end());
        r.push_back({e.head, -1});
        const Word wi = inverse(w);
        r.insert(r.end(), wi.begin(), wi.end());
        p.relations.push_back(std::move(r));
    }
    return p;
}

/// d w / d x_g with every generator sent to t.
inline LaurentPoly fox_derivative_eval(const Word& w, int generator)
{
    LaurentPoly acc;
    int prefix = 0;
    for (const auto& l : w) {
        if (l.exponent > 0) {
            if (l.generator == generator) acc += LaurentPoly::monomial(1, prefix);
            ++prefix;
        } else {
            --prefix;
            if (l.generator == generator) acc -= LaurentPoly::monomial(1, prefix);
        }
    }
    return acc;
}

using AlexMatrix = std::vector<std::vector<LaurentPoly>>;

inline AlexMatrix alexander_matrix(const GroupPresentation& p)
{
    AlexMatrix m;
    for (const auto& r : p.relations) {
        if (exponent_sum(r) != 0) throw std::invalid_argument("alexander_matrix: relation with nonzero exponent sum");
        std::vector<LaurentPoly> row;
        for (int g = 1; g <= p.generator_count; ++g) row.push_back(fox_derivative_eval(r, g));
        m.push_back(std::move(row));
    }
    return m;
}

/// Determinant of a square matrix of Laurent polynomials, up to a unit.
inline LaurentPoly determinant_up_to_unit(AlexMatrix a)
{
    const std::size_t n = a.size();
    if (n == 0) return LaurentPoly::constant(1);
    // Scale each row by a power of t so every entry is an ordinary polynomial.
    for (auto& row : a) {
        int lo = 0;
        bool any = false;
        for (const auto& x : row) {
            if (x.is_zero()) continue;
            lo = any ? std::min(lo, x.min_deg()) : x.min_deg();
            any = true;
        }
        if (!any) return {};
        for (auto& x : row) x = x.shifted(-lo);
    }
    // Bareiss fraction-free elimination.
    LaurentPoly prev = LaurentPoly::constant(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t s = k + 1;
            while (s < n && a[s][k].is_zero()) ++s;
            if (s == n) return {};
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = exact_quotient(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
            }
            a[i][k] = {};
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

inline AlexMatrix delete_column(const AlexMatrix& m, std::size_t col)
{
    AlexMatrix r;
    for (const auto& row : m) {
        std::vector<LaurentPoly> out;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j != col) out.push_back(row[j]);
        }
        r.push_back(std::move(out));
    }
    return r;
}

/// Canonical generator of the first elementary ideal of a (V-1) x V matrix with
/// zero row sums. All maximal minors are computed and checked to agree.
inline CanonicalPoly disk_polynomial(const AlexMatrix& m)
{
    const std::size_t cols = m.empty() ? 1 : m.front().size();
    if (m.size() + 1 != cols) throw std::invalid_argument("disk_polynomial: matrix must be (V-1) x V");
    for (const auto& row : m) {
        LaurentPoly s;
        for (const auto& x : row) s += x;
        if (!s.is_zero()) throw std::invalid_argument("disk_polynomial: row sum is not zero");
    }
    const LaurentPoly first = determinant_up_to_unit(delete_column(m, 0));
    if (first.is_zero()) throw std::logic_error("disk_polynomial: vanishing maximal minor");
    const CanonicalPoly c = canonicalize(first);
    for (std::size_t j = 1; j < cols; ++j) {
        const LaurentPoly other = determinant_up_to_unit(delete_column(m, j));
        if (other.is_zero() || canonicalize(other) != c) {
            throw std::logic_error("disk_polynomial: maximal minors disagree");
        }
    }
    return c;
}

struct CodePolynomials {
    CanonicalPoly disk;
    CanonicalPoly knot;
};

inline CodePolynomials knot_polynomial(const RibbonCode& code)
{
    const CanonicalPoly disk = disk_polynomial(alexander_matrix(presentation_of(code)));
    return {disk, mul_reciprocal(disk.poly())};
}

// ---------------------------------------------------------------------------
// Debug text

inline std::string to_string(const Word& w)
{
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += "x" + std::to_string(w[i].generator);
        if (w[i].exponent < 0) s += "^-1";
    }
    return s;
}

inline std::string to_string(const GroupPresentation& p)
{
    std::string s = "\xE2\x9F\xA8";  // U+27E8
    for (int g = 1; g <= p.generator_count; ++g) s += (g > 1 ? "," : "") + std::string("x") + std::to_string(g);
    s += " | ";
    for (std::size_t i = 0; i < p.relations.size(); ++i) s += (i ? ", " : "") + to_string(p.relations[i]);
    return s + "\xE2\x9F\xA9";  // U+27E9
}

inline std::string to_string(const AlexMatrix& m)
{
    std::string s;
    for (const auto& row : m) {
        s += "[";
        for (std::size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + to_string(row[j]);
        s += "]\n";
    }
    return s;
}

}  // namespace ribbon
