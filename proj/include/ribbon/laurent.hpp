#pragma once

// Integer Laurent polynomials in one variable t.
//
// A LaurentPoly stores a dense coefficient vector starting at exponent
// min_deg. The zero polynomial is the empty vector with min_deg 0; every other
// value has nonzero first and last coefficients. All arithmetic is exact on
// checked 64-bit integers: an overflow throws rather than wrapping.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ribbon/detail/checked.hpp"
#include "ribbon/error.hpp"

namespace ribbon {

using Coeff = std::int64_t;

class LaurentPoly {
public:
    LaurentPoly() = default;

    LaurentPoly(std::vector<Coeff> coeffs, int min_deg = 0)
        : coeffs_(std::move(coeffs)), min_deg_(min_deg)
    {
        normalize();
    }

    static LaurentPoly constant(Coeff c) { return LaurentPoly({c}, 0); }
    static LaurentPoly monomial(Coeff c, int exponent) { return LaurentPoly({c}, exponent); }

    bool is_zero() const { return coeffs_.empty(); }
    int min_deg() const { return min_deg_; }
    int max_deg() const { return min_deg_ + static_cast<int>(coeffs_.size()) - 1; }
    // Number of exponents spanned; the degree of the unit-normalized polynomial plus one.
    int width() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    Coeff coeff(int exponent) const
    {
        const int i = exponent - min_deg_;
        if (i < 0 || i >= width()) return 0;
        return coeffs_[static_cast<std::size_t>(i)];
    }

    Coeff leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    Coeff trailing() const { return coeffs_.empty() ? 0 : coeffs_.front(); }

    LaurentPoly shifted(int k) const
    {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.min_deg_ += k;
        return r;
    }

    bool is_palindromic() const
    {
        return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
    }

    LaurentPoly operator-() const
    {
        LaurentPoly r = *this;
        for (auto& c : r.coeffs_) c = detail::neg(c);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& q) { return *this = sum(*this, q, false); }
    LaurentPoly& operator-=(const LaurentPoly& q) { return *this = sum(*this, q, true); }
    LaurentPoly& operator*=(const LaurentPoly& q) { return *this = product(*this, q); }

    friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return sum(p, q, false); }
    friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return sum(p, q, true); }
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return product(p, q); }

    // Lexicographic on the coefficient vector, then on min_deg.
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
    friend auto operator<=>(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (auto c = std::lexicographical_compare_three_way(a.coeffs_.begin(), a.coeffs_.end(),
                                                           b.coeffs_.begin(), b.coeffs_.end());
            c != 0) {
            return c;
        }
        return a.min_deg_ <=> b.min_deg_;
    }

private:
    void normalize()
    {
        auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; });
        if (first == coeffs_.end()) {
            coeffs_.clear();
            min_deg_ = 0;
            return;
        }
        min_deg_ += static_cast<int>(first - coeffs_.begin());
        coeffs_.erase(coeffs_.begin(), first);
        while (coeffs_.back() == 0) coeffs_.pop_back();
    }

    static LaurentPoly sum(const LaurentPoly& p, const LaurentPoly& q, bool subtract)
    {
        if (q.is_zero()) return p;
        if (p.is_zero()) return subtract ? -q : q;
        const int lo = std::min(p.min_deg_, q.min_deg_);
        const int hi = std::max(p.max_deg(), q.max_deg());
        std::vector<Coeff> c(static_cast<std::size_t>(hi - lo + 1), 0);
        for (int k = lo; k <= hi; ++k) {
            const Coeff b = q.coeff(k);
            c[static_cast<std::size_t>(k - lo)] =
                subtract ? detail::sub(p.coeff(k), b) : detail::add(p.coeff(k), b);
        }
        return LaurentPoly(std::move(c), lo);
    }

    static LaurentPoly product(const LaurentPoly& p, const LaurentPoly& q)
    {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Coeff> c(p.coeffs_.size() + q.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (p.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
                c[i + j] = detail::add(c[i + j], detail::mul(p.coeffs_[i], q.coeffs_[j]));
            }
        }
        return LaurentPoly(std::move(c), p.min_deg_ + q.min_deg_);
    }

    std::vector<Coeff> coeffs_;
    int min_deg_ = 0;
};

/// A nonzero Laurent polynomial normalized within its unit orbit {±t^k p}:
/// min_deg 0 and positive leading coefficient.
class CanonicalPoly {
public:
    CanonicalPoly() : poly_(LaurentPoly::constant(1)) {}

    static CanonicalPoly one() { return {}; }

    const LaurentPoly& poly() const { return poly_; }
    operator const LaurentPoly&() const { return poly_; }

    friend bool operator==(const CanonicalPoly&, const CanonicalPoly&) = default;
    friend auto operator<=>(const CanonicalPoly& a, const CanonicalPoly& b) { return a.poly_ <=> b.poly_; }

private:
    explicit CanonicalPoly(LaurentPoly p) : poly_(std::move(p)) {}
    friend CanonicalPoly canonicalize(const LaurentPoly& p);

    LaurentPoly poly_;
};

inline CanonicalPoly canonicalize(const LaurentPoly& p)
{
    if (p.is_zero()) throw std::invalid_argument("canonicalize: zero polynomial has no unit normal form");
    LaurentPoly q = p.shifted(-p.min_deg());
    if (q.leading() < 0) q = -q;
    return CanonicalPoly(std::move(q));
}

inline LaurentPoly reciprocal(const LaurentPoly& p)
{
    if (p.is_zero()) return p;
    std::vector<Coeff> c(p.coeffs().rbegin(), p.coeffs().rend());
    return LaurentPoly(std::move(c), -p.max_deg());
}

inline CanonicalPoly mul_reciprocal(const LaurentPoly& f)
{
    if (f.is_zero()) throw std::invalid_argument("mul_reciprocal: zero polynomial");
    return canonicalize(f * reciprocal(f));
}

/// Exact rational number with positive denominator in lowest terms.
struct Rational {
    Coeff num = 0;
    Coeff den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

inline Rational make_rational(Coeff num, Coeff den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = detail::neg(num);
        den = detail::neg(den);
    }
    const Coeff g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

inline Rational evaluate(const LaurentPoly& p, Coeff x)
{
    if (p.is_zero()) return {0, 1};
    if (x == 0) {
        if (p.min_deg() < 0) throw std::domain_error("evaluate: negative exponent at t = 0");
        return {p.coeff(0), 1};
    }
    // Horner on the coefficient vector, then account for t^min_deg.
    Coeff acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = detail::add(detail::mul(acc, x), *it);
    }
    if (p.min_deg() >= 0) return {detail::mul(acc, detail::pow(x, static_cast<unsigned>(p.min_deg()))), 1};
    return make_rational(acc, detail::pow(x, static_cast<unsigned>(-p.min_deg())));
}

/// |Δ(−1)|.
inline Coeff determinant(const LaurentPoly& delta)
{
    return detail::abs(evaluate(delta, -1).num);
}

namespace detail {

// Dense polynomials in Z[t], index = exponent, no trailing zeros.
using Dense = std::vector<Coeff>;

inline void trim(Dense& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int deg(const Dense& a) { return static_cast<int>(a.size()) - 1; }

inline Coeff content(const Dense& a)
{
    Coeff g = 0;
    for (Coeff c : a) g = std::gcd(g, c);
    return g;
}

inline Dense primitive_part(Dense a)
{
    const Coeff g = content(a);
    if (g > 1) {
        for (auto& c : a) c /= g;
    }
    if (!a.empty() && a.back() < 0) {
        for (auto& c : a) c = neg(c);
    }
    return a;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b
inline Dense pseudo_remainder(Dense a, const Dense& b)
{
    const int db = deg(b);
    const Coeff lb = b.back();
    int e = deg(a) - db + 1;
    while (!a.empty() && deg(a) >= db) {
        const Coeff la = a.back();
        const int shift = deg(a) - db;
        for (auto& c : a) c = mul(c, lb);
        for (int j = 0; j <= db; ++j) {
            auto& slot = a[static_cast<std::size_t>(j + shift)];
            slot = sub(slot, mul(la, b[static_cast<std::size_t>(j)]));
        }
        trim(a);
        --e;
    }
    if (e > 0) {
        const Coeff f = pow(lb, static_cast<unsigned>(e));
        for (auto& c : a) c = mul(c, f);
    }
    return a;
}

inline Dense exact_scalar_div(Dense a, Coeff d)
{
    for (auto& c : a) {
        if (c % d != 0) throw std::logic_error("subresultant step: inexact scalar division");
        c /= d;
    }
    return a;
}

// gcd of two nonzero primitive polynomials by the subresultant remainder sequence.
inline Dense primitive_gcd(Dense a, Dense b)
{
    if (deg(a) < deg(b)) std::swap(a, b);
    Coeff g = 1;
    Coeff h = 1;
    for (;;) {
        const int delta = deg(a) - deg(b);
        Dense r = pseudo_remainder(a, b);
        if (r.empty()) return primitive_part(b);
        if (deg(r) == 0) return {1};
        a = std::move(b);
        b = exact_scalar_div(std::move(r), mul(g, pow(h, static_cast<unsigned>(delta))));
        g = a.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            const Coeff num = pow(g, static_cast<unsigned>(delta));
            const Coeff den = pow(h, static_cast<unsigned>(delta - 1));
            if (num % den != 0) throw std::logic_error("subresultant step: inexact h update");
            h = num / den;
        }
    }
}

}  // namespace detail

/// Greatest common divisor in Z[t, t^-1], up to units.
inline CanonicalPoly gcd(const LaurentPoly& p, const LaurentPoly& q)
{
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd: both arguments are zero");
    if (q.is_zero()) return canonicalize(p);
    if (p.is_zero()) return canonicalize(q);
    detail::Dense a = p.coeffs();
    detail::Dense b = q.coeffs();
    const Coeff c = std::gcd(detail::content(a), detail::content(b));
    detail::Dense g = detail::primitive_gcd(detail::primitive_part(a), detail::primitive_part(b));
    for (auto& x : g) x = detail::mul(x, c);
    return canonicalize(LaurentPoly(std::move(g), 0));
}

/// p / q for q dividing p exactly in Z[t, t^-1]; throws std::domain_error otherwise.
inline LaurentPoly exact_quotient(const LaurentPoly& p, const LaurentPoly& q)
{
    if (q.is_zero()) throw std::domain_error("exact_quotient: division by zero");
    if (p.is_zero()) return {};
    detail::Dense a = p.coeffs();
    const detail::Dense& b = q.coeffs();
    const int db = detail::deg(b);
    if (detail::deg(a) < db) throw std::domain_error("exact_quotient: inexact division");
    detail::Dense quot(static_cast<std::size_t>(detail::deg(a) - db + 1), 0);
    while (!a.empty() && detail::deg(a) >= db) {
        const int shift = detail::deg(a) - db;
        if (a.back() % b.back() != 0) throw std::domain_error("exact_quotient: inexact division");
        const Coeff f = a.back() / b.back();
        quot[static_cast<std::size_t>(shift)] = f;
        for (int j = 0; j <= db; ++j) {
            auto& slot = a[static_cast<std::size_t>(j + shift)];
            slot = detail::sub(slot, detail::mul(f, b[static_cast<std::size_t>(j)]));
        }
        detail::trim(a);
    }
    if (!a.empty()) throw std::domain_error("exact_quotient: inexact division");
    return LaurentPoly(std::move(quot), p.min_deg() - q.min_deg());
}

/// Half-polynomial normal form: min_deg 0, f(1) = +1 when f(1) = ±1, and the
/// lexicographically smaller coefficient vector of f and its reciprocal.
inline LaurentPoly normalize_half(const LaurentPoly& f)
{
    if (f.is_zero()) throw std::invalid_argument("normalize_half: zero polynomial");
    LaurentPoly g = f.shifted(-f.min_deg());
    if (evaluate(g, 1).num < 0) g = -g;
    LaurentPoly r = reciprocal(g);
    r = r.shifted(-r.min_deg());
    return std::lexicographical_compare(r.coeffs().begin(), r.coeffs().end(), g.coeffs().begin(),
                                        g.coeffs().end())
               ? r
               : g;
}

/// Class of f modulo units and t <-> t^-1, as a comparable key.
inline CanonicalPoly half_class(const LaurentPoly& f)
{
    return std::min(canonicalize(f), canonicalize(reciprocal(f)));
}

namespace detail {

inline Coeff binomial(int n, int k)
{
    Coeff r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Smallest r with r * r >= n.
inline Coeff ceil_sqrt(Coeff n)
{
    Coeff r = 0;
    while (mul(r, r) < n) ++r;
    return r;
}

// Coefficient bound |f_i| <= C(d, i) * M(f) where M(f)^2 = M(target) <= ||target||_2,
// so M(f) <= ceil(ceil(||target||_2^2)^(1/4)).
inline std::vector<Coeff> half_coefficient_bounds(const Dense& target, int d)
{
    Coeff norm2 = 0;
    for (Coeff c : target) norm2 = add(norm2, mul(c, c));
    const Coeff mahler = ceil_sqrt(ceil_sqrt(norm2));
    std::vector<Coeff> bound(static_cast<std::size_t>(d + 1));
    for (int i = 0; i <= d; ++i) bound[static_cast<std::size_t>(i)] = mul(binomial(d, i), mahler);
    return bound;
}

class HalfSearch {
public:
    HalfSearch(Dense target, int d) : target_(std::move(target)), d_(d), f_(static_cast<std::size_t>(d + 1), 0)
    {
        bound_ = half_coefficient_bounds(target_, d_);
    }

    std::vector<Dense> run()
    {
        const Coeff c0 = target_[0];
        for (Coeff a = 1; a <= abs(c0); ++a) {
            if (c0 % a != 0) continue;
            for (Coeff f0 : {a, neg(a)}) {
                f_[0] = f0;
                f_[static_cast<std::size_t>(d_)] = c0 / f0;
                step(1);
            }
        }
        return found_;
    }

private:
    Coeff at(int i) const { return f_[static_cast<std::size_t>(i)]; }
    Coeff& at(int i) { return f_[static_cast<std::size_t>(i)]; }
    Coeff bound(int i) const { return bound_[static_cast<std::size_t>(i)]; }

    // Coefficient of t^s in f(t) * t^d f(1/t), excluding the products involving
    // the two unknowns f_s and f_{d-s}.
    Coeff known_part(int s) const
    {
        Coeff k = 0;
        for (int i = 1; i < s; ++i) k = add(k, mul(at(i), at(d_ - s + i)));
        return k;
    }

    void step(int s)
    {
        const int partner = d_ - s;
        if (s > partner) {
            finish();
            return;
        }
        const Coeff rhs = sub(target_[static_cast<std::size_t>(s)], known_part(s));
        if (s == partner) {
            // rhs = f_s * (f_0 + f_d)
            const Coeff m = add(at(0), at(d_));
            if (m != 0) {
                if (rhs % m != 0) return;
                const Coeff v = rhs / m;
                if (abs(v) > bound(s)) return;
                at(s) = v;
                step(s + 1);
            } else if (rhs == 0) {
                for (Coeff v = -bound(s); v <= bound(s); ++v) {
                    at(s) = v;
                    step(s + 1);
                }
            }
            return;
        }
        // rhs = f_0 * f_{d-s} + f_s * f_d
        for (Coeff v = -bound(s); v <= bound(s); ++v) {
            const Coeff rest = sub(rhs, mul(v, at(d_)));
            if (rest % at(0) != 0) continue;
            const Coeff w = rest / at(0);
            if (abs(w) > bound(partner)) continue;
            at(s) = v;
            at(partner) = w;
            step(s + 1);
        }
    }

    void finish()
    {
        Coeff at_one = 0;
        for (Coeff c : f_) at_one = add(at_one, c);
        if (at_one != 1 && at_one != -1) return;
        // Full check of f(t) * t^d f(1/t) == target.
        Dense prod(static_cast<std::size_t>(2 * d_ + 1), 0);
        for (int i = 0; i <= d_; ++i) {
            for (int j = 0; j <= d_; ++j) {
                auto& slot = prod[static_cast<std::size_t>(i + d_ - j)];
                slot = add(slot, mul(at(i), at(j)));
            }
        }
        if (prod == target_) found_.push_back(f_);
    }

    Dense target_;
    int d_;
    Dense f_;
    std::vector<Coeff> bound_;
    std::vector<Dense> found_;
};

}  // namespace detail

/// All f with f(t) f(t^-1) equal to Δ up to units, f(1) = 1, deg f = deg Δ / 2,
/// one representative per class modulo t <-> t^-1 (see normalize_half).
inline std::vector<LaurentPoly> half_polynomials(const LaurentPoly& delta)
{
    if (delta.is_zero()) throw std::invalid_argument("half_polynomials: zero polynomial");
    const LaurentPoly base = canonicalize(delta).poly();
    if (!base.is_palindromic()) throw std::invalid_argument("half_polynomials: polynomial is not palindromic");
    if ((base.width() - 1) % 2 != 0) throw std::invalid_argument("half_polynomials: odd degree");
    const Rational at_one = evaluate(base, 1);
    if (at_one.num != 1 && at_one.num != -1) throw std::invalid_argument("half_polynomials: |Δ(1)| != 1");

    // f(1)^2 = 1, so the target product is the sign of Δ(1) times Δ.
    const LaurentPoly target = at_one.num < 0 ? -base : base;
    const int d = (target.width() - 1) / 2;
    if (d == 0) return {LaurentPoly::constant(1)};

    std::set<LaurentPoly> out;
    for (auto& f : detail::HalfSearch(target.coeffs(), d).run()) {
        out.insert(normalize_half(LaurentPoly(std::move(f), 0)));
    }
    return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// Text form: "4 - 20t + 33t^2 - 20t^3 + 4t^4".

inline std::string to_string(const LaurentPoly& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.min_deg(); k <= p.max_deg(); ++k) {
        const Coeff c = p.coeff(k);
        if (c == 0) continue;
        const Coeff mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (k == 0 || mag != 1) out += std::to_string(mag);
        if (k != 0) {
            out += "t";
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }
inline std::ostream& operator<<(std::ostream& os, const CanonicalPoly& p) { return os << to_string(p.poly()); }

namespace detail {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(normalize_minus(text)) {}

    LaurentPoly parse()
    {
        LaurentPoly acc;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            acc += term(sign);
            first = false;
            skip_ws();
        }
        return acc;
    }

private:
    static std::string normalize_minus(std::string_view s)
    {
        std::string out;
        for (std::size_t i = 0; i < s.size(); ++i) {
            // U+2212 MINUS SIGN
            if (i + 2 < s.size() && static_cast<unsigned char>(s[i]) == 0xE2 &&
                static_cast<unsigned char>(s[i + 1]) == 0x88 && static_cast<unsigned char>(s[i + 2]) == 0x92) {
                out += '-';
                i += 2;
            } else {
                out += s[i];
            }
        }
        return out;
    }

    LaurentPoly term(int sign)
    {
        Coeff c = 1;
        bool have_number = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = number();
            have_number = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() != 't') fail("expected 't' after '*'");
            }
        }
        int exponent = 0;
        if (peek() == 't') {
            ++pos_;
            exponent = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                const bool brace = peek() == '{';
                if (brace) {
                    ++pos_;
                    skip_ws();
                }
                int esign = 1;
                if (peek() == '-' || peek() == '+') {
                    esign = peek() == '-' ? -1 : 1;
                    ++pos_;
                    skip_ws();
                }
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
                exponent = esign * static_cast<int>(number());
                skip_ws();
                if (brace) {
                    if (peek() != '}') fail("expected '}'");
                    ++pos_;
                }
            }
        } else if (!have_number) {
            fail("expected coefficient or 't'");
        }
        return LaurentPoly::monomial(sign < 0 ? detail::neg(c) : c, exponent);
    }

    Coeff number()
    {
        Coeff v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = detail::add(detail::mul(v, 10), peek() - '0');
            ++pos_;
        }
        return v;
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial '" + text_ + "': " + what + " at offset " + std::to_string(pos_));
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline LaurentPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

}  // namespace ribbon
