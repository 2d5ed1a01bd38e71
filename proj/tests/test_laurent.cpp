#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ribbon/laurent.hpp"

using namespace ribbon;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }
CanonicalPoly C(const char* s) { return canonicalize(parse_poly(s)); }

// Sylvester-matrix resultant, computed with rationals-free cofactor expansion
// on small matrices; independent of the PRS gcd.
Coeff det_small(std::vector<std::vector<Coeff>> m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Coeff total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<Coeff>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Coeff> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) row.push_back(m[i][k]);
            }
            minor.push_back(row);
        }
        total += (j % 2 ? -1 : 1) * m[0][j] * det_small(minor);
    }
    return total;
}

Coeff resultant(const LaurentPoly& p, const LaurentPoly& q)
{
    const auto& a = p.coeffs();
    const auto& b = q.coeffs();
    const std::size_t m = a.size() - 1, n = b.size() - 1, N = m + n;
    std::vector<std::vector<Coeff>> s(N, std::vector<Coeff>(N, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a[m - k];
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b[n - k];
    }
    return det_small(s);
}

LaurentPoly random_poly(std::mt19937_64& rng, int max_deg, int max_coeff)
{
    std::uniform_int_distribution<int> deg(0, max_deg), c(-max_coeff, max_coeff);
    std::vector<Coeff> v(static_cast<std::size_t>(deg(rng) + 1));
    for (auto& x : v) x = c(rng);
    if (v.back() == 0) v.back() = 1;
    if (v.front() == 0) v.front() = -1;
    return LaurentPoly(v, 0);
}

}  // namespace

TEST(LaurentArithmetic, Addition)
{
    EXPECT_EQ(P("1 - t") + P("t"), LaurentPoly::constant(1));
    EXPECT_EQ(LaurentPoly() + P("2 - 5t"), P("2 - 5t"));
    EXPECT_TRUE((P("2 - 5t + 2t^2") + P("-2 + 5t - 2t^2")).is_zero());
}

TEST(LaurentArithmetic, Multiplication)
{
    EXPECT_EQ(P("1 - 2t + 3t^2 - 2t^3 + t^4") * P("2 - 5t + 2t^2"), P("2 - 9t + 18t^2 - 23t^3 + 18t^4 - 9t^5 + 2t^6"));
    EXPECT_EQ(P("2 - 5t + 2t^2") * LaurentPoly::constant(1), P("2 - 5t + 2t^2"));
    EXPECT_EQ(P("2 - 5t + 2t^2") * P("2 - 5t + 2t^2"), P("4 - 20t + 33t^2 - 20t^3 + 4t^4"));
    EXPECT_EQ(P("t^-1") * P("t"), LaurentPoly::constant(1));
}

TEST(LaurentArithmetic, OverflowThrows)
{
    const LaurentPoly big = LaurentPoly::constant(Coeff{1} << 40);
    EXPECT_THROW(big * big, std::overflow_error);
}

TEST(LaurentCanonical, Examples)
{
    EXPECT_EQ(canonicalize(P("-2t^-1 + 5 - 2t")).poly(), P("2 - 5t + 2t^2"));
    EXPECT_EQ(canonicalize(P("t^7")), CanonicalPoly::one());
    EXPECT_EQ(canonicalize(P("-3t^2 + 3t^3")).poly(), P("-3 + 3t"));
    EXPECT_THROW(canonicalize(LaurentPoly()), std::invalid_argument);
}

TEST(LaurentCanonical, Reciprocal)
{
    EXPECT_EQ(reciprocal(P("-1 + 2t")), P("-1 + 2t^-1"));
    EXPECT_EQ(canonicalize(reciprocal(P("-1 + 2t"))), C("2 - t"));
    EXPECT_EQ(canonicalize(reciprocal(P("4 - 20t + 33t^2 - 20t^3 + 4t^4"))), C("4 - 20t + 33t^2 - 20t^3 + 4t^4"));
    EXPECT_EQ(reciprocal(LaurentPoly::constant(1)), LaurentPoly::constant(1));
}

TEST(LaurentCanonical, MulReciprocal)
{
    EXPECT_EQ(mul_reciprocal(P("-1 + 2t")), C("2 - 5t + 2t^2"));
    EXPECT_EQ(mul_reciprocal(P("3 - 2t")), C("6 - 13t + 6t^2"));
    EXPECT_EQ(mul_reciprocal(P("-4 + 7t - 2t^2")), C("8 - 42t + 69t^2 - 42t^3 + 8t^4"));
}

TEST(LaurentEvaluate, Examples)
{
    EXPECT_EQ(evaluate(P("2 - 5t + 2t^2"), 1).num, -1);
    EXPECT_EQ(evaluate(P("4 - 12t + 17t^2 - 12t^3 + 4t^4"), -1).num, 49);
    EXPECT_EQ(evaluate(LaurentPoly::constant(1), 5).num, 1);
    const Rational r = evaluate(P("t^-1"), 2);
    EXPECT_EQ(r.num, 1);
    EXPECT_EQ(r.den, 2);
}

TEST(LaurentEvaluate, Determinant)
{
    EXPECT_EQ(determinant(P("4 - 20t + 33t^2 - 20t^3 + 4t^4")), 81);
    EXPECT_EQ(determinant(LaurentPoly::constant(1)), 1);
    EXPECT_EQ(determinant(P("9 - 42t + 67t^2 - 42t^3 + 9t^4")), 169);
}

TEST(LaurentGcd, Examples)
{
    EXPECT_EQ(gcd(P("3 - 2t"), P("-3 + 2t")).poly(), P("-3 + 2t"));
    EXPECT_EQ(gcd(P("2 - 5t + 2t^2"), LaurentPoly()), C("2 - 5t + 2t^2"));
    EXPECT_EQ(gcd(P("2 - 2t"), P("2t - 3")), CanonicalPoly::one());
    EXPECT_EQ(gcd(P("2 - 9t + 18t^2 - 23t^3 + 18t^4 - 9t^5 + 2t^6"), P("4 - 20t + 33t^2 - 20t^3 + 4t^4")),
              C("2 - 5t + 2t^2"));
}

TEST(LaurentGcd, CoprimeIffResultantNonzero)
{
    std::mt19937_64 rng(7);
    int coprime = 0, shared = 0;
    for (int trial = 0; trial < 400; ++trial) {
        LaurentPoly p = random_poly(rng, 3, 3), q = random_poly(rng, 3, 3);
        if (trial % 3 == 0) {
            const LaurentPoly common = random_poly(rng, 1, 2);
            p = p * common;
            q = q * common;
        }
        if (p.width() < 2 || q.width() < 2) continue;
        const CanonicalPoly g = gcd(p, q);
        // A nonconstant gcd means a common root: the resultant vanishes.
        const bool nonconstant = g.poly().width() > 1;
        EXPECT_EQ(nonconstant, resultant(p, q) == 0) << p << " , " << q;
        (nonconstant ? shared : coprime)++;
        EXPECT_NO_THROW(exact_quotient(p, g.poly()));
        EXPECT_NO_THROW(exact_quotient(q, g.poly()));
    }
    EXPECT_GT(shared, 50);
    EXPECT_GT(coprime, 50);
}

TEST(LaurentGcd, ExactQuotient)
{
    EXPECT_EQ(exact_quotient(P("4 - 20t + 33t^2 - 20t^3 + 4t^4"), P("2 - 5t + 2t^2")), P("2 - 5t + 2t^2"));
    EXPECT_THROW(exact_quotient(P("1 + t^2"), P("1 + t")), std::domain_error);
}

TEST(HalfPolynomials, Examples)
{
    auto classes = [](const LaurentPoly& d) {
        std::set<CanonicalPoly> s;
        for (const auto& f : half_polynomials(d)) s.insert(half_class(f));
        return s;
    };
    EXPECT_EQ(classes(P("2 - 5t + 2t^2")), std::set<CanonicalPoly>{half_class(P("-1 + 2t"))});
    EXPECT_EQ(classes(P("4 - 20t + 33t^2 - 20t^3 + 4t^4")),
              (std::set<CanonicalPoly>{half_class(P("4 - 4t + t^2")), half_class(P("2 - 5t + 2t^2"))}));
    EXPECT_EQ(half_polynomials(LaurentPoly::constant(1)), std::vector<LaurentPoly>{LaurentPoly::constant(1)});
}

TEST(HalfPolynomials, NormalForm)
{
    for (const auto& f : half_polynomials(P("4 - 20t + 33t^2 - 20t^3 + 4t^4"))) {
        EXPECT_EQ(f.min_deg(), 0);
        EXPECT_EQ(evaluate(f, 1).num, 1);
        EXPECT_EQ(normalize_half(f), f);
        EXPECT_EQ(normalize_half(reciprocal(f)), f);
    }
}

TEST(HalfPolynomials, Rejects)
{
    EXPECT_THROW(half_polynomials(P("1 + t")), std::invalid_argument);
    EXPECT_THROW(half_polynomials(P("1 - t + 2t^2")), std::invalid_argument);
    EXPECT_THROW(half_polynomials(P("1 + t + t^2")), std::invalid_argument);
}

// Brute force over all f with small coefficients; the search must find the same classes.
TEST(HalfPolynomials, MatchesBruteForce)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-3, 3), deg(1, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const int d = deg(rng);
        std::vector<Coeff> v(static_cast<std::size_t>(d + 1));
        Coeff sum = 0;
        for (int i = 0; i < d; ++i) sum += v[static_cast<std::size_t>(i)] = c(rng);
        v[static_cast<std::size_t>(d)] = 1 - sum;
        if (v[0] == 0 || v[static_cast<std::size_t>(d)] == 0) continue;
        const CanonicalPoly delta = mul_reciprocal(LaurentPoly(v, 0));

        std::set<CanonicalPoly> brute;
        const Coeff bound = 12;
        std::vector<Coeff> f(static_cast<std::size_t>(d + 1), -bound);
        for (;;) {
            Coeff s = 0;
            for (Coeff x : f) s += x;
            if (s == 1 && f.front() != 0 && f.back() != 0 && mul_reciprocal(LaurentPoly(f, 0)) == delta) {
                brute.insert(half_class(LaurentPoly(f, 0)));
            }
            std::size_t k = 0;
            while (k < f.size() && f[k] == bound) f[k++] = -bound;
            if (k == f.size()) break;
            ++f[k];
        }
        std::set<CanonicalPoly> found;
        for (const auto& h : half_polynomials(delta.poly())) found.insert(half_class(h));
        EXPECT_EQ(found, brute) << "Delta = " << delta;
    }
}

TEST(LaurentText, FormatAndParse)
{
    EXPECT_EQ(to_string(P("4 - 20t + 33t^2")), "4 - 20t + 33t^2");
    EXPECT_EQ(to_string(P("-t^-1 + 2")), "-t^-1 + 2");
    EXPECT_EQ(to_string(LaurentPoly()), "0");
    EXPECT_EQ(P("2*t^{10} - t"), P("-t + 2t^10"));
    EXPECT_EQ(P("1 \xE2\x88\x92 t"), P("1 - t"));
    EXPECT_THROW(parse_poly("1 + + t"), ParseError);
    EXPECT_THROW(parse_poly("t^"), ParseError);
    EXPECT_THROW(parse_poly("x + 1"), ParseError);
}

TEST(LaurentText, RoundTrip)
{
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const LaurentPoly p = random_poly(rng, 6, 9).shifted(static_cast<int>(rng() % 7) - 3);
        EXPECT_EQ(parse_poly(to_string(p)), p) << to_string(p);
    }
}

TEST(LaurentProperties, RingAxiomsAndCanonical)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 300; ++i) {
        const LaurentPoly a = random_poly(rng, 4, 5), b = random_poly(rng, 4, 5), c = random_poly(rng, 4, 5);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(canonicalize(a * b), canonicalize(canonicalize(a).poly() * canonicalize(b).poly()));
        EXPECT_EQ(canonicalize(-a.shifted(3)), canonicalize(a));
        const CanonicalPoly m = mul_reciprocal(a);
        EXPECT_TRUE(m.poly().is_palindromic());
        EXPECT_EQ(m, mul_reciprocal(reciprocal(a)));
    }
}
