#include <gtest/gtest.h>

#include "ribbon/fox.hpp"
#include "ribbon/spectrum.hpp"

using namespace ribbon;

namespace {

LaurentPoly P(const char* s) { return parse_poly(s); }

SpectrumInput input(int genus, std::optional<int> crosscap, int r0, std::map<int, int> uppers)
{
    SpectrumInput in;
    in.genus = genus;
    in.crosscap = crosscap;
    in.r0_lower = r0;
    in.uppers = std::move(uppers);
    return in;
}

using V = std::vector<int>;

}  // namespace

TEST(GammaCode, Examples)
{
    EXPECT_EQ(gamma_code({4, -2}), parse_code("([1,-1,-2,-1,-2,-1,-2,-1,-2,-1,2,1,2,1,2])"));
    EXPECT_EQ(gamma_code({4, -2}).ribbon_number(), 13);
    EXPECT_EQ(gamma_code({0, 0}), parse_code("([1,-1,2])"));
    EXPECT_EQ(gamma_code({2}), parse_code("([1,-1,-2,-1,-2,2])"));
    EXPECT_EQ(knot_polynomial(gamma_code({2})).knot, canonicalize(P("2 - 5t + 2t^2")));
}

TEST(GammaCode, RibbonAndFusionNumber)
{
    for (const V& n : {V{1}, V{0, 3}, V{-2, 1, 0}, V{3, -3, 2, 1}}) {
        int expected = static_cast<int>(n.size()) - 1;
        for (int x : n) expected += 2 * std::abs(x);
        EXPECT_EQ(gamma_code(n).ribbon_number(), expected);
        EXPECT_EQ(gamma_code(n).fusion_number(), 1);
    }
}

TEST(GammaHalfpoly, Examples)
{
    EXPECT_EQ(gamma_halfpoly({4, -2}), P("-4 + 7t - 2t^2"));
    EXPECT_EQ(canonicalize(gamma_halfpoly({0, 0, 0})), CanonicalPoly::one());
    EXPECT_EQ(gamma_halfpoly({-1, 1}), P("1 - t + t^2"));
    EXPECT_EQ(mul_reciprocal(gamma_halfpoly({4, -2})), canonicalize(P("8 - 42t + 69t^2 - 42t^3 + 8t^4")));
}

TEST(GammaHalfpoly, MatchesFoxCalculus)
{
    for (const V& n : {V{4, -2}, V{1, 1, 1}, V{-3, 0, 2}, V{2, -1, 3, -2}, V{0}, V{-1}}) {
        const auto fox = knot_polynomial(gamma_code(n));
        EXPECT_EQ(mul_reciprocal(gamma_halfpoly(n)), fox.knot);
        EXPECT_EQ(evaluate(gamma_halfpoly(n), 1).num, 1);
        EXPECT_EQ(half_class(gamma_halfpoly(n)), half_class(fox.disk.poly()));
    }
}

TEST(Realize, Examples)
{
    EXPECT_EQ(realize_halfpoly(P("1 - t + t^2")), (V{-1, 1}));
    EXPECT_EQ(realize_halfpoly(P("-1 + 2t")), (V{2}));
    EXPECT_TRUE(realize_halfpoly(LaurentPoly::constant(1)).empty());
    EXPECT_THROW(realize_halfpoly(P("2 - t + t^2")), DataError);
    EXPECT_THROW(realize_halfpoly(P("t^-1")), DataError);
    EXPECT_THROW(realize_halfpoly(LaurentPoly()), DataError);
}

TEST(Realize, RoundTrip)
{
    for (const char* s : {"1 - t^2 + t^3", "3 - 3t + t^2", "1 - 2t + 3t^2 - t^3", "-2 + 4t - t^2", "4 - 6t + 4t^2 - t^3"}) {
        const LaurentPoly g = P(s);
        const V n = realize_halfpoly(g);
        EXPECT_EQ(static_cast<int>(n.size()), g.max_deg());
        EXPECT_EQ(gamma_halfpoly(n), g);
        EXPECT_EQ(knot_polynomial(gamma_code(n)).knot, mul_reciprocal(g));
    }
}

TEST(Spectrum, TheoremExample)
{
    const auto b = spectrum_bounds(input(2, 5, 4, {{0, 4}, {1, 2}}));
    EXPECT_EQ(b.lower(), (V{4, 2, 0}));
    EXPECT_EQ(b.upper(), (V{4, 2, 0}));
}

TEST(Spectrum, OpenInterval)
{
    const auto b = spectrum_bounds(input(2, 5, 5, {{0, 6}, {1, 3}}));
    EXPECT_EQ(b.lower(), (V{5, 2, 0}));
    EXPECT_EQ(b.upper(), (V{6, 3, 0}));
}

TEST(Spectrum, StairStep)
{
    for (int g = 1; g <= 5; ++g) {
        const auto b = spectrum_bounds(input(g, std::nullopt, g, {{0, g}}));
        V stairs;
        for (int k = g; k >= 0; --k) stairs.push_back(k);
        EXPECT_EQ(b.lower(), stairs);
        EXPECT_EQ(b.upper(), stairs);
    }
}

TEST(Spectrum, UnboundedAndInfinite)
{
    auto b = spectrum_bounds(input(2, std::nullopt, 0, {}));
    EXPECT_EQ(b.lower(), (V{2, 1, 0}));
    EXPECT_EQ(b.upper(), (V{kInfinity, kInfinity, 0}));
    EXPECT_EQ(bound_text(kInfinity), "\xE2\x88\x9E");

    SpectrumInput in = input(3, std::nullopt, 0, {});
    in.genus4 = 2;
    b = spectrum_bounds(in);
    EXPECT_EQ(b.lower()[0], kInfinity);
    EXPECT_EQ(b.lower()[1], kInfinity);
    EXPECT_EQ(b.lower()[2], 1);
}

TEST(Spectrum, Errors)
{
    EXPECT_THROW(spectrum_bounds(input(2, 5, 5, {{0, 4}})), DataError);
    EXPECT_THROW(spectrum_bounds(input(-1, std::nullopt, 0, {})), DataError);
    EXPECT_THROW(spectrum_bounds(input(1, std::nullopt, 0, {{3, 1}})), DataError);
    SpectrumInput in = input(1, std::nullopt, 0, {});
    in.genus4 = 2;
    EXPECT_THROW(spectrum_bounds(in), DataError);
}

TEST(Spectrum, ShapeProperties)
{
    for (int G = 0; G <= 5; ++G) {
        for (int cc = 0; cc <= 2 * G + 3; ++cc) {
            for (int r0 = 0; r0 <= 8; ++r0) {
                if (G == 0 && r0 > 0) {
                    EXPECT_THROW(spectrum_bounds(input(G, cc, r0, {})), DataError);
                    continue;
                }
                const auto b = spectrum_bounds(input(G, cc, r0, {}));
                const auto lo = b.lower();
                const auto hi = b.upper();
                EXPECT_EQ(lo.back(), 0);
                EXPECT_EQ(hi.back(), 0);
                for (int g = 1; g <= G; ++g) EXPECT_LT(lo[g], lo[g - 1]);
                EXPECT_GE(lo[0], r0);
            }
        }
    }
}

TEST(Pretzel, Examples)
{
    auto b = pretzel_bounds(2, 3, 1);
    EXPECT_EQ(b.lower(), (V{3, 2, 0}));
    EXPECT_EQ(b.upper(), (V{4, 2, 0}));
    ASSERT_EQ(b.notes.size(), 1u);
    EXPECT_NE(b.notes[0].find("conjecture"), std::string::npos);

    b = pretzel_bounds(2, 3, 1, 4);
    EXPECT_EQ(b.lower(), (V{4, 2, 0}));

    b = pretzel_bounds(4, 3, 5);
    EXPECT_EQ(b.lower(), (V{5, 4, 3, 2, 0}));
    EXPECT_EQ(b.upper(), (V{8, 6, 4, 2, 0}));

    EXPECT_THROW(pretzel_bounds(2, 4, 1), DataError);
    EXPECT_THROW(pretzel_bounds(2, 3, 2), DataError);
    EXPECT_THROW(pretzel_bounds(0, 3, 1), DataError);
}

TEST(Pretzel, Witness)
{
    // Ribbon code of the n = 2, p = 3 pretzel.
    const auto k = knot_polynomial(parse_code("([1,2,5],[2,1,5],[3,4,5],[4,3,5])"));
    EXPECT_EQ(k.knot, canonicalize(P("4 - 20t + 33t^2 - 20t^3 + 4t^4")));
}
