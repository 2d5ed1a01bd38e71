// Walks through the library on a few small codes.

#include <iostream>

#include "ribbon/ribbon.hpp"

using namespace ribbon;

int main()
{
    const RibbonCode code = parse_code("([1,-3,2,-3,2],[2,1,3])");
    std::cout << "code          " << code << "  (" << code.ribbon_number() << " ribbons)\n";
    std::cout << "presentation  " << to_string(presentation_of(code)) << "\n";
    const auto polys = knot_polynomial(code);
    std::cout << "disk          " << polys.disk << "\n";
    std::cout << "knot          " << polys.knot << "  det " << determinant(polys.knot.poly()) << "\n";
    for (const auto& h : half_polynomials(polys.knot.poly())) std::cout << "half          " << h << "\n";

    const RibbonCode messy = parse_code("([1,3,2],[2,1,3],[3,4])");
    std::cout << "\nreduce " << messy << " -> " << reduce(messy) << "\n";

    const auto r2 = compute_rset(2);
    std::cout << "\nAlexander polynomials with ribbon number <= 2:\n";
    for (const auto& [p, w] : r2.witnesses) std::cout << "  " << p << "   e.g. " << w << "\n";

    const LaurentPoly f = parse_poly("2 - 3t + 2t^2");
    const WindingSequence n = realize_halfpoly(parse_poly("-1 + t^2 + t^3"));
    std::cout << "\nwinding sequence for -1 + t^2 + t^3: ";
    for (int k : n) std::cout << k << " ";
    std::cout << "\ncode " << gamma_code(n) << " has half-polynomial " << gamma_halfpoly(n) << "\n";
    std::cout << "f(t)f(1/t) for f = " << f << ": " << mul_reciprocal(f) << "\n";

    SpectrumInput in;
    in.genus = 2;
    in.crosscap = 5;
    in.r0_lower = 4;
    in.uppers = {{0, 4}, {1, 2}};
    std::cout << "\ngenus  lower  upper\n";
    for (const auto& L : spectrum_bounds(in).levels) {
        std::cout << "  " << L.genus << "      " << bound_text(L.lo) << "      " << bound_text(L.hi) << "\n";
    }
    return 0;
}
