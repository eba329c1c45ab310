#pragma once

#include "tate/element.hpp"

namespace tate {

// Cup product on D*(kG,kG), six cases split on the signs of n, m and n+m.
TateElement cup(const FiniteGroup& G, const TateElement& a, const TateElement& b);

enum class M3Sign {
    corrected,  // (-1)^{m+r+s-j} with the max/min bounds on j
    original,   // (-1)^{m-j}, j = 0..s, the uncorrected form
};

// Ternary operation: nonzero only on (cochain, chain, cochain) and (chain, cochain, chain).
// Output degree is deg a + deg b + deg c - 1.
TateElement m3(const FiniteGroup& G, const TateElement& a, const TateElement& b, const TateElement& c,
               M3Sign sign = M3Sign::corrected);

// True on the two degree patterns where m3 can be nonzero; the r + 2 > m + n cutoff is not checked here.
bool m3_support(int da, int db, int dc);

// acc += sign * (a cup b), acc += sign * m3(a, b, c); no field or degree bookkeeping.
void cup_into(const FiniteGroup& G, const TateElement& a, const TateElement& b, int sign, Accumulator& acc);
void m3_into(const FiniteGroup& G, const TateElement& a, const TateElement& b, const TateElement& c, M3Sign sign,
             int out_sign, Accumulator& acc);

}  // namespace tate
