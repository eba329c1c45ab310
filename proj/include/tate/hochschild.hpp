#pragma once

#include <vector>

#include "tate/element.hpp"

namespace tate {

// All basis keys of D^m(kG,kG) in increasing order.
std::vector<Key> tate_basis(const FiniteGroup& G, int degree);

// Degree-0 element of kG from (element, coefficient) pairs.
TateElement group_algebra_element(const FiniteGroup& G, Field f, const std::vector<std::pair<Elt, Scalar>>& coeffs);

// delta^m, m >= 0. Terms with g_i g_{i+1} = 1 in a barred slot are dropped.
TateElement cochain_diff(const FiniteGroup& G, const TateElement& f);
// partial_{-m-1}, m <= -2, without the sign twist.
TateElement chain_diff(const FiniteGroup& G, const TateElement& a);
// tau(x) = sum_g g x g^{-1}, degree -1 to 0.
TateElement trace_tau(const FiniteGroup& G, const TateElement& a);
// Sign-modified differential: (-1)^{m+1} partial for m < -1, tau at -1, delta for m >= 0.
TateElement dprime(const FiniteGroup& G, const TateElement& a);

// True when no barred slot holds the identity and the key lengths match the degree.
bool is_normalized(const TateElement& e);

}  // namespace tate
