#pragma once

#include <vector>

#include "tate/element.hpp"

namespace tate {

// Basis keys (c, h_1..h_k) of the decomposed complex in degree m.
std::vector<Key> decomposed_basis(const ConjugacyData& cd, int degree);

// Classwise Tate differential with trivial coefficients. The negative part carries
// the same (-1)^{m+1} twist as dprime, and tau(1) = |C_G(x)|.
DecomposedElement decomposed_diff(const ConjugacyData& cd, const DecomposedElement& e);

// Splits a Tate element into its class components (one entry per class).
std::vector<TateElement> project(const ConjugacyData& cd, const TateElement& f);
// Class index of a single basis key of D^m.
int component_of(const ConjugacyData& cd, int degree, Key k);

TateElement iota_hat(const ConjugacyData& cd, const DecomposedElement& e);
DecomposedElement rho_hat(const ConjugacyData& cd, const TateElement& f);

// Homotopy, lowering degree by one. On the chain side the printed formula is
// multiplied by (-1)^m (m the input degree) so that it matches the twisted differential.
TateElement s_hat(const ConjugacyData& cd, const TateElement& f);

// The homotopy exactly as printed, without the chain-side sign; kept for comparison.
TateElement s_hat_untwisted(const ConjugacyData& cd, const TateElement& f);

}  // namespace tate
