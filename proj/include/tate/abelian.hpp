#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "tate/element.hpp"

namespace tate {

struct AbelianTag {};

// Element of the Tate complex of G with trivial coefficients.
// m >= 0: key (g_1..g_m) is the map sending that tuple to 1 and every other to 0.
// m < 0: key (g_1..g_s), s = -m-1, is the chain with those entries.
using AbelianCochain = Graded<AbelianTag>;

struct NotAbelian : std::domain_error {
    using std::domain_error::domain_error;
};

std::string describe(const AbelianCochain& e);

// Closed forms; cochain outputs are evaluated tuple by tuple, chain outputs are
// built term by term.
AbelianCochain mhat1_closed(const FiniteGroup& G, const AbelianCochain& a);
AbelianCochain mhat2_closed(const FiniteGroup& G, const AbelianCochain& a, const AbelianCochain& b);
AbelianCochain mhat3_closed(const FiniteGroup& G, const AbelianCochain& a, const AbelianCochain& b,
                            const AbelianCochain& c);
// Dispatches on the number of inputs; zero for four or more.
AbelianCochain mhat_closed(const FiniteGroup& G, const std::vector<AbelianCochain>& inputs);

using TensorTerm = std::pair<Elt, AbelianCochain>;

// (x_1 (x) a_1, ..., x_p (x) a_p) -> (x_1...x_p, m'_p(a_1..a_p))
TensorTerm tensor_structure(const FiniteGroup& G, int p, const std::vector<TensorTerm>& inputs);

// Between x (x) a and the component of the decomposed complex at class x.
DecomposedElement to_decomposed(const ConjugacyData& cd, Elt x, const AbelianCochain& a);
std::vector<TensorTerm> from_decomposed(const ConjugacyData& cd, const DecomposedElement& e);

// Table-level maps on exponent tuples over I_3 = {1,2,3}, exactly as tabulated.
// group is "Z4" or "Z2xZ2"; i is 1-based.
using IndexTuple = std::vector<int>;
std::vector<IndexTuple> ci_map(const std::string& group, int i, const IndexTuple& j);
// Empty optional-like result: returns false when the merged entry is the identity.
bool di_map(int i, const IndexTuple& j, IndexTuple& out);

// All (a, b) splits of entry i with a*b = j_i and a, b non-identity, read off the
// group table; the reference against which ci_map is compared.
std::vector<IndexTuple> merge_preimages(const FiniteGroup& G, int i, const IndexTuple& j);

}  // namespace tate
