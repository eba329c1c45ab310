#pragma once

#include <variant>
#include <vector>

#include "tate/decomp.hpp"
#include "tate/products.hpp"
#include "tate/trees.hpp"

namespace tate {

// Either side of the retract: a decomposed element or a Tate cochain/chain.
using AnyElement = std::variant<DecomposedElement, TateElement>;

// alpha: root map rho; beta: root map s. A lifted slot ("1") gets iota applied,
// an unlifted slot ("0") is already a Tate element. Slot signs say whether each
// input has non-negative (+1) or negative (-1) degree; out_sign is the same for
// the degree of the vertex product.
struct LocalKind {
    bool alpha = true;
    std::vector<bool> lifted;
    std::vector<int> slot_signs;
    int out_sign = 1;

    // e.g. "alpha(1+,1+,+)", "beta(0-,1+,1-,-)"
    static LocalKind parse(const std::string& text);
    std::string name() const;
};

class TransferEngine {
public:
    explicit TransferEngine(const ConjugacyData& cd, M3Sign m3_sign = M3Sign::corrected);

    const ConjugacyData& data() const { return cd_; }

    // m1 is the decomposed differential; for n >= 2 the tree sum under the bar
    // sign policy, computed over leaf ranges so shared subtrees are evaluated once.
    DecomposedElement mhat(const std::vector<DecomposedElement>& inputs) const;

    // mhat for n >= 2 given iota of each input already applied.
    DecomposedElement mhat_lifted(const std::vector<TateElement>& lifted) const;

    // Same sum, one tree at a time.
    DecomposedElement mhat_by_trees(const std::vector<DecomposedElement>& inputs,
                                    const SignPolicy& policy = bar_sign_policy()) const;

    // sign * rho m(h m(...), ...)(iota a_1, ..., iota a_n) with h = -s on internal edges
    DecomposedElement eval_tree(const PlanarTree& t, const std::vector<DecomposedElement>& inputs,
                                const SignPolicy& policy = bar_sign_policy()) const;

    // Single-vertex composite.
    AnyElement local_op(const LocalKind& kind, const std::vector<AnyElement>& inputs) const;

    // eval_tree rebuilt from local operations: beta at internal vertices, alpha at the root.
    DecomposedElement eval_tree_local(const PlanarTree& t, const std::vector<DecomposedElement>& inputs,
                                      const SignPolicy& policy = bar_sign_policy()) const;

    TateElement vertex(const std::vector<TateElement>& args) const;

private:
    TateElement composite(const PlanarTree& t, const std::vector<TateElement>& lifted, std::size_t& next) const;
    TateElement composite_local(const PlanarTree& t, const std::vector<DecomposedElement>& inputs, std::size_t& next,
                                bool root, DecomposedElement* root_out) const;

    const ConjugacyData& cd_;
    M3Sign m3_sign_;
};

}  // namespace tate
