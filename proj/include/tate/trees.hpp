#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tate {

// Rooted planar tree; a node has 2 or 3 children, a leaf has none.
struct PlanarTree {
    std::vector<PlanarTree> children;

    static PlanarTree leaf() { return {}; }
    static PlanarTree node(std::vector<PlanarTree> kids);
    // "." is a leaf, "(t1,t2)" or "(t1,t2,t3)" a node.
    static PlanarTree parse(const std::string& text);

    bool is_leaf() const { return children.empty(); }
    int arity() const { return static_cast<int>(children.size()); }
    int leaves() const;
    int internal_vertices() const;
    int internal_edges() const { return is_leaf() ? 0 : internal_vertices() - 1; }
    std::string encode() const;

    friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.children == b.children; }
};

// All trees with n leaves: root arity 2 before 3, then child leaf counts
// lexicographically, then children in recursive order.
std::vector<PlanarTree> enumerate_trees(int n);

// T(1) = 1, T(n) = sum_{a+b=n} T(a)T(b) + sum_{a+b+c=n} T(a)T(b)T(c).
std::uint64_t count_trees(int n);

// A sign policy returns +1 or -1 for a tree and the degrees of its inputs. The
// tree's value is then sign * p m(h m(...), ...)(i a_1, ..., i a_n), evaluated
// with plain maps and no further Koszul signs. h is the homotopy with
// ip - id = dh + hd.
using SignPolicy = std::function<int(const PlanarTree&, const std::vector<int>&)>;

// Bar-construction signs: product over vertices of epsilon(k; child degrees),
// times epsilon(n; input degrees) for the root. A child that is a subtree with
// l leaves has degree (sum of its input degrees) + 1 - l.
int transfer_sign(const PlanarTree& t, const std::vector<int>& degrees);
SignPolicy bar_sign_policy();

// Same shape with epsilon taken on shifted degrees, sum (k-l)(d_l - 1). Kept as
// a control: at degree zero it flips both binary trees with three leaves, and the
// A-infinity identities fail.
SignPolicy shifted_sign_policy();

// Degree-blind control: the sign at all-zero degrees for every profile.
SignPolicy map_sign_policy();

// Map-level sign of the tree (its value at all-zero degrees).
int map_sign(const PlanarTree& t);

// Koszul sign picked up when the map-level composite is applied to elements
// of the given degrees.
int koszul_sign(const PlanarTree& t, const std::vector<int>& degrees);

// epsilon(k; d_1..d_k) = sum_l (k-l) d_l, as a sign.
int shift_sign(const std::vector<int>& degrees);

}  // namespace tate
