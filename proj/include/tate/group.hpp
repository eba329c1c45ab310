#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tate {

using Elt = std::uint8_t;

struct GroupError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Finite group on dense indices 0..order-1 with 0 the identity.
class FiniteGroup {
public:
    static constexpr int kMaxOrder = 32;

    static FiniteGroup from_table(const std::vector<std::vector<int>>& table, std::string name);
    // Z2, Z3, Z4, Z2xZ2, S3, D4, Q8, Zn (e.g. Z6), product(A,B), trivial.
    static FiniteGroup preset(const std::string& name);
    static std::vector<std::string> preset_names();

    int order() const { return n_; }
    const std::string& name() const { return name_; }
    Elt identity() const { return 0; }
    Elt mul(Elt a, Elt b) const { return table_[a * n_ + b]; }
    Elt inv(Elt a) const { return inverse_[a]; }
    Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv(g)); }
    Elt product(const Elt* seq, int len) const;
    bool is_abelian() const;
    std::vector<std::vector<int>> table() const;

private:
    int n_ = 0;
    std::string name_;
    std::vector<Elt> table_;
    std::vector<Elt> inverse_;
};

// Conjugacy classes, centralizers and right coset representatives.
// Classes are ordered by their least element; coset index 0 is the identity coset.
class ConjugacyData {
public:
    explicit ConjugacyData(const FiniteGroup& g);

    const FiniteGroup& group() const { return *g_; }
    int num_classes() const { return static_cast<int>(reps_.size()); }
    Elt rep(int c) const { return reps_[c]; }
    // x_1..x_{n_x} with x_i = gamma_i^{-1} x gamma_i.
    const std::vector<Elt>& conjugates(int c) const { return classes_[c]; }
    const std::vector<Elt>& centralizer(int c) const { return centralizers_[c]; }
    const std::vector<Elt>& coset_reps(int c) const { return coset_reps_[c]; }
    int class_size(int c) const { return static_cast<int>(classes_[c].size()); }
    bool centralizes(int c, Elt g) const { return in_centralizer_[c * n_ + g]; }
    // g = cofactor * gamma_index.
    std::pair<int, Elt> coset_index(int c, Elt g) const { return coset_index_[c * n_ + g]; }
    // Class containing g and the position i with g = x_i.
    int class_of(Elt g) const { return class_of_[g]; }
    int position(Elt g) const { return position_[g]; }
    // Class index of a representative, or -1.
    int class_of_rep(Elt g) const { return reps_[class_of_[g]] == g ? class_of_[g] : -1; }
    // Coset index of a non-identity coset representative, or -1.
    int coset_rep_index(int c, Elt g) const { return coset_rep_of_[c * n_ + g]; }

private:
    const FiniteGroup* g_;
    int n_;
    std::vector<Elt> reps_;
    std::vector<std::vector<Elt>> classes_, centralizers_, coset_reps_;
    std::vector<char> in_centralizer_;
    std::vector<std::pair<int, Elt>> coset_index_;
    std::vector<int> class_of_, position_, coset_rep_of_;
};

struct SpadeResult {
    std::vector<Elt> h;
    int final_index = 0;
};

// gamma_prev * g_t = h_t * gamma_next, starting from gamma_i.
SpadeResult spadesuit(const ConjugacyData& cd, int c, int i, const std::vector<Elt>& seq);

// (h_1..h_t, g^{-1} g_s^{-1} ... g_1^{-1} x, g_1..g_s)
std::vector<Elt> clubsuit(const FiniteGroup& G, Elt x, Elt g, const std::vector<Elt>& gs, const std::vector<Elt>& hs);

}  // namespace tate
