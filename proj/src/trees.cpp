#include "tate/trees.hpp"

#include <stdexcept>

namespace tate {

namespace {

inline int parity_sign(long e) { return (e % 2 + 2) % 2 ? -1 : 1; }

PlanarTree parse_at(const std::string& s, std::size_t& pos) {
    auto skip = [&] {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    };
    skip();
    if (pos >= s.size()) throw std::invalid_argument("tree: unexpected end of input");
    if (s[pos] == '.') {
        ++pos;
        return PlanarTree::leaf();
    }
    if (s[pos] != '(') throw std::invalid_argument("tree: unexpected character '" + std::string(1, s[pos]) + "'");
    ++pos;
    std::vector<PlanarTree> kids;
    for (;;) {
        kids.push_back(parse_at(s, pos));
        skip();
        if (pos >= s.size()) throw std::invalid_argument("tree: missing ')'");
        if (s[pos] == ',') {
            ++pos;
            continue;
        }
        if (s[pos] == ')') {
            ++pos;
            break;
        }
        throw std::invalid_argument("tree: expected ',' or ')'");
    }
    return PlanarTree::node(std::move(kids));
}

}  // namespace

int shift_sign(const std::vector<int>& degrees) {
    const long k = static_cast<long>(degrees.size());
    long e = 0;
    for (long l = 1; l <= k; ++l) e += (k - l) * degrees[l - 1];
    return parity_sign(e);
}

namespace {

// sum of input degrees and leaf count of a subtree, adding vertex epsilons to `exp`
std::pair<long, int> bar_walk(const PlanarTree& t, const std::vector<int>& d, std::size_t& next, long& exp,
                              int shift) {
    if (t.is_leaf()) return {d.at(next++), 1};
    std::vector<int> child_deg;
    long sum = 0;
    int leaves = 0;
    for (const auto& c : t.children) {
        auto [s, l] = bar_walk(c, d, next, exp, shift);
        sum += s;
        leaves += l;
        child_deg.push_back(static_cast<int>(c.is_leaf() ? s : s + 1 - l));
    }
    for (int& x : child_deg) x -= shift;
    if (shift_sign(child_deg) < 0) ++exp;
    return {sum, leaves};
}

std::pair<long, int> koszul_walk(const PlanarTree& t, const std::vector<int>& d, std::size_t& next, long& exp) {
    if (t.is_leaf()) return {d.at(next++), 1};
    long sum = 0;
    int leaves = 0;
    for (const auto& c : t.children) {
        auto [s, l] = koszul_walk(c, d, next, exp);
        int map_deg = c.is_leaf() ? 0 : 1 - l;
        exp += static_cast<long>(map_deg) * sum;
        sum += s;
        leaves += l;
    }
    return {sum, leaves};
}

void compositions(int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (k == 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = 1; a <= n - (k - 1); ++a) {
        cur.push_back(a);
        compositions(n - a, k - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

PlanarTree PlanarTree::node(std::vector<PlanarTree> kids) {
    if (kids.size() != 2 && kids.size() != 3) throw std::invalid_argument("tree: vertices must have 2 or 3 children");
    PlanarTree t;
    t.children = std::move(kids);
    return t;
}

PlanarTree PlanarTree::parse(const std::string& text) {
    std::size_t pos = 0;
    PlanarTree t = parse_at(text, pos);
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos != text.size()) throw std::invalid_argument("tree: trailing characters");
    return t;
}

int PlanarTree::leaves() const {
    if (is_leaf()) return 1;
    int n = 0;
    for (const auto& c : children) n += c.leaves();
    return n;
}

int PlanarTree::internal_vertices() const {
    if (is_leaf()) return 0;
    int n = 1;
    for (const auto& c : children) n += c.internal_vertices();
    return n;
}

std::string PlanarTree::encode() const {
    if (is_leaf()) return ".";
    std::string s = "(";
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) s += ',';
        s += children[i].encode();
    }
    return s + ")";
}

std::vector<PlanarTree> enumerate_trees(int n) {
    if (n < 1) throw std::invalid_argument("tree: need at least one leaf");
    if (n == 1) return {PlanarTree::leaf()};
    std::vector<PlanarTree> out;
    for (int k = 2; k <= 3; ++k) {
        if (n < k) continue;
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        compositions(n, k, cur, comps);
        for (const auto& comp : comps) {
            std::vector<std::vector<PlanarTree>> sub;
            for (int a : comp) sub.push_back(enumerate_trees(a));
            std::vector<std::size_t> idx(k, 0);
            for (;;) {
                std::vector<PlanarTree> kids;
                for (int i = 0; i < k; ++i) kids.push_back(sub[i][idx[i]]);
                out.push_back(PlanarTree::node(std::move(kids)));
                int i = k - 1;
                while (i >= 0 && ++idx[i] == sub[i].size()) idx[i--] = 0;
                if (i < 0) break;
            }
        }
    }
    return out;
}

std::uint64_t count_trees(int n) {
    if (n < 1) return 0;
    std::vector<std::uint64_t> T(n + 1, 0);
    T[1] = 1;
    for (int m = 2; m <= n; ++m) {
        for (int a = 1; a < m; ++a) T[m] += T[a] * T[m - a];
        for (int a = 1; a < m; ++a)
            for (int b = 1; a + b < m; ++b) T[m] += T[a] * T[b] * T[m - a - b];
    }
    return T[n];
}

int transfer_sign(const PlanarTree& t, const std::vector<int>& degrees) {
    if (static_cast<int>(degrees.size()) != t.leaves()) throw std::invalid_argument("tree: degree count mismatch");
    long exp = 0;
    std::size_t next = 0;
    bar_walk(t, degrees, next, exp, 0);
    return parity_sign(exp) * shift_sign(degrees);
}

SignPolicy bar_sign_policy() { return [](const PlanarTree& t, const std::vector<int>& d) { return transfer_sign(t, d); }; }

SignPolicy shifted_sign_policy() {
    return [](const PlanarTree& t, const std::vector<int>& d) {
        if (static_cast<int>(d.size()) != t.leaves()) throw std::invalid_argument("tree: degree count mismatch");
        long exp = 0;
        std::size_t next = 0;
        bar_walk(t, d, next, exp, 1);
        std::vector<int> shifted(d);
        for (int& x : shifted) x -= 1;
        return parity_sign(exp) * shift_sign(shifted);
    };
}

SignPolicy map_sign_policy() {
    return [](const PlanarTree& t, const std::vector<int>&) { return map_sign(t); };
}

int map_sign(const PlanarTree& t) { return transfer_sign(t, std::vector<int>(t.leaves(), 0)); }

int koszul_sign(const PlanarTree& t, const std::vector<int>& degrees) {
    if (static_cast<int>(degrees.size()) != t.leaves()) throw std::invalid_argument("tree: degree count mismatch");
    long exp = 0;
    std::size_t next = 0;
    koszul_walk(t, degrees, next, exp);
    return parity_sign(exp);
}

}  // namespace tate
