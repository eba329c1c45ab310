#include "tate/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace tate {

namespace {

using Table = std::vector<std::vector<int>>;

Table cyclic(int n) {
    Table t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

Table direct_product(const Table& a, const Table& b) {
    int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    Table t(na * nb, std::vector<int>(na * nb));
    for (int i = 0; i < na * nb; ++i)
        for (int j = 0; j < na * nb; ++j) t[i][j] = a[i / nb][j / nb] * nb + b[i % nb][j % nb];
    return t;
}

// Closure of permutation generators; element 0 is the identity permutation.
Table permutation_group(int degree, const std::vector<std::vector<int>>& gens) {
    using Perm = std::vector<int>;
    Perm id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    for (std::size_t k = 0; k < elems.size(); ++k) {
        for (const auto& g : gens) {
            Perm p(degree);
            for (int i = 0; i < degree; ++i) p[i] = g[elems[k][i]];
            if (!index.count(p)) {
                index[p] = static_cast<int>(elems.size());
                elems.push_back(p);
            }
        }
    }
    int n = static_cast<int>(elems.size());
    Table t(n, std::vector<int>(n));
    // (a*b)(i) = a(b(i))
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Perm p(degree);
            for (int i = 0; i < degree; ++i) p[i] = elems[a][elems[b][i]];
            t[a][b] = index.at(p);
        }
    return t;
}

Table quaternion() {
    // elements +-1, +-i, +-j, +-k encoded as (sign, unit) with index 2*unit + sign
    static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    Table t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, ub = b / 2, sa = a % 2, sb = b % 2;
            int sign = (sa + sb + unit_sign[ua][ub]) % 2;
            t[a][b] = 2 * unit_mul[ua][ub] + sign;
        }
    return t;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(' ');
    auto e = s.find_last_not_of(' ');
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Table preset_table(const std::string& raw) {
    std::string name = trim(raw);
    if (name == "trivial" || name == "Z1") return cyclic(1);
    if (name == "Z2xZ2" || name == "V4" || name == "Klein") return direct_product(cyclic(2), cyclic(2));
    if (name == "S3") return permutation_group(3, {{1, 0, 2}, {1, 2, 0}});
    if (name == "D4") return permutation_group(4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
    if (name == "Q8") return quaternion();
    if (name.rfind("product(", 0) == 0 && name.back() == ')') {
        std::string inner = name.substr(8, name.size() - 9);
        int depth = 0;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            if (inner[i] == ')') --depth;
            if (inner[i] == ',' && depth == 0)
                return direct_product(preset_table(inner.substr(0, i)), preset_table(inner.substr(i + 1)));
        }
    }
    if (name.size() > 1 && (name[0] == 'Z' || name[0] == 'C') &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
        int n = std::stoi(name.substr(1));
        if (n >= 1 && n <= FiniteGroup::kMaxOrder) return cyclic(n);
    }
    if (name.rfind("Zn(", 0) == 0 && name.back() == ')') {
        int n = std::stoi(name.substr(3, name.size() - 4));
        if (n >= 1 && n <= FiniteGroup::kMaxOrder) return cyclic(n);
    }
    throw GroupError("unknown preset group '" + raw + "'");
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& table, std::string name) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw GroupError("empty multiplication table");
    if (n > kMaxOrder) throw GroupError("group order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n) throw GroupError("table row " + std::to_string(a) + " has wrong length");
        for (int v : table[a])
            if (v < 0 || v >= n) throw GroupError("table entry " + std::to_string(v) + " out of range");
    }
    for (int a = 0; a < n; ++a)
        if (table[0][a] != a || table[a][0] != a) throw GroupError("element 0 is not a two-sided identity (fails at " + std::to_string(a) + ")");
    FiniteGroup G;
    G.n_ = n;
    G.name_ = std::move(name);
    G.table_.resize(n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) G.table_[a * n + b] = static_cast<Elt>(table[a][b]);
    G.inverse_.assign(n, 0);
    for (int a = 0; a < n; ++a) {
        int found = -1;
        for (int b = 0; b < n; ++b)
            if (table[a][b] == 0 && table[b][a] == 0) found = b;
        if (found < 0) throw GroupError("no inverse for " + std::to_string(a));
        G.inverse_[a] = static_cast<Elt>(found);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]]) {
                    std::ostringstream os;
                    os << "not associative at (" << a << "," << b << "," << c << ")";
                    throw GroupError(os.str());
                }
    return G;
}

FiniteGroup FiniteGroup::preset(const std::string& name) { return from_table(preset_table(name), trim(name)); }

std::vector<std::string> FiniteGroup::preset_names() {
    return {"trivial", "Z2", "Z3", "Z4", "Z2xZ2", "S3", "Z6", "D4", "Q8", "Zn(n)", "product(A,B)"};
}

Elt FiniteGroup::product(const Elt* seq, int len) const {
    Elt r = 0;
    for (int i = 0; i < len; ++i) r = mul(r, seq[i]);
    return r;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<std::vector<int>> FiniteGroup::table() const {
    std::vector<std::vector<int>> t(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    return t;
}

ConjugacyData::ConjugacyData(const FiniteGroup& G) : g_(&G), n_(G.order()) {
    class_of_.assign(n_, -1);
    position_.assign(n_, -1);
    for (int x = 0; x < n_; ++x) {
        if (class_of_[x] >= 0) continue;
        int c = static_cast<int>(reps_.size());
        reps_.push_back(static_cast<Elt>(x));
        std::vector<Elt> cent;
        for (int g = 0; g < n_; ++g)
            if (G.mul(g, x) == G.mul(x, g)) cent.push_back(static_cast<Elt>(g));
        std::vector<char> in(n_, 0);
        for (Elt g : cent) in[g] = 1;
        // right cosets C g, least-index scan
        std::vector<std::pair<int, Elt>> cidx(n_, {-1, 0});
        std::vector<Elt> reps;
        for (int g = 0; g < n_; ++g) {
            if (cidx[g].first >= 0) continue;
            int i = static_cast<int>(reps.size());
            reps.push_back(static_cast<Elt>(g));
            for (Elt h : cent) cidx[G.mul(h, g)] = {i, h};
        }
        std::vector<Elt> conj;
        for (Elt gam : reps) {
            Elt xi = G.mul(G.mul(G.inv(gam), static_cast<Elt>(x)), gam);
            class_of_[xi] = c;
            position_[xi] = static_cast<int>(conj.size());
            conj.push_back(xi);
        }
        classes_.push_back(conj);
        centralizers_.push_back(cent);
        coset_reps_.push_back(reps);
        in_centralizer_.insert(in_centralizer_.end(), in.begin(), in.end());
        coset_index_.insert(coset_index_.end(), cidx.begin(), cidx.end());
        std::vector<int> rep_of(n_, -1);
        for (std::size_t i = 1; i < reps.size(); ++i) rep_of[reps[i]] = static_cast<int>(i);
        coset_rep_of_.insert(coset_rep_of_.end(), rep_of.begin(), rep_of.end());
    }
}

SpadeResult spadesuit(const ConjugacyData& cd, int c, int i, const std::vector<Elt>& seq) {
    const auto& G = cd.group();
    const auto& gam = cd.coset_reps(c);
    if (i < 0 || i >= static_cast<int>(gam.size())) throw std::out_of_range("coset index out of range");
    SpadeResult r;
    r.h.reserve(seq.size());
    int cur = i;
    for (Elt g : seq) {
        auto [next, h] = cd.coset_index(c, G.mul(gam[cur], g));
        r.h.push_back(h);
        cur = next;
    }
    r.final_index = cur;
    return r;
}

std::vector<Elt> clubsuit(const FiniteGroup& G, Elt x, Elt g, const std::vector<Elt>& gs, const std::vector<Elt>& hs) {
    std::vector<Elt> out(hs.begin(), hs.end());
    Elt prod = G.product(gs.data(), static_cast<int>(gs.size()));
    out.push_back(G.mul(G.mul(G.inv(g), G.inv(prod)), x));
    out.insert(out.end(), gs.begin(), gs.end());
    return out;
}

}  // namespace tate
