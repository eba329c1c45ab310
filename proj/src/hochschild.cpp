#include "tate/hochschild.hpp"

#include <sstream>

namespace tate {

namespace {

void enumerate_tuples(int n, int order, const std::vector<Elt>& prefix_alphabet, int first_len, std::vector<Key>& out) {
    // first slot ranges over prefix_alphabet when first_len == 1, remaining n slots over G minus identity
    Word w;
    std::vector<int> idx(n, 1);
    auto emit_all = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            out.push_back(pack(w));
            return;
        }
        for (int g = 1; g < order; ++g) {
            w.v[w.n++] = static_cast<Elt>(g);
            self(self, pos + 1);
            --w.n;
        }
    };
    if (first_len == 1) {
        for (Elt a : prefix_alphabet) {
            w.n = 0;
            w.push(a);
            emit_all(emit_all, 0);
        }
    } else {
        w.n = 0;
        emit_all(emit_all, 0);
    }
}

}  // namespace

std::vector<Key> tate_basis(const FiniteGroup& G, int degree) {
    std::vector<Key> keys;
    int n = G.order();
    std::vector<Elt> all(n);
    for (int g = 0; g < n; ++g) all[g] = static_cast<Elt>(g);
    if (degree >= 0) {
        // (g_1..g_m, v): enumerate barred part then value
        std::vector<Key> bars;
        enumerate_tuples(degree, n, {}, 0, bars);
        for (Key b : bars) {
            Word w = unpack(b);
            for (int v = 0; v < n; ++v) {
                Word x = w;
                x.push(static_cast<Elt>(v));
                keys.push_back(pack(x));
            }
        }
    } else {
        enumerate_tuples(-degree - 1, n, all, 1, keys);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

TateElement group_algebra_element(const FiniteGroup& G, Field f, const std::vector<std::pair<Elt, Scalar>>& coeffs) {
    Accumulator acc(f);
    for (const auto& [g, c] : coeffs) {
        if (g >= G.order()) throw std::out_of_range("group element out of range");
        acc.add(Word{g}, c);
    }
    return TateElement(0, f, acc.finish());
}

TateElement cochain_diff(const FiniteGroup& G, const TateElement& f) {
    if (f.degree < 0) throw DegreeError("cochain_diff needs degree >= 0");
    const int n = f.degree, order = G.order();
    Accumulator acc(f.field);
    for (const auto& [key, c] : f.terms) {
        Word a = unpack(key);
        Elt v = a[n];
        // g_1 phi(g_2..)
        for (int g = 1; g < order; ++g) {
            Word w;
            w.push(static_cast<Elt>(g));
            for (int i = 0; i < n; ++i) w.push(a[i]);
            w.push(G.mul(static_cast<Elt>(g), v));
            acc.add(w, c);
        }
        // phi(.., g_i g_{i+1}, ..)
        for (int i = 0; i < n; ++i) {
            int sign = (i + 1) % 2 ? -1 : 1;
            for (int p = 1; p < order; ++p) {
                Elt q = G.mul(G.inv(static_cast<Elt>(p)), a[i]);
                if (q == 0) continue;
                Word w;
                for (int k = 0; k < i; ++k) w.push(a[k]);
                w.push(static_cast<Elt>(p));
                w.push(q);
                for (int k = i + 1; k <= n; ++k) w.push(a[k]);
                acc.add_signed(w, c, sign);
            }
        }
        // phi(g_1..g_n) g_{n+1}
        int sign = (n + 1) % 2 ? -1 : 1;
        for (int g = 1; g < order; ++g) {
            Word w;
            for (int i = 0; i < n; ++i) w.push(a[i]);
            w.push(static_cast<Elt>(g));
            w.push(G.mul(v, static_cast<Elt>(g)));
            acc.add_signed(w, c, sign);
        }
    }
    return TateElement(n + 1, f.field, acc.finish());
}

TateElement chain_diff(const FiniteGroup& G, const TateElement& a) {
    if (a.degree > -2) throw DegreeError("chain_diff needs degree <= -2");
    const int s = -a.degree - 1;
    Accumulator acc(a.field);
    for (const auto& [key, c] : a.terms) {
        Word g = unpack(key);
        {
            Word w;
            w.push(G.mul(g[0], g[1]));
            for (int k = 2; k <= s; ++k) w.push(g[k]);
            acc.add(w, c);
        }
        for (int i = 1; i < s; ++i) {
            Elt prod = G.mul(g[i], g[i + 1]);
            if (prod == 0) continue;
            Word w;
            for (int k = 0; k < i; ++k) w.push(g[k]);
            w.push(prod);
            for (int k = i + 2; k <= s; ++k) w.push(g[k]);
            acc.add_signed(w, c, i % 2 ? -1 : 1);
        }
        {
            Word w;
            w.push(G.mul(g[s], g[0]));
            for (int k = 1; k < s; ++k) w.push(g[k]);
            acc.add_signed(w, c, s % 2 ? -1 : 1);
        }
    }
    return TateElement(a.degree + 1, a.field, acc.finish());
}

TateElement trace_tau(const FiniteGroup& G, const TateElement& a) {
    if (a.degree != -1) throw DegreeError("trace needs degree -1");
    Accumulator acc(a.field);
    for (const auto& [key, c] : a.terms) {
        Elt x = unpack(key)[0];
        for (int g = 0; g < G.order(); ++g) acc.add(Word{G.conj(static_cast<Elt>(g), x)}, c);
    }
    return TateElement(0, a.field, acc.finish());
}

TateElement dprime(const FiniteGroup& G, const TateElement& a) {
    if (a.degree >= 0) return cochain_diff(G, a);
    if (a.degree == -1) return trace_tau(G, a);
    TateElement d = chain_diff(G, a);
    return (a.degree + 1) % 2 == 0 ? d : negate(d);
}

bool is_normalized(const TateElement& e) {
    int len = tate_key_length(e.degree);
    for (const auto& [k, c] : e.terms) {
        if (c.is_zero() || key_length(k) != len) return false;
        Word w = unpack(k);
        int lo = e.degree >= 0 ? 0 : 1, hi = e.degree >= 0 ? len - 1 : len;
        for (int i = lo; i < hi; ++i)
            if (w[i] == 0) return false;
    }
    return true;
}

std::string describe(const TateElement& e) {
    std::ostringstream os;
    os << "deg " << e.degree << ":";
    if (e.terms.empty()) os << " 0";
    for (const auto& [k, c] : e.terms) {
        Word w = unpack(k);
        os << " " << c.to_string() << "*(";
        for (int i = 0; i < w.n; ++i) {
            if (i) os << (e.degree >= 0 && i == w.n - 1 ? "|" : ",");
            os << int(w[i]);
        }
        os << ")";
    }
    return os.str();
}

std::string describe(const DecomposedElement& e) {
    std::ostringstream os;
    os << "deg " << e.degree << ":";
    if (e.terms.empty()) os << " 0";
    for (const auto& [k, c] : e.terms) {
        Word w = unpack(k);
        os << " " << c.to_string() << "*[" << int(w[0]) << "](";
        for (int i = 1; i < w.n; ++i) os << (i > 1 ? "," : "") << int(w[i]);
        os << ")";
    }
    return os.str();
}

}  // namespace tate
