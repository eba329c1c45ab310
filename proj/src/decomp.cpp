#include "tate/decomp.hpp"

namespace tate {

namespace {

inline int parity_sign(int e) { return (e % 2 + 2) % 2 ? -1 : 1; }

void centralizer_tuples(const std::vector<Elt>& cent, int c, int len, std::vector<Key>& out) {
    Word w;
    w.push(static_cast<Elt>(c));
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == len) {
            out.push_back(pack(w));
            return;
        }
        for (Elt h : cent) {
            if (h == 0) continue;
            w.v[w.n++] = h;
            self(self, pos + 1);
            --w.n;
        }
    };
    rec(rec, 0);
}

TateElement s_hat_impl(const ConjugacyData& cd, const TateElement& f, bool twist) {
    const auto& G = cd.group();
    const int m = f.degree;
    if (m == 0) return TateElement(-1, f.field);
    Accumulator acc(f.field);
    if (m > 0) {
        for (const auto& [key, coeff] : f.terms) {
            Word T = unpack(key);
            Elt v = T[m];
            Elt w = G.mul(v, G.inv(G.product(T.v, m)));
            int c = cd.class_of_rep(w);
            if (c < 0) continue;
            const auto& gam = cd.coset_reps(c);
            const auto& conj = cd.conjugates(c);
            const int nx = static_cast<int>(gam.size());
            for (int j = 0; j < m; ++j) {
                if (j > 0 && !cd.centralizes(c, T[j - 1])) break;
                int sidx = cd.coset_rep_index(c, T[j]);
                if (sidx < 1) continue;
                int sign = parity_sign(j);
                // choose start index i and intermediate indices; the last is sidx
                std::vector<int> idx(j + 1, 0);
                auto emit = [&]() {
                    Word g;
                    for (int t = 1; t <= j; ++t)
                        g.push(G.mul(G.mul(G.inv(gam[idx[t - 1]]), T[t - 1]), gam[idx[t]]));
                    for (int t = j + 1; t < m; ++t) g.push(T[t]);
                    Elt val = G.mul(conj[idx[0]], G.product(g.v, g.n));
                    g.push(val);
                    acc.add_signed(g, coeff, sign);
                };
                if (j == 0) {
                    idx[0] = sidx;
                    emit();
                    continue;
                }
                idx[j] = sidx;
                auto rec = [&](auto&& self, int pos) -> void {
                    if (pos == j) {
                        emit();
                        return;
                    }
                    for (int a = 0; a < nx; ++a) {
                        idx[pos] = a;
                        self(self, pos + 1);
                    }
                };
                rec(rec, 0);
            }
        }
        return TateElement(m - 1, f.field, acc.finish());
    }
    const int n = -m - 1;
    const int chain_sign = twist ? parity_sign(m) : 1;
    for (const auto& [key, coeff] : f.terms) {
        Word a = unpack(key);
        Elt u = G.mul(G.product(a.v + 1, n), a[0]);
        int c = cd.class_of(u), i = cd.position(u);
        Elt x = cd.rep(c);
        const auto& gam = cd.coset_reps(c);
        Elt first = G.mul(G.inv(G.mul(gam[i], G.product(a.v + 1, n))), x);
        std::vector<Elt> h;
        int cur = i;
        for (int j = 0; j <= n; ++j) {
            if (j > 0) {
                auto [next, hj] = cd.coset_index(c, G.mul(gam[cur], a[j]));
                if (hj == 0) break;
                h.push_back(hj);
                cur = next;
            }
            if (cur == 0) continue;
            Word w;
            w.push(first);
            for (Elt e : h) w.push(e);
            w.push(gam[cur]);
            for (int k = j + 1; k <= n; ++k) w.push(a[k]);
            acc.add_signed(w, coeff, parity_sign(j) * chain_sign);
        }
    }
    return TateElement(m - 1, f.field, acc.finish());
}

}  // namespace

std::vector<Key> decomposed_basis(const ConjugacyData& cd, int degree) {
    std::vector<Key> keys;
    int len = tuple_length(degree);
    for (int c = 0; c < cd.num_classes(); ++c) centralizer_tuples(cd.centralizer(c), c, len, keys);
    std::sort(keys.begin(), keys.end());
    return keys;
}

DecomposedElement decomposed_diff(const ConjugacyData& cd, const DecomposedElement& e) {
    const auto& G = cd.group();
    const int m = e.degree;
    Accumulator acc(e.field);
    if (m == -1) {
        for (const auto& [key, coeff] : e.terms) {
            int c = unpack(key)[0];
            acc.add(key, coeff * Scalar(e.field, static_cast<std::int64_t>(cd.centralizer(c).size())));
        }
        return DecomposedElement(0, e.field, acc.finish());
    }
    if (m >= 0) {
        const int n = m;
        for (const auto& [key, coeff] : e.terms) {
            Word a = unpack(key);
            int c = a[0];
            const auto& cent = cd.centralizer(c);
            for (Elt g : cent) {
                if (g == 0) continue;
                Word w;
                w.push(a[0]);
                w.push(g);
                for (int i = 1; i <= n; ++i) w.push(a[i]);
                acc.add(w, coeff);
            }
            for (int i = 1; i <= n; ++i) {
                int sign = parity_sign(i);
                for (Elt p : cent) {
                    if (p == 0) continue;
                    Elt q = G.mul(G.inv(p), a[i]);
                    if (q == 0) continue;
                    Word w;
                    for (int k = 0; k < i; ++k) w.push(a[k]);
                    w.push(p);
                    w.push(q);
                    for (int k = i + 1; k <= n; ++k) w.push(a[k]);
                    acc.add_signed(w, coeff, sign);
                }
            }
            int sign = parity_sign(n + 1);
            for (Elt g : cent) {
                if (g == 0) continue;
                Word w = a;
                w.push(g);
                acc.add_signed(w, coeff, sign);
            }
        }
        return DecomposedElement(m + 1, e.field, acc.finish());
    }
    const int s = -m - 1;
    const int twist = parity_sign(m + 1);
    if (s >= 2) {
        for (const auto& [key, coeff] : e.terms) {
            Word a = unpack(key);
            Word first;
            first.push(a[0]);
            for (int k = 2; k <= s; ++k) first.push(a[k]);
            acc.add_signed(first, coeff, twist);
            for (int i = 1; i < s; ++i) {
                Elt prod = G.mul(a[i], a[i + 1]);
                if (prod == 0) continue;
                Word w;
                for (int k = 0; k < i; ++k) w.push(a[k]);
                w.push(prod);
                for (int k = i + 2; k <= s; ++k) w.push(a[k]);
                acc.add_signed(w, coeff, twist * parity_sign(i));
            }
            Word last;
            for (int k = 0; k < s; ++k) last.push(a[k]);
            acc.add_signed(last, coeff, twist * parity_sign(s));
        }
    }
    return DecomposedElement(m + 1, e.field, acc.finish());
}

int component_of(const ConjugacyData& cd, int degree, Key k) {
    const auto& G = cd.group();
    Word w = unpack(k);
    if (degree >= 0) {
        Elt prod = G.product(w.v, degree);
        return cd.class_of(G.mul(G.inv(prod), w[degree]));
    }
    return cd.class_of(G.mul(G.product(w.v + 1, -degree - 1), w[0]));
}

std::vector<TateElement> project(const ConjugacyData& cd, const TateElement& f) {
    std::vector<TateElement> parts(cd.num_classes(), TateElement(f.degree, f.field));
    for (const auto& t : f.terms) parts[component_of(cd, f.degree, t.first)].terms.push_back(t);
    return parts;
}

TateElement iota_hat(const ConjugacyData& cd, const DecomposedElement& e) {
    const auto& G = cd.group();
    const int m = e.degree;
    Accumulator acc(e.field);
    for (const auto& [key, coeff] : e.terms) {
        Word h = unpack(key);
        int c = h[0];
        Elt x = cd.rep(c);
        if (m < 0) {
            const int s = -m - 1;
            Word w;
            w.push(G.mul(G.inv(G.product(h.v + 1, s)), x));
            for (int k = 1; k <= s; ++k) w.push(h[k]);
            acc.add(w, coeff);
            continue;
        }
        const auto& gam = cd.coset_reps(c);
        const auto& conj = cd.conjugates(c);
        const int nx = static_cast<int>(gam.size());
        std::vector<int> idx(m + 1, 0);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == m + 1) {
                Word g;
                for (int t = 1; t <= m; ++t) g.push(G.mul(G.mul(G.inv(gam[idx[t - 1]]), h[t]), gam[idx[t]]));
                Elt val = G.mul(conj[idx[0]], G.product(g.v, g.n));
                g.push(val);
                acc.add(g, coeff);
                return;
            }
            for (int a = 0; a < nx; ++a) {
                idx[pos] = a;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    }
    return TateElement(m, e.field, acc.finish());
}

DecomposedElement rho_hat(const ConjugacyData& cd, const TateElement& f) {
    const auto& G = cd.group();
    const int m = f.degree;
    Accumulator acc(f.field);
    for (const auto& [key, coeff] : f.terms) {
        Word a = unpack(key);
        if (m >= 0) {
            Elt w = G.mul(a[m], G.inv(G.product(a.v, m)));
            int c = cd.class_of_rep(w);
            if (c < 0) continue;
            Word out;
            out.push(static_cast<Elt>(c));
            bool ok = true;
            for (int t = 0; t < m && ok; ++t) {
                ok = cd.centralizes(c, a[t]);
                out.push(a[t]);
            }
            if (ok) acc.add(out, coeff);
            continue;
        }
        const int s = -m - 1;
        Elt u = G.mul(G.product(a.v + 1, s), a[0]);
        int c = cd.class_of(u);
        int cur = cd.position(u);
        const auto& gam = cd.coset_reps(c);
        Word out;
        out.push(static_cast<Elt>(c));
        bool ok = true;
        for (int t = 1; t <= s && ok; ++t) {
            auto [next, h] = cd.coset_index(c, G.mul(gam[cur], a[t]));
            ok = h != 0;
            out.push(h);
            cur = next;
        }
        if (ok) acc.add(out, coeff);
    }
    return DecomposedElement(m, f.field, acc.finish());
}

TateElement s_hat(const ConjugacyData& cd, const TateElement& f) { return s_hat_impl(cd, f, true); }

TateElement s_hat_untwisted(const ConjugacyData& cd, const TateElement& f) { return s_hat_impl(cd, f, false); }

}  // namespace tate
