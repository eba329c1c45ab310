#include "tate/m2_oracle.hpp"

#include <stdexcept>

namespace tate {

namespace {

// every tuple of non-identity centralizer elements of length len
template <class F>
void for_each_bar_tuple(const std::vector<Elt>& cent, int len, F&& f) {
    std::vector<Elt> bar;
    for (Elt g : cent)
        if (g != 0) bar.push_back(g);
    if (len > 0 && bar.empty()) return;
    std::vector<int> idx(len, 0);
    Word w;
    for (int i = 0; i < len; ++i) w.push(bar[0]);
    for (;;) {
        f(static_cast<const Word&>(w));
        int i = len - 1;
        while (i >= 0 && idx[i] + 1 == static_cast<int>(bar.size())) {
            idx[i] = 0;
            w[i] = bar[0];
            --i;
        }
        if (i < 0) return;
        w[i] = bar[++idx[i]];
    }
}

Word slice(const Word& w, int from, int to) {
    Word out;
    for (int i = from; i < to; ++i) out.push(w[i]);
    return out;
}

std::vector<Elt> seq(const Word& w) { return w.to_vector(); }

bool has_identity(const std::vector<Elt>& h) {
    for (Elt e : h)
        if (e == 0) return true;
    return false;
}

Key keyed(int c, const std::vector<Elt>& h) {
    Word w;
    w.push(static_cast<Elt>(c));
    for (Elt e : h) w.push(e);
    return pack(w);
}

Key keyed(int c, const Word& h) { return keyed(c, h.to_vector()); }

}  // namespace

M2Oracle::M2Oracle(const ConjugacyData& cd, Field f) : cd_(cd), field_(f) {}

int M2Oracle::which_case(int da, int db) {
    if (da >= 0 && db >= 0) return 1;
    if (da < 0 && db < 0) return 2;
    if (da >= 0) return da + db < 0 ? 3 : 4;
    return da + db < 0 ? 5 : 6;
}

DecomposedElement M2Oracle::operator()(int da, Key a, int db, Key b) {
    Word wa = unpack(a), wb = unpack(b);
    if (wa.n != tuple_length(da) + 1 || wb.n != tuple_length(db) + 1) throw DegreeError("m2 oracle: key length does not match degree");
    const int cx = wa[0], cy = wb[0];
    Word ta = slice(wa, 1, wa.n), tb = slice(wb, 1, wb.n);
    switch (which_case(da, db)) {
        case 1: return case1(cx, ta, cy, tb);
        case 2: return case2(cx, ta, cy, tb);
        case 3: return case3(cx, ta, cy, tb);
        case 4: return case4(cx, ta, cy, tb);
        case 5: return case5(cx, ta, cy, tb);
        default: return case6(cx, ta, cy, tb);
    }
}

int M2Oracle::conjugator_coset(int cz, Elt u, Elt post) {
    const auto& G = cd_.group();
    const Elt z = cd_.rep(cz);
    int first = -1, seen = 0;
    for (int p = 0; p < G.order() && seen < 2; ++p) {
        Elt phi = static_cast<Elt>(p);
        if (G.mul(G.mul(G.inv(phi), z), phi) != u) continue;
        int idx = cd_.coset_index(cz, G.mul(phi, post)).first;
        if (seen++ == 0) {
            first = idx;
        } else {
            ++conj_checked_;
            if (idx != first) ++conj_mismatch_;
        }
    }
    if (first < 0) throw std::logic_error("m2 oracle: no conjugator found");
    return first;
}

const std::map<Key, std::vector<M2Oracle::Match>>& M2Oracle::matches(int cx, int cz, int len) {
    auto [it, fresh] = cache_.try_emplace({cx, cz, len});
    if (!fresh) return it->second;
    const auto& G = cd_.group();
    for_each_bar_tuple(cd_.centralizer(cz), len, [&](const Word& P) {
        Elt prod = G.product(P.v, P.n);
        for (int i = 0; i < cd_.class_size(cx); ++i) {
            auto r = spadesuit(cd_, cx, i, seq(P));
            if (has_identity(r.h)) continue;
            it->second[pack(Word(r.h))].push_back({P, i, prod});
        }
    });
    return it->second;
}

// (h_1..h_{n+m}) -> sum over (i, j) with x_i H y_j H^-1 = z of phi_x(spade_{x,i}(h_1..h_n)) phi_y(spade_{y,j}(h_{n+1}..))
DecomposedElement M2Oracle::case1(int cx, const Word& T, int cy, const Word& U) {
    const auto& G = cd_.group();
    Accumulator acc(field_);
    for (int cz = 0; cz < cd_.num_classes(); ++cz) {
        const Elt z = cd_.rep(cz);
        const auto& A = matches(cx, cz, T.n);
        const auto& B = matches(cy, cz, U.n);
        auto ia = A.find(pack(T));
        auto ib = B.find(pack(U));
        if (ia == A.end() || ib == B.end()) continue;
        for (const auto& p : ia->second) {
            Elt xi = cd_.conjugates(cx)[p.index];
            for (const auto& q : ib->second) {
                Elt yj = cd_.conjugates(cy)[q.index];
                if (G.mul(G.mul(xi, p.product), G.mul(yj, G.inv(p.product))) != z) continue;
                Word w;
                w.push(static_cast<Elt>(cz));
                for (int k = 0; k < p.tuple.n; ++k) w.push(p.tuple[k]);
                for (int k = 0; k < q.tuple.n; ++k) w.push(q.tuple[k]);
                acc.add(w, Scalar::one(field_));
            }
        }
    }
    return DecomposedElement(T.n + U.n, field_, acc.finish());
}

// u = H_t g^-1 G_s^-1 x G_s g H_t^-1 y, term spade_{z,i_g}(h_1..h_t, g^-1 G_s^-1 x, g_1..g_s)
DecomposedElement M2Oracle::case2(int cx, const Word& g, int cy, const Word& h) {
    const auto& G = cd_.group();
    const Elt x = cd_.rep(cx), y = cd_.rep(cy);
    const Elt Gs = G.product(g.v, g.n), Ht = G.product(h.v, h.n);
    Accumulator acc(field_);
    for (int e = 0; e < G.order(); ++e) {
        const Elt ge = static_cast<Elt>(e);
        const Elt w = G.mul(G.mul(G.inv(ge), G.inv(Gs)), x);
        const Elt u = G.mul(G.mul(G.mul(Ht, w), G.mul(Gs, ge)), G.mul(G.inv(Ht), y));
        const int cz = cd_.class_of(u);
        const int i = conjugator_coset(cz, u, 0);
        std::vector<Elt> s = seq(h);
        s.push_back(w);
        for (int k = 0; k < g.n; ++k) s.push_back(g[k]);
        auto r = spadesuit(cd_, cz, i, s);
        if (has_identity(r.h)) continue;
        acc.add(keyed(cz, r.h), Scalar::one(field_));
    }
    return DecomposedElement(-static_cast<int>(g.n + h.n + 1) - 1, field_, acc.finish());
}

// u = P x_i P^-1 y with P = h_1..h_{t-n}; phi_x(spade_{x,i}(h_{t-n+1}..h_t)) spade_{z,j_i}(h_1..h_{t-n})
DecomposedElement M2Oracle::case3(int cx, const Word& T, int cy, const Word& h) {
    const auto& G = cd_.group();
    const int n = T.n, t = h.n;
    const Elt y = cd_.rep(cy);
    Word head = slice(h, 0, t - n), tail = slice(h, t - n, t);
    const Elt P = G.product(head.v, head.n);
    Accumulator acc(field_);
    for (int i = 0; i < cd_.class_size(cx); ++i) {
        auto k = spadesuit(cd_, cx, i, seq(tail));
        if (!(Word(k.h) == T)) continue;
        const Elt u = G.mul(G.mul(G.mul(P, cd_.conjugates(cx)[i]), G.inv(P)), y);
        const int cz = cd_.class_of(u);
        const int j = conjugator_coset(cz, u, 0);
        auto r = spadesuit(cd_, cz, j, seq(head));
        if (has_identity(r.h)) continue;
        acc.add(keyed(cz, r.h), Scalar::one(field_));
    }
    return DecomposedElement(n - t - 1, field_, acc.finish());
}

// (g_1..g_k), k = n-t-1: sum over (g, i) with x_i P g^-1 y g P^-1 = z of phi_x(spade_{x,i}(g_1..g_k, g^-1, h_1..h_t))
DecomposedElement M2Oracle::case4(int cx, const Word& T, int cy, const Word& h) {
    const auto& G = cd_.group();
    const int k = T.n - h.n - 1;
    const Elt y = cd_.rep(cy);
    Accumulator acc(field_);
    for (int cz = 0; cz < cd_.num_classes(); ++cz) {
        const Elt z = cd_.rep(cz);
        for_each_bar_tuple(cd_.centralizer(cz), k, [&](const Word& gs) {
            const Elt P = G.product(gs.v, gs.n);
            long value = 0;
            for (int e = 1; e < G.order(); ++e) {
                const Elt ge = static_cast<Elt>(e);
                const Elt rest = G.mul(G.mul(G.mul(P, G.inv(ge)), G.mul(y, ge)), G.inv(P));
                for (int i = 0; i < cd_.class_size(cx); ++i) {
                    if (G.mul(cd_.conjugates(cx)[i], rest) != z) continue;
                    std::vector<Elt> s = seq(gs);
                    s.push_back(G.inv(ge));
                    for (int q = 0; q < h.n; ++q) s.push_back(h[q]);
                    if (Word(spadesuit(cd_, cx, i, s).h) == T) ++value;
                }
            }
            if (value) acc.add(keyed(cz, gs), Scalar(field_, value));
        });
    }
    return DecomposedElement(k, field_, acc.finish());
}

// x y_j = Phi^-1 z Phi, Phi G_m in C_G(z) gamma_{i_j}; phi_y(spade_{y,j}(g_1..g_m)) spade_{z,i_j}(g_{m+1}..g_s)
DecomposedElement M2Oracle::case5(int cx, const Word& g, int cy, const Word& U) {
    const auto& G = cd_.group();
    const int m = U.n, s = g.n;
    const Elt x = cd_.rep(cx);
    Word head = slice(g, 0, m), tail = slice(g, m, s);
    const Elt Gm = G.product(head.v, head.n);
    Accumulator acc(field_);
    for (int j = 0; j < cd_.class_size(cy); ++j) {
        auto k = spadesuit(cd_, cy, j, seq(head));
        if (!(Word(k.h) == U)) continue;
        const Elt v = G.mul(x, cd_.conjugates(cy)[j]);
        const int cz = cd_.class_of(v);
        const int i = conjugator_coset(cz, v, Gm);
        auto r = spadesuit(cd_, cz, i, seq(tail));
        if (has_identity(r.h)) continue;
        acc.add(keyed(cz, r.h), Scalar::one(field_));
    }
    return DecomposedElement(m - s - 1, field_, acc.finish());
}

// (h_1..h_k), k = m-s-1: sum over (g, j) with g G_s^-1 x y_j G_s g^-1 = z of phi_y(spade_{y,j}(g_1..g_s, g^-1, h_1..h_k))
DecomposedElement M2Oracle::case6(int cx, const Word& g, int cy, const Word& U) {
    const auto& G = cd_.group();
    const int k = U.n - g.n - 1;
    const Elt x = cd_.rep(cx);
    const Elt Gs = G.product(g.v, g.n);
    Accumulator acc(field_);
    for (int cz = 0; cz < cd_.num_classes(); ++cz) {
        const Elt z = cd_.rep(cz);
        for_each_bar_tuple(cd_.centralizer(cz), k, [&](const Word& hs) {
            long value = 0;
            for (int e = 1; e < G.order(); ++e) {
                const Elt ge = static_cast<Elt>(e);
                for (int j = 0; j < cd_.class_size(cy); ++j) {
                    const Elt inner = G.mul(G.mul(G.inv(Gs), G.mul(x, cd_.conjugates(cy)[j])), Gs);
                    if (G.mul(G.mul(ge, inner), G.inv(ge)) != z) continue;
                    std::vector<Elt> s = seq(g);
                    s.push_back(G.inv(ge));
                    for (int q = 0; q < hs.n; ++q) s.push_back(hs[q]);
                    if (Word(spadesuit(cd_, cy, j, s).h) == U) ++value;
                }
            }
            if (value) acc.add(keyed(cz, hs), Scalar(field_, value));
        });
    }
    return DecomposedElement(k, field_, acc.finish());
}

}  // namespace tate
