#include "tate/products.hpp"

#include <algorithm>

namespace tate {

namespace {

inline int parity_sign(int e) { return (e % 2 + 2) % 2 ? -1 : 1; }

void cup_basis(const FiniteGroup& G, int n, int m, const Word& a, const Word& b, const Scalar& c, Accumulator& acc) {
    if (n >= 0 && m >= 0) {
        Word w;
        for (int i = 0; i < n; ++i) w.push(a[i]);
        for (int i = 0; i < m; ++i) w.push(b[i]);
        w.push(G.mul(a[n], b[m]));
        acc.add(w, c);
        return;
    }
    if (n < 0 && m < 0) {
        const int s = -n - 1, t = -m - 1;
        for (int g = 0; g < G.order(); ++g) {
            Elt mid = G.mul(G.inv(static_cast<Elt>(g)), a[0]);
            if (mid == 0) continue;
            Word w;
            w.push(G.mul(static_cast<Elt>(g), b[0]));
            for (int i = 1; i <= t; ++i) w.push(b[i]);
            w.push(mid);
            for (int i = 1; i <= s; ++i) w.push(a[i]);
            acc.add(w, c);
        }
        return;
    }
    if (n >= 0) {
        // a cochain (a_1..a_n | v), b chain (h_0, h_1..h_t)
        const int t = -m - 1;
        const Elt v = a[n];
        if (n + m <= -1) {
            for (int k = 0; k < n; ++k)
                if (a[k] != b[t - n + 1 + k]) return;
            Word w;
            w.push(G.mul(v, b[0]));
            for (int i = 1; i <= t - n; ++i) w.push(b[i]);
            acc.add(w, c);
        } else {
            for (int k = 1; k <= t; ++k)
                if (a[n - t - 1 + k] != b[k]) return;
            Elt g = G.inv(a[n - t - 1]);
            Word w;
            for (int i = 0; i < n - t - 1; ++i) w.push(a[i]);
            w.push(G.mul(G.mul(v, b[0]), g));
            acc.add(w, c);
        }
        return;
    }
    // a chain (g_0, g_1..g_s), b cochain (b_1..b_m | w)
    const int s = -n - 1;
    const Elt wv = b[m];
    if (n + m <= -1) {
        for (int k = 0; k < m; ++k)
            if (b[k] != a[k + 1]) return;
        Word w;
        w.push(G.mul(a[0], wv));
        for (int i = m + 1; i <= s; ++i) w.push(a[i]);
        acc.add(w, c);
    } else {
        for (int k = 0; k < s; ++k)
            if (b[k] != a[k + 1]) return;
        Elt g = G.inv(b[s]);
        Word w;
        for (int i = s + 1; i < m; ++i) w.push(b[i]);
        w.push(G.mul(G.mul(g, a[0]), wv));
        acc.add(w, c);
    }
}

// (phi in C^m, alpha = (g_0, g_1..g_r), psi in C^n)
void m3_cochain_chain_cochain(const FiniteGroup& G, int m, int r, int n, const Word& a, const Word& al, const Word& b,
                              const Scalar& c, Accumulator& acc) {
    if (r + 2 > m + n) return;
    const int lo = std::max(1, r + 2 - m), hi = std::min(n, r + 1);
    for (int j = lo; j <= hi; ++j) {
        const int L1 = m - r + j - 2;
        bool ok = true;
        // a = (h_1..h_{L1}, g, g_j..g_r)
        for (int k = j; k <= r && ok; ++k) ok = a[L1 + 1 + (k - j)] == al[k];
        if (!ok) continue;
        Elt g = a[L1];
        // b = (g_1..g_{j-1}, g^{-1}, h..)
        for (int k = 1; k < j && ok; ++k) ok = b[k - 1] == al[k];
        if (!ok || G.mul(g, b[j - 1]) != 0) continue;
        Word w;
        for (int i = 0; i < L1; ++i) w.push(a[i]);
        for (int i = j; i < n; ++i) w.push(b[i]);
        w.push(G.mul(G.mul(a[m], al[0]), b[n]));
        acc.add_signed(w, c, parity_sign(m + r + j - 1));
    }
}

// (alpha = (g_0, g_1..g_r), phi in C^m, beta = (h_0, h_1..h_s))
void m3_chain_cochain_chain(const FiniteGroup& G, int r, int m, int s, const Word& al, const Word& a, const Word& be,
                            const Scalar& c, Accumulator& acc, M3Sign sign) {
    int lo, hi;
    if (sign == M3Sign::corrected) {
        if (m - 1 > r + s) return;
        lo = std::max(0, s + 1 - m);
        hi = std::min(s, r - m + s + 1);
    } else {
        lo = 0;
        hi = s;
    }
    for (int j = lo; j <= hi; ++j) {
        const int P = m - s + j - 1;
        if (P < 0 || P > r) continue;
        bool ok = true;
        for (int k = 1; k <= P && ok; ++k) ok = a[k - 1] == al[k];
        for (int k = j + 1; k <= s && ok; ++k) ok = a[P + 1 + (k - j - 1)] == be[k];
        if (!ok) continue;
        Elt g = a[P];
        Word w;
        w.push(G.mul(G.mul(al[0], a[m]), be[0]));
        for (int k = 1; k <= j; ++k) w.push(be[k]);
        w.push(G.inv(g));
        for (int k = P + 1; k <= r; ++k) w.push(al[k]);
        int e = sign == M3Sign::corrected ? m + r + s - j : m - j;
        acc.add_signed(w, c, parity_sign(e));
    }
}

void check_fields(const TateElement& a, const TateElement& b) {
    if (a.field != b.field) throw FieldMismatch("field mismatch in product");
}

}  // namespace

void cup_into(const FiniteGroup& G, const TateElement& a, const TateElement& b, int sign, Accumulator& acc) {
    check_fields(a, b);
    for (const auto& [ka, ca] : a.terms) {
        Word wa = unpack(ka);
        for (const auto& [kb, cb] : b.terms)
            cup_basis(G, a.degree, b.degree, wa, unpack(kb), sign > 0 ? ca * cb : -(ca * cb), acc);
    }
}

TateElement cup(const FiniteGroup& G, const TateElement& a, const TateElement& b) {
    Accumulator acc(a.field);
    cup_into(G, a, b, 1, acc);
    return TateElement(a.degree + b.degree, a.field, acc.finish());
}

bool m3_support(int da, int db, int dc) { return (da >= 0 && db < 0 && dc >= 0) || (da < 0 && db >= 0 && dc < 0); }

void m3_into(const FiniteGroup& G, const TateElement& a, const TateElement& b, const TateElement& c, M3Sign sign,
             int out_sign, Accumulator& acc) {
    check_fields(a, b);
    check_fields(a, c);
    if (!m3_support(a.degree, b.degree, c.degree)) return;
    const bool ccc = a.degree >= 0;
    for (const auto& [ka, ca] : a.terms) {
        Word wa = unpack(ka);
        for (const auto& [kb, cb] : b.terms) {
            Word wb = unpack(kb);
            Scalar cab = out_sign > 0 ? ca * cb : -(ca * cb);
            for (const auto& [kc, cc] : c.terms) {
                Word wc = unpack(kc);
                if (ccc)
                    m3_cochain_chain_cochain(G, a.degree, -b.degree - 1, c.degree, wa, wb, wc, cab * cc, acc);
                else
                    m3_chain_cochain_chain(G, -a.degree - 1, b.degree, -c.degree - 1, wa, wb, wc, cab * cc, acc, sign);
            }
        }
    }
}

TateElement m3(const FiniteGroup& G, const TateElement& a, const TateElement& b, const TateElement& c, M3Sign sign) {
    Accumulator acc(a.field);
    m3_into(G, a, b, c, sign, 1, acc);
    return TateElement(a.degree + b.degree + c.degree - 1, a.field, acc.finish());
}

}  // namespace tate
