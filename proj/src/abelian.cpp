#include "tate/abelian.hpp"

#include <sstream>

namespace tate {

namespace {

inline int parity_sign(int e) { return (e % 2 + 2) % 2 ? -1 : 1; }

void require_abelian(const FiniteGroup& G) {
    if (!G.is_abelian()) throw NotAbelian("closed forms need an abelian group, " + G.name() + " is not");
}

void require_field(const AbelianCochain& a, const AbelianCochain& b) {
    if (a.field != b.field) throw FieldMismatch("field mismatch in closed form");
}

// phi(w) for a cochain given by its terms
Scalar eval(const AbelianCochain& phi, const Word& w) { return phi.coeff(w); }

// every tuple in (G - 1)^len
template <class F>
void for_each_tuple(const FiniteGroup& G, int len, F&& f) {
    Word w;
    for (int i = 0; i < len; ++i) w.push(1);
    if (G.order() == 1 && len > 0) return;
    for (;;) {
        f(static_cast<const Word&>(w));
        int i = len - 1;
        while (i >= 0 && w[i] == G.order() - 1) w[i--] = 1;
        if (i < 0) return;
        ++w[i];
    }
}

Word slice(const Word& w, int from, int to) {
    // 1-based inclusive [from, to]
    Word out;
    for (int i = from; i <= to; ++i) out.push(w[i - 1]);
    return out;
}

Word concat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts)
        for (int i = 0; i < p.n; ++i) out.push(p[i]);
    return out;
}

Word single(Elt g) {
    Word w;
    w.push(g);
    return w;
}

AbelianCochain cochain_from(const FiniteGroup& G, int degree, Field f, auto&& value) {
    Accumulator acc(f);
    for_each_tuple(G, degree, [&](const Word& h) { acc.add(h, value(h)); });
    return AbelianCochain(degree, f, acc.finish());
}

}  // namespace

std::string describe(const AbelianCochain& e) {
    std::ostringstream os;
    os << "deg " << e.degree << ":";
    if (e.terms.empty()) os << " 0";
    for (const auto& [k, c] : e.terms) {
        Word w = unpack(k);
        os << " " << c.to_string() << (e.degree >= 0 ? "*l(" : "*g(");
        for (int i = 0; i < w.n; ++i) os << (i ? "," : "") << int(w[i]);
        os << ")";
    }
    return os.str();
}

AbelianCochain mhat1_closed(const FiniteGroup& G, const AbelianCochain& a) {
    require_abelian(G);
    const Field f = a.field;
    const int m = a.degree;
    if (m >= 0) {
        return cochain_from(G, m + 1, f, [&](const Word& g) {
            Scalar v = eval(a, slice(g, 2, m + 1));
            for (int i = 1; i <= m; ++i) {
                Elt p = G.mul(g[i - 1], g[i]);
                if (p == 0) continue;
                Scalar t = eval(a, concat({slice(g, 1, i - 1), single(p), slice(g, i + 2, m + 1)}));
                v = parity_sign(i) > 0 ? v + t : v - t;
            }
            Scalar t = eval(a, slice(g, 1, m));
            return parity_sign(m + 1) > 0 ? v + t : v - t;
        });
    }
    Accumulator acc(f);
    if (m == -1) {
        for (const auto& [k, c] : a.terms) acc.add(k, c * Scalar(f, static_cast<std::int64_t>(G.order())));
        return AbelianCochain(0, f, acc.finish());
    }
    const int s = -m - 1;
    if (s >= 2) {
        const int twist = parity_sign(m + 1);
        for (const auto& [k, c] : a.terms) {
            Word g = unpack(k);
            acc.add_signed(slice(g, 2, s), c, twist);
            for (int i = 1; i < s; ++i) {
                Elt p = G.mul(g[i - 1], g[i]);
                if (p == 0) continue;
                acc.add_signed(concat({slice(g, 1, i - 1), single(p), slice(g, i + 2, s)}), c, twist * parity_sign(i));
            }
            acc.add_signed(slice(g, 1, s - 1), c, twist * parity_sign(s));
        }
    }
    return AbelianCochain(m + 1, f, acc.finish());
}

AbelianCochain mhat2_closed(const FiniteGroup& G, const AbelianCochain& a, const AbelianCochain& b) {
    require_abelian(G);
    require_field(a, b);
    const Field f = a.field;
    const int out = a.degree + b.degree;
    if (a.degree >= 0 && b.degree >= 0) {
        const int n = a.degree, m = b.degree;
        return cochain_from(G, n + m, f,
                            [&](const Word& h) { return eval(a, slice(h, 1, n)) * eval(b, slice(h, n + 1, n + m)); });
    }
    Accumulator acc(f);
    if (a.degree < 0 && b.degree < 0) {
        const int s = -a.degree - 1;
        for (const auto& [ka, ca] : a.terms) {
            Word g = unpack(ka);
            Elt gs_inv = G.inv(G.product(g.v, s));
            for (const auto& [kb, cb] : b.terms) {
                Word h = unpack(kb);
                for (int x = 0; x < G.order(); ++x) {
                    Elt mid = G.mul(G.inv(static_cast<Elt>(x)), gs_inv);
                    if (mid == 0) continue;
                    acc.add(concat({h, single(mid), g}), ca * cb);
                }
            }
        }
        return AbelianCochain(out, f, acc.finish());
    }
    if (a.degree >= 0) {
        const int n = a.degree, t = -b.degree - 1;
        if (n - t - 1 < 0) {
            for (const auto& [kb, cb] : b.terms) {
                Word h = unpack(kb);
                acc.add(slice(h, 1, t - n), eval(a, slice(h, t - n + 1, t)) * cb);
            }
            return AbelianCochain(out, f, acc.finish());
        }
        return cochain_from(G, n - t - 1, f, [&](const Word& g) {
            Scalar v = Scalar::zero(f);
            for (const auto& [kb, cb] : b.terms) {
                Word h = unpack(kb);
                for (int x = 1; x < G.order(); ++x)
                    v += eval(a, concat({g, single(G.inv(static_cast<Elt>(x))), h})) * cb;
            }
            return v;
        });
    }
    const int s = -a.degree - 1, m = b.degree;
    if (m - s - 1 < 0) {
        for (const auto& [ka, ca] : a.terms) {
            Word g = unpack(ka);
            acc.add(slice(g, m + 1, s), eval(b, slice(g, 1, m)) * ca);
        }
        return AbelianCochain(out, f, acc.finish());
    }
    return cochain_from(G, m - s - 1, f, [&](const Word& h) {
        Scalar v = Scalar::zero(f);
        for (const auto& [ka, ca] : a.terms) {
            Word g = unpack(ka);
            for (int x = 1; x < G.order(); ++x) v += eval(b, concat({g, single(G.inv(static_cast<Elt>(x))), h})) * ca;
        }
        return v;
    });
}

AbelianCochain mhat3_closed(const FiniteGroup& G, const AbelianCochain& a, const AbelianCochain& b,
                            const AbelianCochain& c) {
    require_abelian(G);
    require_field(a, b);
    require_field(a, c);
    const Field f = a.field;
    const int out = a.degree + b.degree + c.degree - 1;
    if (a.degree >= 0 && b.degree < 0 && c.degree >= 0) {
        const int m = a.degree, r = -b.degree - 1, n = c.degree;
        if (r + 2 > m + n) return AbelianCochain(out, f);
        const int lo = std::max(1, r + 2 - m), hi = std::min(n, r + 1);
        return cochain_from(G, m - r + n - 2, f, [&](const Word& h) {
            Scalar v = Scalar::zero(f);
            for (const auto& [kb, cb] : b.terms) {
                Word al = unpack(kb);
                for (int x = 1; x < G.order(); ++x) {
                    Elt g = static_cast<Elt>(x);
                    for (int j = lo; j <= hi; ++j) {
                        Scalar t = eval(a, concat({slice(h, 1, m - r + j - 2), single(g), slice(al, j, r)})) *
                                   eval(c, concat({slice(al, 1, j - 1), single(G.inv(g)),
                                                   slice(h, m - r + j - 1, m - r + n - 2)})) *
                                   cb;
                        v = parity_sign(m + r + j - 1) > 0 ? v + t : v - t;
                    }
                }
            }
            return v;
        });
    }
    if (a.degree < 0 && b.degree >= 0 && c.degree < 0) {
        const int r = -a.degree - 1, m = b.degree, s = -c.degree - 1;
        Accumulator acc(f);
        if (m - r > s + 1) return AbelianCochain(out, f);
        const int lo = std::max(0, s + 1 - m), hi = std::min(s, r - m + s + 1);
        for (const auto& [ka, ca] : a.terms) {
            Word g = unpack(ka);
            for (const auto& [kc, cc] : c.terms) {
                Word h = unpack(kc);
                for (int x = 1; x < G.order(); ++x) {
                    Elt e = static_cast<Elt>(x);
                    for (int j = lo; j <= hi; ++j) {
                        Scalar v = eval(b, concat({slice(g, 1, m - s + j - 1), single(e), slice(h, j + 1, s)}));
                        Word w = concat({slice(h, 1, j), single(G.inv(e)), slice(g, m - s + j, r)});
                        acc.add_signed(w, v * ca * cc, parity_sign(m + r + s - j));
                    }
                }
            }
        }
        return AbelianCochain(out, f, acc.finish());
    }
    return AbelianCochain(out, f);
}

AbelianCochain mhat_closed(const FiniteGroup& G, const std::vector<AbelianCochain>& in) {
    if (in.empty()) throw std::invalid_argument("mhat needs at least one input");
    require_abelian(G);
    switch (in.size()) {
        case 1: return mhat1_closed(G, in[0]);
        case 2: return mhat2_closed(G, in[0], in[1]);
        case 3: return mhat3_closed(G, in[0], in[1], in[2]);
        default: break;
    }
    int total = 0;
    for (const auto& e : in) {
        if (e.field != in[0].field) throw FieldMismatch("field mismatch in closed form");
        total += e.degree;
    }
    return AbelianCochain(total + 2 - static_cast<int>(in.size()), in[0].field);
}

TensorTerm tensor_structure(const FiniteGroup& G, int p, const std::vector<TensorTerm>& inputs) {
    if (p < 1 || static_cast<int>(inputs.size()) != p)
        throw std::invalid_argument("tensor_structure: arity " + std::to_string(p) + " with " +
                                    std::to_string(inputs.size()) + " inputs");
    require_abelian(G);
    Elt x = 0;
    std::vector<AbelianCochain> parts;
    for (const auto& [g, a] : inputs) {
        x = G.mul(x, g);
        parts.push_back(a);
    }
    return {x, mhat_closed(G, parts)};
}

DecomposedElement to_decomposed(const ConjugacyData& cd, Elt x, const AbelianCochain& a) {
    require_abelian(cd.group());
    DecomposedElement out(a.degree, a.field);
    const int c = cd.class_of(x);
    for (const auto& [k, v] : a.terms) {
        Word w = unpack(k);
        Word key;
        key.push(static_cast<Elt>(c));
        for (int i = 0; i < w.n; ++i) key.push(w[i]);
        out.terms.emplace_back(pack(key), v);
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const Term& p, const Term& q) { return p.first < q.first; });
    return out;
}

std::vector<TensorTerm> from_decomposed(const ConjugacyData& cd, const DecomposedElement& e) {
    require_abelian(cd.group());
    std::vector<TensorTerm> out;
    for (int c = 0; c < cd.num_classes(); ++c) {
        AbelianCochain a(e.degree, e.field);
        for (const auto& [k, v] : e.terms) {
            Word w = unpack(k);
            if (w[0] != c) continue;
            Word rest;
            for (int i = 1; i < w.n; ++i) rest.push(w[i]);
            a.terms.emplace_back(pack(rest), v);
        }
        std::sort(a.terms.begin(), a.terms.end(), [](const Term& p, const Term& q) { return p.first < q.first; });
        if (!a.is_zero()) out.emplace_back(cd.rep(c), std::move(a));
    }
    return out;
}

std::vector<IndexTuple> ci_map(const std::string& group, int i, const IndexTuple& j) {
    if (group != "Z4" && group != "Z2xZ2") throw std::invalid_argument("ci_map: group must be Z4 or Z2xZ2");
    if (i < 1 || i > static_cast<int>(j.size())) throw std::out_of_range("ci_map: position out of range");
    for (int x : j)
        if (x < 1 || x > 3) throw std::out_of_range("ci_map: index outside {1,2,3}");
    auto with = [&](int a, int b) {
        IndexTuple t(j.begin(), j.begin() + (i - 1));
        t.push_back(a);
        t.push_back(b);
        t.insert(t.end(), j.begin() + i, j.end());
        return t;
    };
    const int v = j[i - 1];
    if (v == 1) return {with(2, 3), with(3, 2)};
    if (v == 3) return {with(1, 2), with(2, 1)};
    if (group == "Z4") return {with(3, 3)};
    return {with(1, 3), with(3, 1)};
}

bool di_map(int i, const IndexTuple& j, IndexTuple& out) {
    if (i < 1 || i >= static_cast<int>(j.size())) throw std::out_of_range("di_map: position out of range");
    for (int x : j)
        if (x < 1 || x > 3) throw std::out_of_range("di_map: index outside {1,2,3}");
    out.clear();
    if (j[i - 1] == j[i]) return false;
    out.assign(j.begin(), j.begin() + (i - 1));
    out.push_back(6 - j[i - 1] - j[i]);
    out.insert(out.end(), j.begin() + i + 1, j.end());
    return true;
}

std::vector<IndexTuple> merge_preimages(const FiniteGroup& G, int i, const IndexTuple& j) {
    if (i < 1 || i > static_cast<int>(j.size())) throw std::out_of_range("merge_preimages: position out of range");
    std::vector<IndexTuple> out;
    for (int a = 1; a < G.order(); ++a)
        for (int b = 1; b < G.order(); ++b) {
            if (G.mul(static_cast<Elt>(a), static_cast<Elt>(b)) != j[i - 1]) continue;
            IndexTuple t(j.begin(), j.begin() + (i - 1));
            t.push_back(a);
            t.push_back(b);
            t.insert(t.end(), j.begin() + i, j.end());
            out.push_back(t);
        }
    return out;
}

}  // namespace tate
