#pragma once

#include <map>
#include <ostream>
#include <vector>

#include "tate/abelian.hpp"
#include "tate/decomp.hpp"
#include "tate/hochschild.hpp"

namespace tate {

// readable gtest failure messages
inline void PrintTo(const TateElement& e, std::ostream* os) { *os << describe(e); }
inline void PrintTo(const DecomposedElement& e, std::ostream* os) { *os << describe(e); }
inline void PrintTo(const AbelianCochain& e, std::ostream* os) { *os << describe(e); }
inline void PrintTo(const Scalar& s, std::ostream* os) { *os << s.to_string() << " in " << s.field().name(); }

}  // namespace tate

namespace tate::testing {

inline std::vector<TateElement> tate_elements(const FiniteGroup& G, Field f, int d) {
    std::vector<TateElement> out;
    for (Key k : tate_basis(G, d)) out.emplace_back(d, f, Terms{{k, Scalar::one(f)}});
    return out;
}

inline std::vector<DecomposedElement> decomposed_elements(const ConjugacyData& cd, Field f, int d) {
    std::vector<DecomposedElement> out;
    for (Key k : decomposed_basis(cd, d)) out.emplace_back(d, f, Terms{{k, Scalar::one(f)}});
    return out;
}

inline TateElement tel(int d, Field f, const Word& w, std::int64_t c = 1) {
    return TateElement(d, f, Terms{{pack(w), Scalar(f, c)}});
}

inline DecomposedElement decomposed(int d, Field f, const Word& w, std::int64_t c = 1) {
    return DecomposedElement(d, f, Terms{{pack(w), Scalar(f, c)}});
}

// All tuples in (G - 1)^n.
inline std::vector<Word> barred_tuples(const FiniteGroup& G, int n) {
    std::vector<Word> out{Word{}};
    for (int k = 0; k < n; ++k) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (int g = 1; g < G.order(); ++g) {
                Word x = w;
                x.push(static_cast<Elt>(g));
                next.push_back(x);
            }
        out = next;
    }
    return out;
}

// Value of a cochain at a tuple, as a vector of kG coefficients.
using KG = std::map<Elt, Scalar>;

inline KG value_at(const TateElement& f, const Word& tuple) {
    KG out;
    for (int i = 0; i < tuple.n; ++i)
        if (tuple[i] == 0) return out;
    for (const auto& [k, c] : f.terms) {
        Word w = unpack(k);
        bool same = true;
        for (int i = 0; i < tuple.n && same; ++i) same = w[i] == tuple[i];
        if (!same) continue;
        auto it = out.try_emplace(w[tuple.n], Scalar::zero(f.field)).first;
        it->second += c;
    }
    return out;
}

// Rebuilds a cochain of degree d from its values on every tuple.
template <class F>
TateElement cochain_from_values(const FiniteGroup& G, Field f, int d, F&& value) {
    Accumulator acc(f);
    for (const auto& t : barred_tuples(G, d)) {
        KG v = value(t);
        for (const auto& [g, c] : v) {
            Word w = t;
            w.push(g);
            acc.add(w, c);
        }
    }
    return TateElement(d, f, acc.finish());
}

inline void add_into(KG& a, const KG& b, const Scalar& c) {
    for (const auto& [g, v] : b) {
        auto it = a.try_emplace(g, Scalar::zero(c.field())).first;
        it->second += c * v;
    }
}

inline KG left(const FiniteGroup& G, Elt g, const KG& a) {
    KG out;
    for (const auto& [h, v] : a) out.emplace(G.mul(g, h), v);
    return out;
}

inline KG right(const FiniteGroup& G, const KG& a, Elt g) {
    KG out;
    for (const auto& [h, v] : a) out.emplace(G.mul(h, g), v);
    return out;
}

}  // namespace tate::testing
