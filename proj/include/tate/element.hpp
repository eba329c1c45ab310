#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tate/group.hpp"
#include "tate/scalar.hpp"

namespace tate {

// A key packs up to kMaxSlots entries of 5 bits plus a 4-bit length.
using Key = std::uint64_t;
constexpr int kMaxSlots = 12;

struct Word {
    Elt v[kMaxSlots] = {};
    int n = 0;

    Word() = default;
    Word(std::initializer_list<int> xs) {
        for (int x : xs) push(static_cast<Elt>(x));
    }
    explicit Word(const std::vector<Elt>& xs) {
        for (Elt x : xs) push(x);
    }
    void push(Elt x) {
        if (n >= kMaxSlots) throw std::length_error("tuple longer than supported");
        v[n++] = x;
    }
    Elt operator[](int i) const { return v[i]; }
    Elt& operator[](int i) { return v[i]; }
    int size() const { return n; }
    std::vector<Elt> to_vector() const { return std::vector<Elt>(v, v + n); }
    friend bool operator==(const Word& a, const Word& b) { return a.n == b.n && std::equal(a.v, a.v + a.n, b.v); }
};

inline Key pack(const Word& w) {
    Key k = static_cast<Key>(w.n) << 60;
    for (int i = 0; i < w.n; ++i) k |= static_cast<Key>(w.v[i] & 31) << (5 * i);
    return k;
}

inline Word unpack(Key k) {
    Word w;
    w.n = static_cast<int>(k >> 60);
    for (int i = 0; i < w.n; ++i) w.v[i] = static_cast<Elt>((k >> (5 * i)) & 31);
    return w;
}

inline int key_length(Key k) { return static_cast<int>(k >> 60); }

using Term = std::pair<Key, Scalar>;
using Terms = std::vector<Term>;

// Hash accumulator that drops zero coefficients when finalized.
class Accumulator {
public:
    explicit Accumulator(Field f) : field_(f) {}
    Field field() const { return field_; }
    void add(Key k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = map_.try_emplace(k, c);
        if (!fresh) it->second += c;
    }
    void add(const Word& w, const Scalar& c) { add(pack(w), c); }
    void add_signed(Key k, const Scalar& c, int sign) {
        if (sign > 0) add(k, c);
        else add(k, -c);
    }
    void add_signed(const Word& w, const Scalar& c, int sign) { add_signed(pack(w), c, sign); }
    bool is_zero() const {
        for (const auto& kv : map_)
            if (!kv.second.is_zero()) return false;
        return true;
    }
    void clear() { map_.clear(); }
    Terms finish() {
        Terms out;
        out.reserve(map_.size());
        for (auto& [k, c] : map_)
            if (!c.is_zero()) out.emplace_back(k, std::move(c));
        map_.clear();
        std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        return out;
    }

private:
    Field field_;
    std::unordered_map<Key, Scalar> map_;
};

struct DegreeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Homogeneous sparse element. Tag distinguishes the Tate complex from the decomposed side.
template <class Tag>
struct Graded {
    int degree = 0;
    Field field;
    Terms terms;

    Graded() = default;
    Graded(int d, Field f) : degree(d), field(f) {}
    Graded(int d, Field f, Terms t) : degree(d), field(f), terms(std::move(t)) {}

    static Graded zero(int d, Field f) { return Graded(d, f); }
    static Graded basis(int d, Field f, const Word& w) { return Graded(d, f, Terms{{pack(w), Scalar::one(f)}}); }

    bool is_zero() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }

    Scalar coeff(Key k) const {
        auto it = std::lower_bound(terms.begin(), terms.end(), k, [](const Term& t, Key key) { return t.first < key; });
        if (it != terms.end() && it->first == k) return it->second;
        return Scalar::zero(field);
    }
    Scalar coeff(const Word& w) const { return coeff(pack(w)); }

    friend bool operator==(const Graded& a, const Graded& b) {
        return a.degree == b.degree && a.field == b.field && a.terms == b.terms;
    }
    friend bool operator!=(const Graded& a, const Graded& b) { return !(a == b); }
};

// a + c*b
template <class Tag>
Graded<Tag> add_scaled(const Graded<Tag>& a, const Scalar& c, const Graded<Tag>& b) {
    if (a.degree != b.degree) throw DegreeError("degree mismatch " + std::to_string(a.degree) + " vs " + std::to_string(b.degree));
    if (a.field != b.field || c.field() != a.field) throw FieldMismatch("field mismatch in add_scaled");
    Terms out;
    out.reserve(a.terms.size() + b.terms.size());
    auto i = a.terms.begin(), j = b.terms.begin();
    while (i != a.terms.end() || j != b.terms.end()) {
        if (j == b.terms.end() || (i != a.terms.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.terms.end() || j->first < i->first) {
            Scalar v = c * j->second;
            if (!v.is_zero()) out.emplace_back(j->first, v);
            ++j;
        } else {
            Scalar v = i->second + c * j->second;
            if (!v.is_zero()) out.emplace_back(i->first, v);
            ++i;
            ++j;
        }
    }
    return Graded<Tag>(a.degree, a.field, std::move(out));
}

template <class Tag>
Graded<Tag> operator+(const Graded<Tag>& a, const Graded<Tag>& b) {
    return add_scaled(a, Scalar::one(a.field), b);
}

template <class Tag>
Graded<Tag> operator-(const Graded<Tag>& a, const Graded<Tag>& b) {
    return add_scaled(a, -Scalar::one(a.field), b);
}

template <class Tag>
Graded<Tag> scale(const Scalar& c, const Graded<Tag>& a) {
    Graded<Tag> r(a.degree, a.field);
    if (c.is_zero()) return r;
    r.terms.reserve(a.terms.size());
    for (const auto& [k, v] : a.terms) r.terms.emplace_back(k, c * v);
    return r;
}

template <class Tag>
Graded<Tag> negate(const Graded<Tag>& a) {
    return scale(-Scalar::one(a.field), a);
}

struct TateTag {};
struct DecompTag {};

// Element of the Tate-Hochschild complex D^m(kG,kG).
// m >= 0: key (g_1..g_m, v) is the cochain sending g_1..g_m to v, others to 0.
// m <= -1: key (g_0, g_1..g_s), s = -m-1.
using TateElement = Graded<TateTag>;

// Element of the sum over classes of the centralizer Tate complexes.
// Key (c, h_1..h_k) with c the class index and k = m (m >= 0) or -m-1 (m < 0).
using DecomposedElement = Graded<DecompTag>;

inline int tate_key_length(int degree) { return degree >= 0 ? degree + 1 : -degree; }
inline int tuple_length(int degree) { return degree >= 0 ? degree : -degree - 1; }

std::string describe(const TateElement& e);
std::string describe(const DecomposedElement& e);

}  // namespace tate
