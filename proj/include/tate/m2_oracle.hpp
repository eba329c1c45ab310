#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "tate/element.hpp"

namespace tate {

// m2 on the decomposed complex written out case by case, directly from the
// coset rewriting, without going through iota, cup and rho.
class M2Oracle {
public:
    M2Oracle(const ConjugacyData& cd, Field f);

    // 1..6 from the degrees: (+,+), (-,-), (+,-) with n+t' < 0 or >= 0, (-,+) with m+s' < 0 or >= 0.
    static int which_case(int da, int db);

    // m2 of two basis elements given by keys (class, tuple).
    DecomposedElement operator()(int da, Key a, int db, Key b);

    // Conjugator searches: how many u = Phi^-1 z Phi had two distinct Phi tried,
    // and how many of those gave different cosets.
    long conjugator_checks() const { return conj_checked_; }
    long conjugator_mismatches() const { return conj_mismatch_; }

private:
    struct Match {
        Word tuple;
        int index;
        Elt product;
    };

    DecomposedElement case1(int cx, const Word& T, int cy, const Word& U);
    DecomposedElement case2(int cx, const Word& g, int cy, const Word& h);
    DecomposedElement case3(int cx, const Word& T, int cy, const Word& h);
    DecomposedElement case4(int cx, const Word& T, int cy, const Word& h);
    DecomposedElement case5(int cx, const Word& g, int cy, const Word& U);
    DecomposedElement case6(int cx, const Word& g, int cy, const Word& U);

    // Coset index of Phi * post over conjugators Phi with Phi^-1 z Phi = u.
    int conjugator_coset(int cz, Elt u, Elt post);
    // P in (C_G(z) - 1)^len, i with spade_{x,i}(P) = T, grouped by T.
    const std::map<Key, std::vector<Match>>& matches(int cx, int cz, int len);

    const ConjugacyData& cd_;
    Field field_;
    std::map<std::tuple<int, int, int>, std::map<Key, std::vector<Match>>> cache_;
    long conj_checked_ = 0;
    long conj_mismatch_ = 0;
};

}  // namespace tate
