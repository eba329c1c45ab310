#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <vector>

#include "tate/abelian.hpp"
#include "tate/transfer.hpp"

namespace tate {

struct CheckOptions {
    Field field;
    int lo = -3;
    int hi = 3;
    std::uint64_t seed = 1;
    // seeded samples for the levels that are not run exhaustively
    int samples = 200;
    // a Stasheff level runs exhaustively only if it has at most this many basis tuples
    long exhaustive_limit = 2'000'000;
};

struct IdentityResult {
    std::string name;
    long checked = 0;
    long failures = 0;
    std::string witness;  // first failure
    // a negative control passes when it detects at least one failure
    bool expect_failure = false;

    bool pass() const { return expect_failure ? failures > 0 : failures == 0 && checked > 0; }
    void fail(const std::string& w) {
        if (failures++ == 0) witness = w;
    }
};

struct Report {
    std::string check;
    std::string group;
    std::string field;
    int lo = 0, hi = 0;
    std::uint64_t seed = 0;
    int samples = 0;
    double seconds = 0;
    // deque so references from add() stay valid
    std::deque<IdentityResult> identities;

    bool pass() const;
    IdentityResult& add(const std::string& name, bool expect_failure = false);
};

using TateDiff = std::function<TateElement(const FiniteGroup&, const TateElement&)>;

// dprime^2 = 0 and decomposed_diff^2 = 0 on every basis element with degree in the window.
// A replacement differential can be passed for negative controls.
Report check_complex(const FiniteGroup& G, const CheckOptions& opt, const TateDiff& diff = nullptr);

// rho iota = id, id - iota rho = ds + sd, s^2 = 0, s iota = 0, rho s = 0, and both chain-map identities.
Report check_retract(const FiniteGroup& G, const CheckOptions& opt);

// dprime(a cup b) = dprime(a) cup b + (-1)^{|a|} a cup dprime(b) on basis pairs.
Report check_leibniz(const FiniteGroup& G, const CheckOptions& opt);

// Engine m2 against the six case formulas on all basis pairs of the decomposed complex.
Report check_m2_theorem(const FiniteGroup& G, const CheckOptions& opt);

// Stasheff relations at levels 1..max_level. Levels <= exhaustive_up_to run over every
// basis tuple in the window, the rest on opt.samples seeded random basis tuples.
Report check_stasheff_dstar(const FiniteGroup& G, const CheckOptions& opt, int max_level, int exhaustive_up_to,
                            M3Sign sign = M3Sign::corrected);
Report check_stasheff_transferred(const FiniteGroup& G, const CheckOptions& opt, int max_level, int exhaustive_up_to,
                                  const SignPolicy& policy = nullptr, const std::string& policy_name = "bar");

// Runs the D* Stasheff check with the uncorrected m3 sign; passes when that fails somewhere.
Report check_sign_regression(const FiniteGroup& G, const CheckOptions& opt);

// Abelian groups: s = 0, m4 = 0, closed forms against the engine, tau(1) = |G|, closed m1^2 = 0.
Report check_abelian(const FiniteGroup& G, const CheckOptions& opt);

// eval_tree against the chain of local operations on all trees with up to 4 leaves,
// and the range-memoized m_n against the per-tree sum.
Report check_composites(const FiniteGroup& G, const CheckOptions& opt);

// Tree counts and the three trees with three leaves.
Report check_trees();

std::vector<std::string> check_names();
// name is one of check_names() or "all"
std::vector<Report> run_checks(const std::string& name, const FiniteGroup& G, const CheckOptions& opt);

}  // namespace tate
