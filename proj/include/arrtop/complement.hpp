#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/graded_group.hpp"
#include "arrtop/monomial.hpp"
#include "arrtop/simplicial_complex.hpp"

namespace arrtop {

enum class TriState { certified_true, certified_false, unknown };
std::string to_string(TriState t);

// The simplicial complex whose minimal non-faces are the irreducible
// components of V(ideal) — the combinatorial model of the complement that
// Hochster's sum, the moment-angle oracle, and the cochain model all share.
// Facets are the complements of the generator supports; the zero ideal gives
// the full simplex.  Rejects the unit ideal (empty complement).
SimplicialComplex complement_model_complex(const MonomialIdeal& ideal);

// H_*(complement of V(ideal); Z) by the subset-sum formula:
// H_l = (+)_{J subset of {1..n}} reduced H_{l-|J|-1} of K restricted to J,
// over all 2^n subsets including the empty one.  Contributions merge in
// ascending J order; `threads` splits the subset range into contiguous
// chunks, which cannot change the result.  Refuses n > 20 (no pruning
// certificate at that size).  An internal double-count compares the Euler
// characteristic against face counts.
GradedAbelianGroup hochster_homology(const MonomialIdeal& ideal,
                                     int threads = 1);

// Betti numbers of the complement of the arrangement via the intersection
// poset: reduced cohomology rank in degree i collects reduced H_{2|x|-2-i}
// of the order complex of (bottom, x) over all poset elements x above the
// bottom, and b_0 is then incremented back to the unreduced count.
// Requires a nonempty arrangement of proper subspaces.
std::vector<long> goresky_macpherson_betti(const Arrangement& arrangement);

// Simple connectivity of the complement from codimensions alone:
// certified-true when every subspace has complex codimension >= 2 (also for
// the empty arrangement: the complement is contractible), certified-false
// when some subspace is a hyperplane, unknown otherwise (degenerate
// members).  Never guesses from Betti numbers.
TriState simply_connected_codim_check(const Arrangement& arrangement);

// The necessary condition for a circle factor: b_k = c_k + c_{k-1} for a
// non-negative integer vector c.  The candidate is forced (c_k = b_k -
// c_{k-1}); it is returned iff it stays non-negative and ends at zero.
std::optional<std::vector<long>> circle_factor_test(
    const std::vector<long>& betti);

struct FormulaSelection {
    bool hochster = true;
    bool gm = false;
    bool oracle = false;
};

struct ComplementReport {
    MonomialIdeal ideal;
    Arrangement arrangement;
    GradedAbelianGroup homology;  // ranks only when just the poset route ran
    std::vector<long> betti;
    std::vector<std::string> methods;  // which routes produced/checked this
    TriState simply_connected = TriState::unknown;
    std::optional<std::vector<long>> circle_factor;
    std::vector<std::string> notices;  // e.g. a skipped route, with reason
};

// Runs the selected routes, cross-checks them (throwing verification_error
// with a diff when they disagree), and enforces the structural sanity
// checks: connectedness in degree 0, the codimension/b_1 consistency, and
// the degree envelope 2n - (minimum support size).
ComplementReport complement_report(
    const MonomialIdeal& ideal,
    const std::optional<Arrangement>& given_arrangement, FormulaSelection sel,
    int threads = 1);

}  // namespace arrtop
