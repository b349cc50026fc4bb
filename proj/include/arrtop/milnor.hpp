#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrtop/complement.hpp"
#include "arrtop/koszul.hpp"
#include "arrtop/monomial.hpp"

namespace arrtop {

// One y_i * f_i summand of the associated polynomial.  The generator f_i is
// kept as text so the emitter also works for generators that are not
// monomials; the parenthesized flag marks factors that need brackets.
struct PolynomialTerm {
    int y_index = 0;     // 1-based, pairs with the i-th generator
    std::string factor;  // printable f_i, e.g. "x1*x3*x5"
    std::string to_text() const;
};

// f = y1*f1 + ... + yr*fr, a function of x1..xn, y1..yr.  Its global Milnor
// fibre has the homotopy type of the complement of the union of the
// varieties V(f_i) — here the coordinate subspace arrangement of the ideal —
// with trivial geometric monodromy; the fibration statement is the contract
// this emitter serves, and the linearity in every y_i is what makes it work.
struct PolynomialExpr {
    int x_count = 0;
    int y_count = 0;
    std::vector<PolynomialTerm> terms;

    int variable_count() const { return x_count + y_count; }
    std::string to_text() const;  // "y1*x1*x3*x4*x6 + y2*x1*x3*x5"
};

// The polynomial for a monomial ideal's generator list, in input order.
// Needs at least one generator.
PolynomialExpr milnor_polynomial(const MonomialIdeal& ideal);
// Same emission for arbitrary generator strings (no monomial structure
// assumed); strings containing '+' or '-' are parenthesized.
PolynomialExpr milnor_polynomial(const std::vector<std::string>& generators,
                                 int n);

// Positive integer weights making every term of f weigh exactly
// total_degree: w(y_i) = total_degree - weighted degree of f_i.
struct WeightSystem {
    std::vector<long> x_weights;
    std::vector<long> y_weights;
    long total_degree = 0;
};

// Derives the weight system for the given x-weights.  The default total
// degree is the largest weighted generator degree plus one — the smallest
// choice keeping every y-weight positive; an explicit total degree must
// also exceed the largest generator degree.  Every term is re-checked
// symbolically against the total degree.
WeightSystem quasi_homogeneous_weights(const MonomialIdeal& ideal,
                                       const std::vector<long>& x_weights,
                                       std::optional<long> total_degree = {});

struct MilnorReport {
    PolynomialExpr polynomial;
    WeightSystem weights;
    ComplementReport complement;    // the Milnor fibre's homotopy type
    bool monodromy_trivial = true;  // contract of the fibration statement
    // "not computed" | "non-formality certified" |
    // "no obstruction found at triple level"
    std::string formality_verdict;
    std::optional<FormalityReport> formality;
};

// The full fibre report: polynomial, weight system (unit x-weights unless
// given), the complement invariants as the fibre's homology, and — only on
// request, since the triple-product scan dwarfs everything else — the
// formality probe.
MilnorReport milnor_report(const MonomialIdeal& ideal,
                           const std::vector<long>& x_weights = {},
                           std::optional<long> total_degree = {},
                           bool run_formality_probe = false,
                           std::optional<int> probe_degree_cap = {},
                           int threads = 1);

}  // namespace arrtop
