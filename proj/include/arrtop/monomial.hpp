#pragma once

#include <map>
#include <string>
#include <vector>

#include "arrtop/index_set.hpp"

namespace arrtop {

// A monomial in x_1..x_n. Zero exponents are never stored, so `exponents`
// ranges over the support only. The constant monomial 1 has empty support.
struct Monomial {
    int n = 0;
    std::map<int, int> exponents;  // variable index (1-based) -> exponent >= 1

    static Monomial one(int n);
    static Monomial squarefree(index_set support, int n);
    static Monomial from_exponents(int n, const std::map<int, int>& exps);

    index_set support() const;
    bool is_one() const { return exponents.empty(); }
    bool is_squarefree() const;
    bool divides(const Monomial& other) const;
    long total_degree() const;
    // Weighted degree under positive integer weights w[i-1] for x_i.
    long weighted_degree(const std::vector<long>& x_weights) const;

    // "x1*x3^2*x5"; the constant monomial prints as "1".
    std::string to_string() const;

    bool operator==(const Monomial& other) const {
        return n == other.n && exponents == other.exponents;
    }
};

// Lexicographic on the (variable, exponent) pair sequences; gives the
// deterministic generator order used in output.
bool lex_less(const Monomial& a, const Monomial& b);

// A monomial ideal held by an inclusion-minimal generating set.
//
// Two degenerate shapes are distinguished:
//   - the zero ideal: no generators, `unit` false.  In this toolkit it encodes
//     the empty arrangement (complement = everything).
//   - the unit ideal: `unit` true.  It encodes an arrangement containing the
//     whole ambient space, whose complement is empty; invariant computations
//     reject it.
struct MonomialIdeal {
    int n = 0;
    std::vector<Monomial> generators;  // pairwise non-divisible, input order preserved
    bool unit = false;

    static MonomialIdeal zero(int n);
    static MonomialIdeal unit_ideal(int n);

    bool is_zero() const { return !unit && generators.empty(); }
    bool is_unit() const { return unit; }
    bool is_squarefree() const;
    std::vector<index_set> supports() const;
    std::string to_string() const;  // "(x1*x3, x2*x4)"
};

// Drops duplicates and any generator divisible by another; keeps the input
// order of the survivors. The empty input yields the zero ideal.
MonomialIdeal minimal_generators(const std::vector<Monomial>& gens);

}  // namespace arrtop
