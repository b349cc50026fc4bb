#pragma once

#include <vector>

#include "arrtop/index_set.hpp"
#include "arrtop/monomial.hpp"

namespace arrtop {

// A coordinate subspace arrangement in C^n, given as the index sets of the
// vanishing coordinates of its members: the set S stands for
// V(x_i : i in S).  The empty index set stands for the whole ambient space.
struct Arrangement {
    int n = 0;
    std::vector<index_set> subspaces;
};

// Inclusion-minimal members of the family, deduplicated, in vertex-lex order.
std::vector<index_set> minimal_sets(const std::vector<index_set>& family);

// All inclusion-minimal transversals (hitting sets) of the family, in
// vertex-lex order.  The empty family has the single transversal {}; a family
// containing the empty set has none.  Throws input_error beyond `cap` results.
std::vector<index_set> minimal_transversals(const std::vector<index_set>& family,
                                            int n,
                                            size_t cap = size_t(1) << 20);

// The square-free monomial ideal whose variety is the union of the subspaces.
// Generators are the products over minimal transversals of the supports, in
// vertex-lex order.  Degenerate cases: the empty arrangement yields the zero
// ideal (its union is empty, the complement is everything); an arrangement
// containing the whole space yields the distinguished unit ideal (the
// complement is empty).
MonomialIdeal union_ideal(const Arrangement& arrangement);

// Inverse direction: the coordinate subspace arrangement whose union is the
// variety of the ideal.  Members are the minimal transversals of the
// generator supports (the irreducible components of the variety), so
// union_ideal(arrangement_of(I)) == I for minimally generated square-free I.
// The zero ideal maps to the empty arrangement, the unit ideal to the
// arrangement containing the whole space.
Arrangement arrangement_of(const MonomialIdeal& ideal);

}  // namespace arrtop
