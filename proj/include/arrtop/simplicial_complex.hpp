#pragma once

#include <vector>

#include "arrtop/index_set.hpp"
#include "arrtop/monomial.hpp"

namespace arrtop {

// An abstract simplicial complex on vertex set {1..n}, stored by its facets
// (maximal faces).  Every complex here is non-void: the empty face is always
// a member, so the minimal representable complex is { {} }, the empty complex
// with no vertices.  Facets are kept sorted by (size, bit value) so equal
// complexes compare equal structurally.
struct SimplicialComplex {
    int n = 0;
    std::vector<index_set> facets;  // antichain, sorted by size_value_less

    static SimplicialComplex full_simplex(int n);
    static SimplicialComplex empty_complex(int n);
    // Maximalizes an arbitrary face list (the empty complex if none given).
    static SimplicialComplex from_facets(int n, std::vector<index_set> faces);

    bool is_face(index_set f) const;
    // Dimension of the complex; the empty complex has dimension -1.
    int dim() const;
    // All faces including the empty face, sorted by (size, bit value).
    // Throws input_error if the count would exceed `cap`.
    std::vector<index_set> all_faces(size_t cap = size_t(1) << 24) const;
    // The full subcomplex on vertex set J: faces of K contained in J.
    SimplicialComplex full_subcomplex(index_set J) const;
    // Inclusion-minimal non-faces, sorted by (size, bit value).  Requires
    // n <= 20 (the scan is exponential in n).
    std::vector<index_set> minimal_non_faces() const;

    bool operator==(const SimplicialComplex& other) const {
        return n == other.n && facets == other.facets;
    }
};

// The simplicial complex whose minimal non-faces are the supports of the
// ideal's generators.  Requires a square-free ideal; the unit ideal is
// rejected (its complex would need the empty face to be a non-face).
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal);

// The square-free monomial ideal generated by the minimal non-faces of K.
// The full simplex yields the zero ideal.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& K);

}  // namespace arrtop
