#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrtop/index_set.hpp"
#include "arrtop/rational.hpp"
#include "arrtop/simplicial_complex.hpp"

namespace arrtop {

// One generator u_J v_sigma of the cochain model: an exterior word over the
// degree-1 letters u_i (indices J) times a square-free word over the
// degree-2 letters v_i (indices sigma, a face of K), with J and sigma
// disjoint.  Cohomological degree |J| + 2|sigma|.
struct KoszulBasisElement {
    index_set J = 0;
    index_set sigma = 0;
    int degree = 0;
    std::string label;
};

// The finite cochain algebra modelling the complement's cohomology:
// exterior algebra on the u_i tensored with the face ring of K, modulo
// u_i v_i = v_i v_i = 0.  The differential sends a u-letter to the matching
// v-letter when the enlarged sigma is still a face:
//   d(u_J v_sigma) = sum over the i-th member j of J (ascending) of
//                    (-1)^(i-1) u_(J minus j) v_(sigma plus j),
// and the product of two generators is +-u_(union) v_(union) when all four
// index sets are pairwise disjoint and the united sigma is a face (sign:
// parity of the u-letter inversions), else zero.  Construction verifies
// square-zero, the graded Leibniz rule on all basis pairs, and associativity
// on all basis triples; any failure is an internal error.
class KoszulModel {
  public:
    static KoszulModel build(const SimplicialComplex& K,
                             size_t basis_cap = 2048);

    int n() const { return complex_.n; }
    const SimplicialComplex& complex() const { return complex_; }
    size_t basis_size() const { return basis_.size(); }
    const KoszulBasisElement& element(size_t index) const {
        return basis_[index];
    }
    int top_degree() const;
    size_t slice_dim(int degree) const;
    // Global basis indices of the degree slice, ascending (the basis is
    // sorted by degree, then J, then sigma).
    const std::vector<size_t>& slice(int degree) const;

    // The differential on a degree slice, one column per slice member,
    // columns of length slice_dim(degree + 1).
    std::vector<QVec> differential_columns(int degree) const;
    QVec apply_d(int degree, const QVec& v) const;
    // Product of slice vectors; the result lives in degree deg_a + deg_b.
    QVec multiply(int deg_a, const QVec& a, int deg_b, const QVec& b) const;

    // "u{1}v{2} - 2 u{3}" (slice vector in the slice's basis order).
    std::string describe(int degree, const QVec& v) const;

  private:
    KoszulModel() = default;
    void verify_structure() const;

    struct ProductEntry {
        int32_t target = -1;  // -1 when the product is zero
        int8_t coeff = 0;
    };
    const ProductEntry& product_entry(size_t a, size_t b) const {
        return products_[a * basis_.size() + b];
    }

    SimplicialComplex complex_;
    std::vector<KoszulBasisElement> basis_;
    std::vector<std::vector<std::pair<size_t, int>>> differential_;
    std::vector<ProductEntry> products_;
    std::vector<std::vector<size_t>> slices_;      // per degree
    std::vector<size_t> position_in_slice_;        // global index -> slice pos
    std::vector<size_t> empty_slice_;
};

// Deterministic basis of H^degree over Q: kernel vectors of d that extend
// the image of the previous differential, in basis order.  Vectors are in
// the degree slice's coordinates.
std::vector<QVec> cohomology_classes(const KoszulModel& model, int degree);

struct MasseyResult {
    int p = 0, q = 0, r = 0;      // degrees of a, b, c
    QVec a, b, c;                 // the input cocycles (slice coordinates)
    QVec x, y;                    // dx = -(a b), dy = -(b c)
    QVec representative;          // a y + (-1)^(p+1) x c, degree p+q+r-1
    std::vector<QVec> indeterminacy;  // cocycles spanning a H + H c mod im d
    size_t indeterminacy_dim = 0;
    bool trivial = true;
};

// The triple product <a,b,c>.  Inputs must be cocycles with a b and b c
// coboundaries (error "product obstruction nonzero" otherwise).  The
// verdict — representative inside the span of the indeterminacy cocycles
// and the coboundaries or not — does not depend on the solve choices;
// `reversed_solve` picks a different deterministic solution to prove it.
MasseyResult massey_triple(const KoszulModel& model, int p, const QVec& a,
                           int q, const QVec& b, int r, const QVec& c,
                           bool reversed_solve = false);

struct FormalityWitness {
    int degrees[3];
    size_t class_indices[3];  // positions within cohomology_classes output
    MasseyResult massey;
};

struct FormalityReport {
    std::optional<FormalityWitness> witness;
    size_t triples_checked = 0;   // triples where the product condition held
    size_t triples_scanned = 0;   // all enumerated triples
    int degree_cap = 0;
};

// Scans ordered triples of positive-degree cohomology basis classes, total
// degree ascending (then by class position), for a nontrivial triple
// product; stops at the first witness.  A negative result means only "no
// obstruction found at triple level" — never a formality proof.  The cap
// bounds the total degree p+q+r of the scanned triples.  Work splits
// across threads by the first class index; the reported witness and counts
// are those of the sequential enumeration regardless of thread count.
FormalityReport formality_probe(const KoszulModel& model,
                                std::optional<int> total_degree_cap = {},
                                int threads = 1);

}  // namespace arrtop
