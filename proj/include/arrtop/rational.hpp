#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "arrtop/matrix.hpp"

namespace arrtop {

using QVec = std::vector<mpq_class>;

// Rank over the rationals via fraction-free (Bareiss) elimination with full
// pivoting; no rational arithmetic, all divisions exact.
size_t rational_rank(const IntMatrix& A);

// Reduced row echelon over Q with an optional auxiliary block carried along
// under the same operations.  Pivoting is on the main coordinates only; rows
// keep unit pivots and are fully back-substituted, so reduction against the
// echelon is canonical.  This one structure serves spans, membership tests,
// kernels, and linear solves.
class RationalEchelon {
  public:
    explicit RationalEchelon(size_t main_dim, size_t aux_dim = 0)
        : main_dim_(main_dim), aux_dim_(aux_dim) {}

    // Eliminates every pivot coordinate of `main` (mirroring on `aux`).
    void reduce(QVec& main, QVec& aux) const;
    // Adds the vector to the span; false if it was already in the span
    // (the echelon is left unchanged in that case).
    bool insert(QVec main, QVec aux);
    bool insert(QVec main) { return insert(std::move(main), QVec(aux_dim_, 0)); }
    bool contains(QVec main) const;
    size_t rank() const { return rows_.size(); }
    size_t main_dim() const { return main_dim_; }

  private:
    struct Row {
        size_t pivot;
        QVec main, aux;
    };
    size_t main_dim_, aux_dim_;
    std::vector<Row> rows_;  // ascending pivot columns
};

// True iff v is a rational combination of the columns of S.
bool in_subspace(const QVec& v, const IntMatrix& S);

// Rational basis of (column space of A) / (column space of B): the columns
// of A that extend the span of B's columns, in column order.  Throws
// input_error("B not contained in A") when the containment precondition
// fails.
std::vector<QVec> rational_quotient_basis(const IntMatrix& A,
                                          const IntMatrix& B);

// A basis of the kernel of the linear map with the given columns (each of
// length `rows`): one vector per dependent column, unit coefficient there,
// earlier columns only otherwise.  Deterministic.
std::vector<QVec> kernel_basis(const std::vector<QVec>& columns, size_t rows);

// Solves M x = b for a fixed M and many right-hand sides; free variables are
// set to zero, so the solution is deterministic.  `reversed` feeds the
// columns in reverse order, selecting a different (still deterministic)
// solution — used to confirm choice-independence of downstream verdicts.
class LinearSolver {
  public:
    LinearSolver(const std::vector<QVec>& columns, size_t rows,
                 bool reversed = false);
    std::optional<QVec> solve(const QVec& b) const;

  private:
    size_t rows_, cols_;
    RationalEchelon echelon_;
};

// The unique positive integer multiple of v with coprime entries (v itself
// when zero): denominators cleared, common factor removed, sign fixed so the
// first nonzero entry is positive.
QVec primitive_integer_scaled(const QVec& v);

}  // namespace arrtop
