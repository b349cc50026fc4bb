#include "arrtop/smith.hpp"

#include "arrtop/errors.hpp"

namespace arrtop {

std::vector<mpz_class> SmithForm::torsion() const {
    std::vector<mpz_class> out;
    for (const mpz_class& d : factors)
        if (d > 1) out.push_back(d);
    return out;
}

bool SmithForm::verify(const IntMatrix& A) const {
    if (!U || !V) throw internal_error("verify needs stored transforms");
    IntMatrix D(A.rows, A.cols);
    for (size_t i = 0; i < factors.size(); ++i) D.set(i, i, factors[i]);
    return U->times(A).times(*V) == D;
}

namespace {

using Dense = std::vector<std::vector<mpz_class>>;

Dense dense_identity(size_t n) {
    Dense m(n, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix from_dense(Dense&& d, size_t rows, size_t cols) {
    IntMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (d[i][j] != 0) m.entries[{i, j}] = std::move(d[i][j]);
    return m;
}

// Elementary operations applied to the working matrix and mirrored into the
// transforms: row ops accumulate into U (left), column ops into V (right).
struct Elimination {
    Dense M;
    Dense U, V;
    bool track;
    size_t rows, cols;

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        std::swap(M[a], M[b]);
        if (track) std::swap(U[a], U[b]);
    }
    void swap_cols(size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < rows; ++i) std::swap(M[i][a], M[i][b]);
        if (track)
            for (size_t i = 0; i < cols; ++i) std::swap(V[i][a], V[i][b]);
    }
    void negate_row(size_t a) {
        for (size_t j = 0; j < cols; ++j) M[a][j] = -M[a][j];
        if (track)
            for (size_t j = 0; j < rows; ++j) U[a][j] = -U[a][j];
    }
    // row a += q * row b
    void row_add(size_t a, size_t b, const mpz_class& q) {
        for (size_t j = 0; j < cols; ++j) M[a][j] += q * M[b][j];
        if (track)
            for (size_t j = 0; j < rows; ++j) U[a][j] += q * U[b][j];
    }
    // col a += q * col b
    void col_add(size_t a, size_t b, const mpz_class& q) {
        for (size_t i = 0; i < rows; ++i) M[i][a] += q * M[i][b];
        if (track)
            for (size_t i = 0; i < cols; ++i) V[i][a] += q * V[i][b];
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A, bool want_transforms) {
    Elimination e;
    e.M = A.dense();
    e.rows = A.rows;
    e.cols = A.cols;
    e.track = want_transforms;
    if (want_transforms) {
        e.U = dense_identity(A.rows);
        e.V = dense_identity(A.cols);
    }

    size_t limit = std::min(A.rows, A.cols);
    size_t t = 0;
    for (; t < limit; ++t) {
        // Pivot: minimal absolute value among nonzero entries of the
        // remaining submatrix, first (row, col) on ties.  The lex-order scan
        // with strict comparison realizes the tie-break.
        size_t pi = t, pj = t;
        bool found = false;
        for (size_t i = t; i < A.rows; ++i) {
            for (size_t j = t; j < A.cols; ++j) {
                if (e.M[i][j] == 0) continue;
                if (!found || mpz_cmpabs(e.M[i][j].get_mpz_t(),
                                         e.M[pi][pj].get_mpz_t()) < 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        }
        if (!found) break;
        e.swap_rows(t, pi);
        e.swap_cols(t, pj);

        while (true) {
            if (e.M[t][t] < 0) e.negate_row(t);
            // Clear column t, then row t.  A nonzero remainder is strictly
            // smaller than the pivot; swapping it in and restarting makes
            // the pivot shrink, so this terminates.
            bool restart = false;
            for (size_t i = t + 1; i < A.rows && !restart; ++i) {
                if (e.M[i][t] == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), e.M[i][t].get_mpz_t(),
                           e.M[t][t].get_mpz_t());
                e.row_add(i, t, -q);
                if (e.M[i][t] != 0) {
                    e.swap_rows(t, i);
                    restart = true;
                }
            }
            if (restart) continue;
            for (size_t j = t + 1; j < A.cols && !restart; ++j) {
                if (e.M[t][j] == 0) continue;
                mpz_class q;
                mpz_tdiv_q(q.get_mpz_t(), e.M[t][j].get_mpz_t(),
                           e.M[t][t].get_mpz_t());
                e.col_add(j, t, -q);
                if (e.M[t][j] != 0) {
                    e.swap_cols(t, j);
                    restart = true;
                }
            }
            if (restart) continue;

            // The pivot must divide everything that remains, or the final
            // diagonal would break the divisibility chain.  Merging the
            // offending row into row t lets the next clearing round replace
            // the pivot by a proper divisor.
            bool fixed_up = false;
            for (size_t i = t + 1; i < A.rows && !fixed_up; ++i) {
                for (size_t j = t + 1; j < A.cols && !fixed_up; ++j) {
                    if (e.M[i][j] % e.M[t][t] != 0) {
                        e.row_add(t, i, 1);
                        fixed_up = true;
                    }
                }
            }
            if (!fixed_up) break;
        }
    }

    SmithForm form;
    for (size_t i = 0; i < t; ++i) form.factors.push_back(e.M[i][i]);
    if (want_transforms) {
        form.U = from_dense(std::move(e.U), A.rows, A.rows);
        form.V = from_dense(std::move(e.V), A.cols, A.cols);
    }
    return form;
}

}  // namespace arrtop
