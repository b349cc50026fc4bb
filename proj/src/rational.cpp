#include "arrtop/rational.hpp"

#include <algorithm>

#include "arrtop/errors.hpp"

namespace arrtop {

size_t rational_rank(const IntMatrix& A) {
    auto M = A.dense();
    size_t limit = std::min(A.rows, A.cols);
    mpz_class prev = 1;
    size_t k = 0;
    for (; k < limit; ++k) {
        // Any nonzero pivot works; take the first in (row, col) order.
        size_t pi = k, pj = k;
        bool found = false;
        for (size_t i = k; i < A.rows && !found; ++i)
            for (size_t j = k; j < A.cols && !found; ++j)
                if (M[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        std::swap(M[k], M[pi]);
        if (pj != k)
            for (size_t i = 0; i < A.rows; ++i) std::swap(M[i][k], M[i][pj]);
        // Fraction-free update: entries stay k+1-minors of the (permuted)
        // input, so the division by the previous pivot is exact.
        for (size_t i = k + 1; i < A.rows; ++i) {
            for (size_t j = k + 1; j < A.cols; ++j) {
                mpz_class num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                mpz_divexact(M[i][j].get_mpz_t(), num.get_mpz_t(),
                             prev.get_mpz_t());
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return k;
}

void RationalEchelon::reduce(QVec& main, QVec& aux) const {
    for (const Row& row : rows_) {
        const mpq_class& coeff = main[row.pivot];
        if (coeff == 0) continue;
        mpq_class c = coeff;  // entry changes under the loop below
        for (size_t j = 0; j < main_dim_; ++j) main[j] -= c * row.main[j];
        for (size_t j = 0; j < aux_dim_; ++j) aux[j] -= c * row.aux[j];
    }
}

bool RationalEchelon::insert(QVec main, QVec aux) {
    if (main.size() != main_dim_ || aux.size() != aux_dim_)
        throw internal_error("echelon vector length mismatch");
    reduce(main, aux);
    size_t pivot = main_dim_;
    for (size_t j = 0; j < main_dim_; ++j)
        if (main[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot == main_dim_) return false;
    mpq_class lead = main[pivot];
    for (mpq_class& x : main) x /= lead;
    for (mpq_class& x : aux) x /= lead;
    // Back-substitute into the stored rows so reduction stays canonical.
    for (Row& row : rows_) {
        const mpq_class c = row.main[pivot];
        if (c == 0) continue;
        for (size_t j = 0; j < main_dim_; ++j) row.main[j] -= c * main[j];
        for (size_t j = 0; j < aux_dim_; ++j) row.aux[j] -= c * aux[j];
    }
    Row fresh{pivot, std::move(main), std::move(aux)};
    auto at = std::lower_bound(
        rows_.begin(), rows_.end(), fresh,
        [](const Row& a, const Row& b) { return a.pivot < b.pivot; });
    rows_.insert(at, std::move(fresh));
    return true;
}

bool RationalEchelon::contains(QVec main) const {
    QVec aux(aux_dim_, 0);
    reduce(main, aux);
    return std::all_of(main.begin(), main.end(),
                       [](const mpq_class& x) { return x == 0; });
}

namespace {

std::vector<QVec> matrix_columns(const IntMatrix& M) {
    std::vector<QVec> cols(M.cols, QVec(M.rows, 0));
    for (const auto& [rc, v] : M.entries) cols[rc.second][rc.first] = v;
    return cols;
}

}  // namespace

bool in_subspace(const QVec& v, const IntMatrix& S) {
    if (v.size() != S.rows)
        throw input_error("vector length does not match matrix rows");
    RationalEchelon span(S.rows);
    for (QVec& col : matrix_columns(S)) span.insert(std::move(col));
    return span.contains(v);
}

std::vector<QVec> rational_quotient_basis(const IntMatrix& A,
                                          const IntMatrix& B) {
    if (A.rows != B.rows)
        throw input_error("matrices live in different ambient spaces");
    RationalEchelon span_a(A.rows);
    std::vector<QVec> a_cols = matrix_columns(A);
    for (const QVec& col : a_cols) span_a.insert(QVec(col));
    for (QVec& col : matrix_columns(B))
        if (!span_a.contains(col)) throw input_error("B not contained in A");

    RationalEchelon accumulated(A.rows);
    for (QVec& col : matrix_columns(B)) accumulated.insert(std::move(col));
    std::vector<QVec> quotient;
    for (QVec& col : a_cols)
        if (accumulated.insert(QVec(col))) quotient.push_back(std::move(col));
    return quotient;
}

std::vector<QVec> kernel_basis(const std::vector<QVec>& columns, size_t rows) {
    RationalEchelon echelon(rows, columns.size());
    std::vector<QVec> kernel;
    for (size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != rows)
            throw internal_error("column length mismatch in kernel basis");
        QVec main = columns[j];
        QVec aux(columns.size(), 0);
        aux[j] = 1;
        // A dependent column's reduced auxiliary part is the relation:
        // unit coefficient at j, earlier columns otherwise.
        echelon.reduce(main, aux);
        bool zero = std::all_of(main.begin(), main.end(),
                                [](const mpq_class& x) { return x == 0; });
        if (zero)
            kernel.push_back(std::move(aux));
        else
            echelon.insert(std::move(main), std::move(aux));
    }
    return kernel;
}

LinearSolver::LinearSolver(const std::vector<QVec>& columns, size_t rows,
                           bool reversed)
    : rows_(rows), cols_(columns.size()), echelon_(rows, columns.size()) {
    for (size_t k = 0; k < columns.size(); ++k) {
        size_t j = reversed ? columns.size() - 1 - k : k;
        if (columns[j].size() != rows)
            throw internal_error("column length mismatch in solver");
        QVec aux(columns.size(), 0);
        aux[j] = 1;
        echelon_.insert(QVec(columns[j]), std::move(aux));
    }
}

std::optional<QVec> LinearSolver::solve(const QVec& b) const {
    if (b.size() != rows_)
        throw internal_error("right-hand side length mismatch");
    QVec main = b;
    QVec aux(cols_, 0);
    echelon_.reduce(main, aux);
    for (const mpq_class& x : main)
        if (x != 0) return std::nullopt;
    // main reduced to zero means b = sum_r c_r row_r with the row auxiliaries
    // recording column combinations; the accumulated aux is their negative.
    QVec x(cols_, 0);
    for (size_t j = 0; j < cols_; ++j) x[j] = -aux[j];
    return x;
}

QVec primitive_integer_scaled(const QVec& v) {
    mpz_class denom_lcm = 1;
    for (const mpq_class& x : v)
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
                x.get_den().get_mpz_t());
    mpz_class content = 0;
    for (const mpq_class& x : v) {
        mpz_class scaled = x.get_num() * (denom_lcm / x.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
                scaled.get_mpz_t());
    }
    if (content == 0) return v;  // zero vector
    QVec out(v.size(), 0);
    bool flip = false;
    bool seen_nonzero = false;
    for (size_t i = 0; i < v.size(); ++i) {
        mpz_class scaled = v[i].get_num() * (denom_lcm / v[i].get_den());
        mpz_class reduced = scaled / content;
        if (!seen_nonzero && reduced != 0) {
            seen_nonzero = true;
            flip = reduced < 0;
        }
        out[i] = flip ? mpq_class(-reduced) : mpq_class(reduced);
    }
    return out;
}

}  // namespace arrtop
