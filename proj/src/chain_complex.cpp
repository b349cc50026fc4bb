#include "arrtop/chain_complex.hpp"

#include <algorithm>

#include "arrtop/errors.hpp"
#include "arrtop/smith.hpp"

namespace arrtop {

void ChainComplex::verify_square_zero() const {
    if (boundaries.size() != dims.size())
        throw internal_error("boundary count does not match slot count");
    for (size_t i = 1; i < slots(); ++i) {
        if (!boundaries[i - 1].times(boundaries[i]).is_zero())
            throw internal_error(
                "boundary composite nonzero out of degree " +
                std::to_string(degree_of_slot(i)));
    }
}

GradedAbelianGroup ChainComplex::homology() const {
    std::vector<SmithForm> forms;
    forms.reserve(slots());
    for (const IntMatrix& b : boundaries)
        forms.push_back(smith_normal_form(b));

    GradedAbelianGroup H;
    for (size_t i = 0; i < slots(); ++i) {
        size_t rank_out = forms[i].rank();
        size_t rank_in = i + 1 < slots() ? forms[i + 1].rank() : 0;
        long betti = static_cast<long>(dims[i]) - static_cast<long>(rank_out) -
                     static_cast<long>(rank_in);
        if (betti < 0)
            throw internal_error("negative homology rank in degree " +
                                 std::to_string(degree_of_slot(i)));
        H.add_rank(degree_of_slot(i), betti);
        // The chain group modulo the cycles is free, so the invariant
        // factors of the incoming boundary are exactly the torsion orders.
        if (i + 1 < slots())
            H.add_torsion(degree_of_slot(i), forms[i + 1].torsion());
    }
    return H;
}

namespace {

// Rank of the matrix over F_p by plain Gaussian elimination.
size_t rank_mod_p(const IntMatrix& A, unsigned long p) {
    std::vector<std::vector<unsigned long>> M(
        A.rows, std::vector<unsigned long>(A.cols, 0));
    for (const auto& [rc, v] : A.entries) {
        mpz_class r = v % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        M[rc.first][rc.second] = r.get_ui();
    }
    auto mulmod = [p](unsigned long a, unsigned long b) {
        return static_cast<unsigned long>(
            (static_cast<unsigned __int128>(a) * b) % p);
    };
    auto powmod = [&](unsigned long a, unsigned long e) {
        unsigned long r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    size_t rank = 0;
    for (size_t col = 0; col < A.cols && rank < A.rows; ++col) {
        size_t pivot = rank;
        while (pivot < A.rows && M[pivot][col] == 0) ++pivot;
        if (pivot == A.rows) continue;
        std::swap(M[rank], M[pivot]);
        unsigned long inv = powmod(M[rank][col], p - 2);
        for (size_t j = col; j < A.cols; ++j) M[rank][j] = mulmod(M[rank][j], inv);
        for (size_t i = 0; i < A.rows; ++i) {
            if (i == rank || M[i][col] == 0) continue;
            unsigned long c = M[i][col];
            for (size_t j = col; j < A.cols; ++j) {
                unsigned long sub = mulmod(c, M[rank][j]);
                M[i][j] = (M[i][j] + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::map<int, long> ChainComplex::homology_ranks_mod_p(unsigned long p) const {
    std::map<int, long> out;
    std::vector<size_t> ranks;
    ranks.reserve(slots());
    for (const IntMatrix& b : boundaries) ranks.push_back(rank_mod_p(b, p));
    for (size_t i = 0; i < slots(); ++i) {
        size_t rank_in = i + 1 < slots() ? ranks[i + 1] : 0;
        long betti = static_cast<long>(dims[i]) - static_cast<long>(ranks[i]) -
                     static_cast<long>(rank_in);
        if (betti != 0) out[degree_of_slot(i)] = betti;
    }
    return out;
}

ChainComplex simplicial_chain_complex(const SimplicialComplex& K,
                                      bool reduced) {
    std::vector<index_set> faces = K.all_faces();
    int max_size = K.dim() + 1;
    int min_size = reduced ? 0 : 1;

    ChainComplex C;
    C.lowest_degree = min_size - 1;
    if (max_size < min_size) return C;  // unreduced complex of the empty complex

    // faces are sorted by (size, value); slice them into size classes.
    std::vector<std::vector<index_set>> by_size(
        static_cast<size_t>(max_size) + 1);
    for (index_set f : faces) by_size[static_cast<size_t>(set_size(f))].push_back(f);

    size_t slot_count = static_cast<size_t>(max_size - min_size) + 1;
    C.dims.resize(slot_count);
    C.labels.resize(slot_count);
    C.boundaries.resize(slot_count);
    for (size_t i = 0; i < slot_count; ++i) {
        const auto& slice = by_size[i + static_cast<size_t>(min_size)];
        C.dims[i] = slice.size();
        for (index_set f : slice) C.labels[i].push_back(set_to_string(f));
    }

    for (size_t i = 0; i < slot_count; ++i) {
        size_t k = i + static_cast<size_t>(min_size);  // face size in slot i
        if (i == 0) {
            C.boundaries[0] = IntMatrix(0, C.dims[0]);
            continue;
        }
        const auto& source = by_size[k];
        const auto& target = by_size[k - 1];
        IntMatrix b(target.size(), source.size());
        for (size_t col = 0; col < source.size(); ++col) {
            std::vector<int> verts = vertices_of(source[col]);
            for (size_t pos = 0; pos < verts.size(); ++pos) {
                index_set sub = without_vertex(source[col], verts[pos]);
                auto at = std::lower_bound(target.begin(), target.end(), sub);
                size_t row = static_cast<size_t>(at - target.begin());
                b.set(row, col, pos % 2 == 0 ? 1 : -1);
            }
        }
        C.boundaries[i] = std::move(b);
    }
    return C;
}

GradedAbelianGroup reduced_homology(const SimplicialComplex& K) {
    ChainComplex C = simplicial_chain_complex(K, true);
    C.verify_square_zero();
    return C.homology();
}

}  // namespace arrtop
