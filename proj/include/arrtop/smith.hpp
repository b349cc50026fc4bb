#pragma once

#include <optional>
#include <vector>

#include "arrtop/matrix.hpp"

namespace arrtop {

// Smith normal form U*A*V = D with D diagonal, positive invariant factors
// forming a divisibility chain, and U, V unimodular when requested.
struct SmithForm {
    std::vector<mpz_class> factors;  // d_1 | d_2 | ... | d_k, all >= 1
    std::optional<IntMatrix> U;      // rows x rows
    std::optional<IntMatrix> V;      // cols x cols

    size_t rank() const { return factors.size(); }
    std::vector<mpz_class> torsion() const;  // factors > 1
    // Recomputes U*A*V and compares against the diagonal; requires transforms.
    bool verify(const IntMatrix& A) const;
};

SmithForm smith_normal_form(const IntMatrix& A, bool want_transforms = false);

}  // namespace arrtop
