#pragma once

#include <vector>

#include "arrtop/arrangement.hpp"
#include "arrtop/index_set.hpp"
#include "arrtop/simplicial_complex.hpp"

namespace arrtop {

// The intersection poset of a coordinate subspace arrangement, ordered by
// inclusion of vanishing-coordinate sets (= reverse inclusion of subspaces).
// elements[0] is the bottom 0-hat (the empty set: the ambient space); the
// rest are the distinct unions of nonempty subfamilies of the members.
struct IntersectionPoset {
    int n = 0;
    std::vector<index_set> elements;              // sorted by size_value_less
    std::vector<std::vector<size_t>> upper_covers;  // indices into elements

    size_t index_of(index_set e) const;  // throws input_error if absent
    bool contains(index_set e) const;
    static int codim(index_set e) { return set_size(e); }
    static int real_codim(index_set e) { return 2 * set_size(e); }
};

IntersectionPoset intersection_poset(const Arrangement& arrangement);

// The order complex of the open interval (0-hat, x): vertices are the poset
// elements strictly between, numbered 1..m in (size, value) order; faces are
// the chains.  x must be a non-bottom element of the poset.
SimplicialComplex order_complex(const IntersectionPoset& poset, index_set x);

}  // namespace arrtop
