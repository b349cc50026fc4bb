#include "arrtop/simplicial_complex.hpp"

#include <algorithm>

#include "arrtop/arrangement.hpp"
#include "arrtop/errors.hpp"

namespace arrtop {

SimplicialComplex SimplicialComplex::full_simplex(int n) {
    check_vertex_count(n);
    SimplicialComplex K;
    K.n = n;
    K.facets.push_back(full_set(n));
    return K;
}

SimplicialComplex SimplicialComplex::empty_complex(int n) {
    check_vertex_count(n);
    SimplicialComplex K;
    K.n = n;
    K.facets.push_back(0);
    return K;
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<index_set> faces) {
    check_vertex_count(n);
    SimplicialComplex K;
    K.n = n;
    for (index_set f : faces)
        if (!subset_of(f, full_set(n)))
            throw input_error("face exceeds vertex range");
    if (faces.empty()) faces.push_back(0);
    // Keep the inclusion-maximal faces only.
    for (size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < faces.size() && !dominated; ++j) {
            if (i == j) continue;
            if (faces[j] == faces[i])
                dominated = j < i;
            else if (subset_of(faces[i], faces[j]))
                dominated = true;
        }
        if (!dominated) K.facets.push_back(faces[i]);
    }
    std::sort(K.facets.begin(), K.facets.end(), size_value_less);
    return K;
}

bool SimplicialComplex::is_face(index_set f) const {
    for (index_set facet : facets)
        if (subset_of(f, facet)) return true;
    return false;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (index_set facet : facets)
        d = std::max(d, set_size(facet) - 1);
    return d;
}

std::vector<index_set> SimplicialComplex::all_faces(size_t cap) const {
    std::vector<index_set> out;
    // Enumerate subsets of each facet; dedup at the end.  Fine at desk scale
    // (facet sizes stay small); the cap guards against misuse.
    for (index_set facet : facets) {
        if (set_size(facet) > 40)
            throw input_error("face enumeration too large");
        index_set sub = facet;
        while (true) {
            out.push_back(sub);
            if (out.size() > 4 * cap)
                throw input_error("face enumeration exceeds cap");
            if (sub == 0) break;
            sub = (sub - 1) & facet;
        }
    }
    std::sort(out.begin(), out.end(), size_value_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() > cap) throw input_error("face enumeration exceeds cap");
    return out;
}

SimplicialComplex SimplicialComplex::full_subcomplex(index_set J) const {
    std::vector<index_set> restricted;
    restricted.reserve(facets.size());
    for (index_set facet : facets) restricted.push_back(facet & J);
    return from_facets(n, std::move(restricted));
}

std::vector<index_set> SimplicialComplex::minimal_non_faces() const {
    if (n > 20)
        throw input_error("minimal non-face scan limited to n <= 20");
    std::vector<index_set> out;
    // Scan subsets in size order; a non-face all of whose codim-1 subsets are
    // faces is minimal.  Sizes beyond dim()+2 cannot yield minimal non-faces.
    int max_size = std::min(n, dim() + 2);
    for (int k = 1; k <= max_size; ++k) {
        for (index_set s = 0; s <= full_set(n); ++s) {
            if (set_size(s) != k || is_face(s)) continue;
            bool minimal = true;
            for (int v : vertices_of(s)) {
                if (!is_face(without_vertex(s, v))) {
                    minimal = false;
                    break;
                }
            }
            if (minimal) out.push_back(s);
            if (s == full_set(n)) break;
        }
    }
    std::sort(out.begin(), out.end(), size_value_less);
    return out;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
    if (ideal.is_unit())
        throw input_error(
            "the unit ideal has no Stanley-Reisner complex (empty complement)");
    if (!ideal.is_squarefree())
        throw input_error("invariant computation requires square-free ideal");
    if (ideal.is_zero()) return SimplicialComplex::full_simplex(ideal.n);
    // The facets are the complements of the minimal transversals of the
    // generator supports: sigma is a face iff it contains no support, i.e.
    // its complement hits every support.
    std::vector<index_set> facets;
    for (index_set t : minimal_transversals(ideal.supports(), ideal.n))
        facets.push_back(full_set(ideal.n) & ~t);
    return SimplicialComplex::from_facets(ideal.n, std::move(facets));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& K) {
    MonomialIdeal ideal;
    ideal.n = K.n;
    for (index_set s : K.minimal_non_faces())
        ideal.generators.push_back(Monomial::squarefree(s, K.n));
    return ideal;
}

}  // namespace arrtop
