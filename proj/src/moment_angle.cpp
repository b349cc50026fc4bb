#include "arrtop/moment_angle.hpp"

#include <algorithm>
#include <map>

#include "arrtop/errors.hpp"

namespace arrtop {

namespace {

// A cell is the pair (disks, circles) of disjoint index sets with
// disks in K; the remaining coordinates are points.
struct Cell {
    index_set disks;
    index_set circles;

    int dim() const { return set_size(circles) + 2 * set_size(disks); }
    bool operator<(const Cell& other) const {
        if (disks != other.disks) return disks < other.disks;
        return circles < other.circles;
    }
    bool operator==(const Cell& other) const {
        return disks == other.disks && circles == other.circles;
    }
};

std::string cell_label(const Cell& c) {
    return "D=" + set_to_string(c.disks) + " C=" + set_to_string(c.circles);
}

}  // namespace

ChainComplex moment_angle_complex(const SimplicialComplex& K, size_t cell_cap) {
    std::vector<index_set> faces = K.all_faces();
    size_t count = 0;
    for (index_set f : faces) {
        int free_coords = K.n - set_size(f);
        if (free_coords >= 40 ||
            (count += size_t(1) << free_coords) > cell_cap)
            throw input_error("moment-angle cell count exceeds oracle cap");
    }

    // Enumerate admissible cells: DISK set = a face, CIRCLE set = any subset
    // of the remaining coordinates.
    std::vector<std::vector<Cell>> by_dim;
    for (index_set f : faces) {
        index_set rest = full_set(K.n) & ~f;
        index_set circles = rest;
        while (true) {
            Cell c{f, circles};
            size_t d = static_cast<size_t>(c.dim());
            if (by_dim.size() <= d) by_dim.resize(d + 1);
            by_dim[d].push_back(c);
            if (circles == 0) break;
            circles = (circles - 1) & rest;
        }
    }
    for (auto& cells : by_dim) std::sort(cells.begin(), cells.end());

    ChainComplex C;
    C.lowest_degree = 0;
    C.dims.resize(by_dim.size());
    C.labels.resize(by_dim.size());
    C.boundaries.resize(by_dim.size());
    std::vector<std::map<Cell, size_t>> index(by_dim.size());
    for (size_t d = 0; d < by_dim.size(); ++d) {
        C.dims[d] = by_dim[d].size();
        for (size_t i = 0; i < by_dim[d].size(); ++i) {
            index[d][by_dim[d][i]] = i;
            C.labels[d].push_back(cell_label(by_dim[d][i]));
        }
    }

    for (size_t d = 0; d < by_dim.size(); ++d) {
        IntMatrix b(d > 0 ? C.dims[d - 1] : 0, C.dims[d]);
        if (d > 0) {
            for (size_t col = 0; col < by_dim[d].size(); ++col) {
                const Cell& c = by_dim[d][col];
                for (int v : vertices_of(c.disks)) {
                    // DISK at v becomes a CIRCLE; the Leibniz sign counts the
                    // odd-degree letters (circles) left of position v.
                    int circles_before =
                        set_size(c.circles & (singleton(v) - 1));
                    Cell target{without_vertex(c.disks, v),
                                with_vertex(c.circles, v)};
                    size_t row = index[d - 1].at(target);
                    b.set(row, col, circles_before % 2 == 0 ? 1 : -1);
                }
            }
        }
        C.boundaries[d] = std::move(b);
    }
    C.verify_square_zero();
    return C;
}

GradedAbelianGroup oracle_homology(const SimplicialComplex& K,
                                   size_t cell_cap) {
    return moment_angle_complex(K, cell_cap).homology();
}

}  // namespace arrtop
