#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace arrtop {

// An integer matrix with arbitrary-precision entries, stored sparsely by
// (row, col).  Zero entries are never stored.
struct IntMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::map<std::pair<size_t, size_t>, mpz_class> entries;

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c) {}

    static IntMatrix identity(size_t n);

    void set(size_t r, size_t c, const mpz_class& value);
    void add_to(size_t r, size_t c, const mpz_class& delta);
    const mpz_class& get(size_t r, size_t c) const;  // zero if absent

    bool is_zero() const { return entries.empty(); }
    IntMatrix times(const IntMatrix& other) const;
    std::vector<std::vector<mpz_class>> dense() const;

    // One "row col value" line per stored entry, preceded by a "rows cols"
    // header; the --dump-matrices format.
    std::string coordinate_format() const;

    bool operator==(const IntMatrix& other) const {
        return rows == other.rows && cols == other.cols &&
               entries == other.entries;
    }
};

}  // namespace arrtop
