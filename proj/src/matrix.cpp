#include "arrtop/matrix.hpp"

#include <sstream>

#include "arrtop/errors.hpp"

namespace arrtop {

namespace {
const mpz_class kZero = 0;
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.entries[{i, i}] = 1;
    return m;
}

void IntMatrix::set(size_t r, size_t c, const mpz_class& value) {
    if (r >= rows || c >= cols)
        throw internal_error("matrix index out of range");
    if (value == 0)
        entries.erase({r, c});
    else
        entries[{r, c}] = value;
}

void IntMatrix::add_to(size_t r, size_t c, const mpz_class& delta) {
    if (r >= rows || c >= cols)
        throw internal_error("matrix index out of range");
    auto it = entries.find({r, c});
    if (it == entries.end()) {
        if (delta != 0) entries[{r, c}] = delta;
        return;
    }
    it->second += delta;
    if (it->second == 0) entries.erase(it);
}

const mpz_class& IntMatrix::get(size_t r, size_t c) const {
    auto it = entries.find({r, c});
    return it == entries.end() ? kZero : it->second;
}

IntMatrix IntMatrix::times(const IntMatrix& other) const {
    if (cols != other.rows)
        throw internal_error("matrix dimension mismatch in product");
    IntMatrix out(rows, other.cols);
    // Group the right factor by row so each left entry scans one row only.
    std::vector<std::vector<std::pair<size_t, const mpz_class*>>> right_rows(
        other.rows);
    for (const auto& [rc, v] : other.entries)
        right_rows[rc.first].push_back({rc.second, &v});
    for (const auto& [rc, v] : entries)
        for (const auto& [j, w] : right_rows[rc.second])
            out.add_to(rc.first, j, v * (*w));
    return out;
}

std::vector<std::vector<mpz_class>> IntMatrix::dense() const {
    std::vector<std::vector<mpz_class>> out(rows,
                                            std::vector<mpz_class>(cols, 0));
    for (const auto& [rc, v] : entries) out[rc.first][rc.second] = v;
    return out;
}

std::string IntMatrix::coordinate_format() const {
    std::ostringstream text;
    text << rows << ' ' << cols << '\n';
    for (const auto& [rc, v] : entries)
        text << rc.first << ' ' << rc.second << ' ' << v.get_str() << '\n';
    return text.str();
}

}  // namespace arrtop
