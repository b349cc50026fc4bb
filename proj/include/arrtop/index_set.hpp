#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "arrtop/errors.hpp"

namespace arrtop {

// A subset of the vertex/variable set {1..n}, packed into one 64-bit word.
// Vertex i occupies bit i-1. n is capped at 63 so that union, intersection,
// comparison and hashing are all single-word operations.
using index_set = std::uint64_t;

inline constexpr int max_vertices = 63;
inline constexpr index_set empty_set = 0;

inline void check_vertex_count(int n) {
    if (n < 0 || n > max_vertices)
        throw input_error("vertex count " + std::to_string(n) + " out of range [0, 63]");
}

inline index_set full_set(int n) {
    return n == 0 ? 0 : (~index_set{0} >> (64 - n));
}

inline bool contains(index_set s, int vertex) {
    return (s >> (vertex - 1)) & index_set{1};
}

inline index_set singleton(int vertex) {
    return index_set{1} << (vertex - 1);
}

inline index_set with_vertex(index_set s, int vertex) {
    return s | singleton(vertex);
}

inline index_set without_vertex(index_set s, int vertex) {
    return s & ~singleton(vertex);
}

inline int set_size(index_set s) {
    return std::popcount(s);
}

inline bool subset_of(index_set a, index_set b) {
    return (a & ~b) == 0;
}

inline int smallest_vertex(index_set s) {  // s nonempty
    return std::countr_zero(s) + 1;
}

inline std::vector<int> vertices_of(index_set s) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(set_size(s)));
    while (s) {
        out.push_back(std::countr_zero(s) + 1);
        s &= s - 1;
    }
    return out;
}

inline index_set set_of(std::initializer_list<int> vs) {
    index_set s = 0;
    for (int v : vs) s = with_vertex(s, v);
    return s;
}

inline index_set set_of(const std::vector<int>& vs) {
    index_set s = 0;
    for (int v : vs) s = with_vertex(s, v);
    return s;
}

// "{1,3,5}"; the empty set prints as "{}".
inline std::string set_to_string(index_set s) {
    std::string out = "{";
    bool first = true;
    for (int v : vertices_of(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    out += "}";
    return out;
}

// Orders first by size, then by word value. Used wherever a family of
// subsets needs one canonical order.
inline bool size_value_less(index_set a, index_set b) {
    int sa = set_size(a), sb = set_size(b);
    if (sa != sb) return sa < sb;
    return a < b;
}

// Lexicographic order on the ascending vertex lists, e.g. {1,3,4} < {1,3,5} < {2}.
inline bool vertex_lex_less(index_set a, index_set b) {
    while (a && b) {
        int va = std::countr_zero(a), vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return b != 0;
}

}  // namespace arrtop
