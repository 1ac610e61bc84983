#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace hyperbetti {

// A face is a subset of the vertex universe stored as a bit set, vertex i
// <-> bit i. The same value doubles as a squarefree multidegree, so the
// cardinality of the set equals the norm of the degree vector.
using Face = std::uint64_t;

inline constexpr int kMaxVertices = 63;

inline int face_size(Face f) { return std::popcount(f); }
inline bool face_subset(Face a, Face b) { return (a & ~b) == 0; }
inline Face face_bit(int v) { return Face{1} << v; }

inline Face full_mask(int n) {
    return n == 0 ? Face{0} : ((Face{1} << n) - 1);
}

// Bit indices of f in ascending order.
std::vector<int> face_vertices(Face f);

// Calls fn on every submask of m, the empty set included.
template <class Fn>
void for_each_submask(Face m, Fn&& fn) {
    Face s = m;
    for (;;) {
        fn(s);
        if (s == 0) break;
        s = (s - 1) & m;
    }
}

// Calls fn on every k-element subset of m.
template <class Fn>
void for_each_k_subset(Face m, int k, Fn&& fn) {
    if (k < 0) return;
    std::vector<int> verts = face_vertices(m);
    int n = static_cast<int>(verts.size());
    if (k > n) return;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        Face f = 0;
        for (int i : idx) f |= face_bit(verts[static_cast<size_t>(i)]);
        fn(f);
        int p = k - 1;
        while (p >= 0 && idx[static_cast<size_t>(p)] == n - k + p) --p;
        if (p < 0) break;
        ++idx[static_cast<size_t>(p)];
        for (int q = p + 1; q < k; ++q)
            idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q - 1)] + 1;
    }
}

// Ordered vertex universe with optional partition into blocks and display
// labels. Labels take no part in equality; bit order is declaration order.
struct VertexUniverse {
    int size = 0;
    std::vector<std::string> labels;  // one per vertex
    std::vector<Face> blocks;         // empty = unpartitioned

    // n vertices, no partition, default labels.
    static VertexUniverse plain(int n);

    // Contiguous blocks of the given sizes. A single block normalizes to the
    // unpartitioned form.
    static VertexUniverse partitioned(const std::vector<int>& block_sizes);

    // Explicit labels and blocks (used by the parsers). Validates everything.
    static VertexUniverse make(std::vector<std::string> labels,
                               std::vector<Face> blocks);

    Face mask() const { return full_mask(size); }
    int block_count() const { return static_cast<int>(blocks.size()); }

    // Index of the label, or -1.
    int index_of(const std::string& label) const;

    bool operator==(const VertexUniverse& o) const {
        return size == o.size && blocks == o.blocks;
    }
    bool operator!=(const VertexUniverse& o) const { return !(*this == o); }
};

// Default display labels for the given block sizes: lowercase letters for
// odd-numbered blocks, uppercase for even-numbered ones, each pool consumed
// left to right across blocks. Falls back to x1..xN if a pool runs dry.
std::vector<std::string> default_labels(const std::vector<int>& block_sizes);

// Disjoint union: blocks of a (or a as one block) followed by blocks of b,
// labels regenerated. Throws input_error if the result exceeds kMaxVertices.
VertexUniverse concat_universes(const VertexUniverse& a, const VertexUniverse& b);

} // namespace hyperbetti
