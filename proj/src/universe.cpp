#include "hyperbetti/universe.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_set>

#include "hyperbetti/errors.hpp"

namespace hyperbetti {

std::vector<int> face_vertices(Face f) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(face_size(f)));
    while (f) {
        out.push_back(std::countr_zero(f));
        f &= f - 1;
    }
    return out;
}

std::vector<std::string> default_labels(const std::vector<int>& block_sizes) {
    static const std::string lower = "abcdefghijklmnopqrstuvwxyz";
    static const std::string upper = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";
    int total = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);

    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(total));
    size_t li = 0, ui = 0;
    bool fits = true;
    for (size_t b = 0; b < block_sizes.size() && fits; ++b) {
        const std::string& pool = (b % 2 == 0) ? lower : upper;
        size_t& cursor = (b % 2 == 0) ? li : ui;
        for (int k = 0; k < block_sizes[b]; ++k) {
            if (cursor >= pool.size()) {
                fits = false;
                break;
            }
            labels.push_back(std::string(1, pool[cursor++]));
        }
    }
    if (!fits) {
        labels.clear();
        for (int i = 1; i <= total; ++i) labels.push_back("x" + std::to_string(i));
    }
    return labels;
}

static void validate_universe(const VertexUniverse& u) {
    if (u.size < 0 || u.size > kMaxVertices)
        throw input_error("vertex universe size must be between 0 and 63, got " +
                          std::to_string(u.size));
    if (static_cast<int>(u.labels.size()) != u.size)
        throw input_error("label count does not match universe size");
    std::unordered_set<std::string> seen;
    for (const std::string& l : u.labels) {
        if (l.empty()) throw input_error("empty vertex label");
        for (char ch : l)
            if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                throw input_error("vertex label '" + l +
                                  "' contains characters outside [A-Za-z0-9_]");
        if (!seen.insert(l).second)
            throw input_error("duplicate vertex label '" + l + "'");
    }
    if (!u.blocks.empty()) {
        Face covered = 0;
        for (Face b : u.blocks) {
            if (b == 0) throw input_error("empty partition block");
            if (b & covered) throw input_error("partition blocks overlap");
            covered |= b;
        }
        if (covered != u.mask())
            throw input_error("partition blocks do not cover the universe");
    }
}

VertexUniverse VertexUniverse::plain(int n) {
    VertexUniverse u;
    u.size = n;
    u.labels = default_labels({n});
    validate_universe(u);
    return u;
}

VertexUniverse VertexUniverse::partitioned(const std::vector<int>& block_sizes) {
    if (block_sizes.empty()) throw input_error("partition needs at least one block");
    for (int s : block_sizes)
        if (s <= 0) throw input_error("partition blocks must be nonempty");
    VertexUniverse u;
    u.size = std::accumulate(block_sizes.begin(), block_sizes.end(), 0);
    u.labels = default_labels(block_sizes);
    if (block_sizes.size() > 1) {
        int at = 0;
        for (int s : block_sizes) {
            u.blocks.push_back(full_mask(s) << at);
            at += s;
        }
    }
    validate_universe(u);
    return u;
}

VertexUniverse VertexUniverse::make(std::vector<std::string> labels,
                                    std::vector<Face> blocks) {
    VertexUniverse u;
    u.size = static_cast<int>(labels.size());
    u.labels = std::move(labels);
    if (blocks.size() > 1) u.blocks = std::move(blocks);
    validate_universe(u);
    return u;
}

int VertexUniverse::index_of(const std::string& label) const {
    for (int i = 0; i < size; ++i)
        if (labels[static_cast<size_t>(i)] == label) return i;
    return -1;
}

VertexUniverse concat_universes(const VertexUniverse& a, const VertexUniverse& b) {
    if (a.size + b.size > kMaxVertices)
        throw input_error("combined universe exceeds 63 vertices");
    std::vector<int> sizes;
    auto push_blocks = [&sizes](const VertexUniverse& u) {
        if (u.size == 0) return;
        if (u.blocks.empty()) {
            sizes.push_back(u.size);
        } else {
            for (Face blk : u.blocks) sizes.push_back(face_size(blk));
        }
    };
    push_blocks(a);
    push_blocks(b);
    if (sizes.empty()) return VertexUniverse::plain(0);
    return VertexUniverse::partitioned(sizes);
}

} // namespace hyperbetti
