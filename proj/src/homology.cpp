#include "hyperbetti/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>

namespace hyperbetti {

IntMatrix boundary_from_faces(const std::vector<std::vector<Face>>& faces, int r) {
    // Columns index faces of cardinality r+1, rows faces of cardinality r.
    int maxc = static_cast<int>(faces.size()) - 1;
    if (r < 0 || r > maxc) {
        // ∂_{-1} has one column (the empty face) and no rows.
        if (r == -1 && maxc >= 0) return IntMatrix(0, static_cast<int>(faces[0].size()));
        return IntMatrix(0, 0);
    }
    static const std::vector<Face> kNoFaces;
    const std::vector<Face>& rows = faces[static_cast<size_t>(r)];
    const std::vector<Face>& cols =
        r + 1 <= maxc ? faces[static_cast<size_t>(r) + 1] : kNoFaces;
    IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols; ++c) {
        Face f = cols[static_cast<size_t>(c)];
        int pos = 0;
        Face rest = f;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            Face g = f ^ face_bit(v);
            auto it = std::lower_bound(rows.begin(), rows.end(), g);
            m.at(static_cast<int>(it - rows.begin()), c) = (pos % 2 == 0) ? 1 : -1;
            ++pos;
        }
    }
    return m;
}

IntMatrix boundary_matrix(const SimplicialComplex& c, int r) {
    if (c.is_void()) return IntMatrix(0, 0);
    return boundary_from_faces(faces_by_cardinality(c), r);
}

int rank_mod2(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    const int words = (m.cols + 63) / 64;
    std::vector<std::uint64_t> bits(static_cast<size_t>(m.rows) * words, 0);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c) & 1)
                bits[static_cast<size_t>(r) * words + c / 64] |= std::uint64_t{1}
                                                                 << (c % 64);
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        const int w = c / 64;
        const std::uint64_t b = std::uint64_t{1} << (c % 64);
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (bits[static_cast<size_t>(r) * words + w] & b) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int k = w; k < words; ++k)
                std::swap(bits[static_cast<size_t>(pivot) * words + k],
                          bits[static_cast<size_t>(rank) * words + k]);
        for (int r = rank + 1; r < m.rows; ++r)
            if (bits[static_cast<size_t>(r) * words + w] & b)
                for (int k = w; k < words; ++k)
                    bits[static_cast<size_t>(r) * words + k] ^=
                        bits[static_cast<size_t>(rank) * words + k];
        ++rank;
    }
    return rank;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t out = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) out = out * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return out;
}

} // namespace

int rank_mod_p(const IntMatrix& m, std::uint32_t p) {
    if (p == 2) return rank_mod2(m);
    if (m.rows == 0 || m.cols == 0) return 0;
    const std::uint64_t mod = p;
    std::vector<std::uint64_t> a(static_cast<size_t>(m.rows) * m.cols);
    for (size_t k = 0; k < a.size(); ++k) {
        long long v = m.a[k] % static_cast<long long>(mod);
        if (v < 0) v += static_cast<long long>(mod);
        a[k] = static_cast<std::uint64_t>(v);
    }
    auto at = [&a, &m](int r, int c) -> std::uint64_t& {
        return a[static_cast<size_t>(r) * m.cols + c];
    };
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int k = c; k < m.cols; ++k) std::swap(at(pivot, k), at(rank, k));
        const std::uint64_t inv = pow_mod(at(rank, c), mod - 2, mod);
        for (int r = rank + 1; r < m.rows; ++r) {
            if (at(r, c) == 0) continue;
            const std::uint64_t factor = at(r, c) * inv % mod;
            for (int k = c; k < m.cols; ++k)
                at(r, k) = (at(r, k) + (mod - factor) * at(rank, k)) % mod;
        }
        ++rank;
    }
    return rank;
}

namespace {

struct int64_overflow {};

// Fraction-free (Bareiss) elimination; every division is exact. The int64
// variant aborts via int64_overflow as soon as a value leaves the safe range.
int bareiss_rank_i64(const IntMatrix& m) {
    std::vector<long long> a(m.a.begin(), m.a.end());
    auto at = [&a, &m](int r, int c) -> long long& {
        return a[static_cast<size_t>(r) * m.cols + c];
    };
    constexpr long long kLimit = 0x3fffffffffffffffLL;
    long long prev = 1;
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int k = c; k < m.cols; ++k) std::swap(at(pivot, k), at(rank, k));
        const long long piv = at(rank, c);
        for (int r = rank + 1; r < m.rows; ++r) {
            const long long lead = at(r, c);
            if (lead == 0 && piv == prev) continue;
            for (int k = c + 1; k < m.cols; ++k) {
                __int128 t = static_cast<__int128>(at(r, k)) * piv -
                             static_cast<__int128>(lead) * at(rank, k);
                t /= prev;  // exact
                if (t > kLimit || t < -kLimit) throw int64_overflow{};
                at(r, k) = static_cast<long long>(t);
            }
            at(r, c) = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

int bareiss_rank_big(const IntMatrix& m) {
    using boost::multiprecision::cpp_int;
    std::vector<cpp_int> a(m.a.begin(), m.a.end());
    auto at = [&a, &m](int r, int c) -> cpp_int& {
        return a[static_cast<size_t>(r) * m.cols + c];
    };
    cpp_int prev = 1;
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int k = c; k < m.cols; ++k) std::swap(at(pivot, k), at(rank, k));
        const cpp_int piv = at(rank, c);
        for (int r = rank + 1; r < m.rows; ++r) {
            const cpp_int lead = at(r, c);
            for (int k = c + 1; k < m.cols; ++k)
                at(r, k) = (at(r, k) * piv - lead * at(rank, k)) / prev;
            at(r, c) = 0;
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

} // namespace

int rank_rational(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    try {
        return bareiss_rank_i64(m);
    } catch (const int64_overflow&) {
        return bareiss_rank_big(m);
    }
}

int matrix_rank(const IntMatrix& m, const FieldSpec& field) {
    return field.is_rational() ? rank_rational(m) : rank_mod_p(m, field.p);
}

HomologyProfile homology_from_faces(const std::vector<std::vector<Face>>& faces,
                                    const FieldSpec& field) {
    HomologyProfile profile;
    const int maxc = static_cast<int>(faces.size()) - 1;
    if (maxc < 0) return profile;
    // rank ∂_r for r = 0..maxc-1; the maps beyond carry no faces.
    std::vector<int> rk(static_cast<size_t>(maxc) + 1, 0);
    for (int r = 0; r < maxc; ++r)
        rk[static_cast<size_t>(r)] = matrix_rank(boundary_from_faces(faces, r), field);
    for (int r = -1; r < maxc; ++r) {
        long long fr = static_cast<long long>(faces[static_cast<size_t>(r) + 1].size());
        long long below = r >= 0 ? rk[static_cast<size_t>(r)] : 0;
        long long above = r + 1 <= maxc - 1 ? rk[static_cast<size_t>(r) + 1] : 0;
        profile.dims[r] = fr - below - above;
    }
    return profile;
}

HomologyProfile reduced_homology(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_void()) return HomologyProfile{};
    return homology_from_faces(faces_by_cardinality(c), field);
}

} // namespace hyperbetti
