#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace covlat {

/// Packed little-endian bit rows. Used for order relations, reachability and
/// subset families; all hot kernels operate on raw row pointers.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_(cols <= 0 ? 0 : (cols + 63) / 64),
          data_(static_cast<std::size_t>(rows) * words_, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words() const { return words_; }

    std::uint64_t* row(int r) { return data_.data() + static_cast<std::size_t>(r) * words_; }
    const std::uint64_t* row(int r) const {
        return data_.data() + static_cast<std::size_t>(r) * words_;
    }

    bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1u; }
    void set(int r, int c) { row(r)[c >> 6] |= std::uint64_t{1} << (c & 63); }
    void clear(int r, int c) { row(r)[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    int rows_ = 0, cols_ = 0, words_ = 0;
    std::vector<std::uint64_t> data_;
};

/// A single dynamic bit row, for subsets of a poset.
using Bits = std::vector<std::uint64_t>;

inline Bits make_bits(int cols) { return Bits(cols <= 0 ? 0 : (cols + 63) / 64, 0); }

namespace rowops {

inline bool get(const std::uint64_t* a, int c) { return (a[c >> 6] >> (c & 63)) & 1u; }
inline void set(std::uint64_t* a, int c) { a[c >> 6] |= std::uint64_t{1} << (c & 63); }

inline void or_into(std::uint64_t* dst, const std::uint64_t* src, int w) {
    for (int i = 0; i < w; ++i) dst[i] |= src[i];
}

inline void and_rows(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, int w) {
    for (int i = 0; i < w; ++i) dst[i] = a[i] & b[i];
}

inline bool equal(const std::uint64_t* a, const std::uint64_t* b, int w) {
    for (int i = 0; i < w; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

/// a subset of b
inline bool subset(const std::uint64_t* a, const std::uint64_t* b, int w) {
    for (int i = 0; i < w; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

inline bool any(const std::uint64_t* a, int w) {
    for (int i = 0; i < w; ++i)
        if (a[i]) return true;
    return false;
}

inline bool intersects(const std::uint64_t* a, const std::uint64_t* b, int w) {
    for (int i = 0; i < w; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

inline int popcount(const std::uint64_t* a, int w) {
    int c = 0;
    for (int i = 0; i < w; ++i) c += std::popcount(a[i]);
    return c;
}

inline int lowest_bit(const std::uint64_t* a, int w) {
    for (int i = 0; i < w; ++i)
        if (a[i]) return i * 64 + std::countr_zero(a[i]);
    return -1;
}

inline int highest_bit(const std::uint64_t* a, int w) {
    for (int i = w - 1; i >= 0; --i)
        if (a[i]) return i * 64 + 63 - std::countl_zero(a[i]);
    return -1;
}

template <class F>
inline void for_each_bit(const std::uint64_t* a, int w, F&& f) {
    for (int i = 0; i < w; ++i) {
        std::uint64_t m = a[i];
        while (m) {
            f(i * 64 + std::countr_zero(m));
            m &= m - 1;
        }
    }
}

}  // namespace rowops
}  // namespace covlat
