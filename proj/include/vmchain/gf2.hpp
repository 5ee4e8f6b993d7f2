#pragma once

// Dense GF(2) linear algebra on matrices with at most 64 columns: one machine
// word per row, elimination by leading bit. The rank of an empty (0-row or
// 0-column) matrix is 0.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vmchain/errors.hpp"

namespace vmchain {

struct Gf2Matrix {
    int row_count = 0;
    int col_count = 0;
    std::vector<std::uint64_t> rows;  // bit j of rows[i] = entry (i, j)

    Gf2Matrix() = default;
    Gf2Matrix(int r, int c)
        : row_count(r), col_count(c), rows(static_cast<std::size_t>(r), 0) {
        if (r < 0 || c < 0 || c > 64)
            throw argument_error("matrix dims must satisfy 0 <= r, 0 <= c <= 64");
    }

    bool get(int i, int j) const {
        return (rows[static_cast<std::size_t>(i)] >> j) & 1;
    }
    void set(int i, int j, bool v) {
        std::uint64_t m = std::uint64_t{1} << j;
        if (v)
            rows[static_cast<std::size_t>(i)] |= m;
        else
            rows[static_cast<std::size_t>(i)] &= ~m;
    }
};

// Rank of the row span, stopping once `cap` independent rows are found.
// Rows are reduced against a leading-bit basis; all-zero columns cost nothing,
// so callers may pass rows embedded in a wider bit layout.
inline int rank_of_rows(std::span<const std::uint64_t> rows, int cap = 64) {
    std::uint64_t basis[64];
    int lead[64];
    int r = 0;
    if (cap <= 0) return 0;
    for (std::uint64_t w : rows) {
        for (int i = 0; i < r; ++i) {
            if (w & (std::uint64_t{1} << lead[i])) w ^= basis[i];
        }
        if (w) {
            basis[r] = w;
            lead[r] = 63 - std::countl_zero(w);
            if (++r >= cap) return r;
        }
    }
    return r;
}

inline int gf2_rank(const Gf2Matrix& m) {
    if (m.col_count == 0) return 0;
    return rank_of_rows(m.rows);
}

}  // namespace vmchain
