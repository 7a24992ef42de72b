#pragma once

#include <cstddef>
#include <vector>

#include "reebspec/rational.hpp"

namespace reebspec {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<std::vector<Rat>>;

inline std::size_t rational_rank(RatMat m) {
    std::size_t rank = 0;
    if (m.empty()) return 0;
    std::size_t cols = m[0].size();
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[rank][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Row-style Hermite normal form: echelon with positive pivots and entries
// above each pivot reduced into [0, pivot). Rows are combined by unimodular
// operations only. Zero rows are dropped.
inline IntMat hermite_normal_form(IntMat m) {
    if (m.empty()) return m;
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        // clear the column below `row` with gcd steps
        while (true) {
            std::size_t piv = m.size();
            for (std::size_t i = row; i < m.size(); ++i) {
                if (m[i][col] != 0 &&
                    (piv == m.size() ||
                     mpz_cmpabs(m[i][col].get_mpz_t(), m[piv][col].get_mpz_t()) < 0))
                    piv = i;
            }
            if (piv == m.size()) break;  // column is zero below row
            std::swap(m[row], m[piv]);
            bool cleared = true;
            for (std::size_t i = row + 1; i < m.size(); ++i) {
                if (m[i][col] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[row][col].get_mpz_t());
                for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
                if (m[i][col] != 0) cleared = false;
            }
            if (cleared) {
                if (m[row][col] < 0)
                    for (std::size_t j = 0; j < cols; ++j) m[row][j] = -m[row][j];
                // reduce entries above the pivot
                for (std::size_t i = 0; i < row; ++i) {
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), m[i][col].get_mpz_t(), m[row][col].get_mpz_t());
                    if (q != 0)
                        for (std::size_t j = 0; j < cols; ++j) m[i][j] -= q * m[row][j];
                }
                ++row;
                break;
            }
        }
    }
    m.resize(row);
    return m;
}

// Basis of the saturated lattice {x in Z^r : x * M = 0} (left kernel),
// returned in Hermite normal form. Computed by unimodular row reduction of
// [M | I]; rows whose M-part vanishes span the kernel.
inline IntMat integer_left_kernel(const IntMat& m) {
    std::size_t rows = m.size();
    if (rows == 0) return {};
    std::size_t cols = m[0].size();
    IntMat aug(rows, IntVec(cols + rows, Int(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols + i] = 1;
    }
    aug = hermite_normal_form(std::move(aug));
    IntMat kernel;
    for (const auto& r : aug) {
        bool zero = true;
        for (std::size_t j = 0; j < cols; ++j)
            if (r[j] != 0) { zero = false; break; }
        if (zero) kernel.emplace_back(r.begin() + static_cast<long>(cols), r.end());
    }
    // HNF of [M|I] never drops rows (the I block keeps every row nonzero),
    // so `kernel` is the full left kernel lattice.
    return hermite_normal_form(std::move(kernel));
}

}  // namespace reebspec
