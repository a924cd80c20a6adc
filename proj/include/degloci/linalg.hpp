#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "degloci/poly.hpp"

namespace degloci {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

// Determinant by dynamic programming over column subsets (row r of the
// minor = row r of the matrix). n * 2^n multiplications, no division, so it
// works over any commutative ring; `one` is the ring unit.
template <typename T, typename Mul>
T determinant(const Matrix<T>& a, Mul mul, const T& one) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::domain_error("determinant of non-square matrix");
    if (n == 0) return one;
    if (n > 20) throw std::domain_error("determinant size limit exceeded");
    std::vector<T> d(size_t(1) << n);
    d[0] = one;
    for (uint32_t s = 1; s < (uint32_t(1) << n); ++s) {
        int k = std::popcount(s);
        size_t r = static_cast<size_t>(k - 1);
        T acc{};
        int t = 0;
        for (size_t j = 0; j < n; ++j) {
            if (!(s & (uint32_t(1) << j))) continue;
            T term = mul(a[r][j], d[s & ~(uint32_t(1) << j)]);
            if ((static_cast<int>(r) + t) % 2 == 0)
                acc = acc + term;
            else
                acc = acc - term;
            ++t;
        }
        d[s] = std::move(acc);
    }
    return d[(size_t(1) << n) - 1];
}

inline GradedPoly determinant(const Matrix<GradedPoly>& a, int cap = kNoCap) {
    return determinant(
        a, [cap](const GradedPoly& l, const GradedPoly& r) { return GradedPoly::mul(l, r, cap); },
        GradedPoly::one());
}

inline Rat determinant(const Matrix<Rat>& a) {
    return determinant(a, [](const Rat& l, const Rat& r) { return l * r; }, Rat(1));
}

namespace detail {

template <typename T, typename Mul>
T pfaffian_rec(const Matrix<T>& a, const std::vector<size_t>& idx, Mul& mul, const T& one) {
    if (idx.empty()) return one;
    T acc{};
    std::vector<size_t> rest(idx.size() - 2);
    for (size_t p = 1; p < idx.size(); ++p) {
        size_t k = 0;
        for (size_t q = 1; q < idx.size(); ++q)
            if (q != p) rest[k++] = idx[q];
        T term = mul(a[idx[0]][idx[p]], pfaffian_rec(a, rest, mul, one));
        if (p % 2 == 1)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

}  // namespace detail

// Pfaffian of a skew-symmetric matrix of even size; only the strict upper
// triangle is read. Pf of the empty matrix is 1.
template <typename T, typename Mul>
T pfaffian(const Matrix<T>& a, Mul mul, const T& one) {
    size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::domain_error("pfaffian of non-square matrix");
    if (n % 2 != 0) throw std::domain_error("pfaffian of odd-size matrix");
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    return detail::pfaffian_rec(a, idx, mul, one);
}

inline GradedPoly pfaffian(const Matrix<GradedPoly>& a, int cap = kNoCap) {
    return pfaffian(
        a, [cap](const GradedPoly& l, const GradedPoly& r) { return GradedPoly::mul(l, r, cap); },
        GradedPoly::one());
}

inline Rat pfaffian(const Matrix<Rat>& a) {
    return pfaffian(a, [](const Rat& l, const Rat& r) { return l * r; }, Rat(1));
}

}  // namespace degloci
