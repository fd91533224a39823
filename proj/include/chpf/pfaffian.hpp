#pragma once

#include <chpf/error.hpp>
#include <chpf/polynomial.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chpf {

inline constexpr std::size_t kDefaultOracleCap = 10;
inline constexpr std::size_t kDefaultPolyCap = 12;

/// Antisymmetric matrix storing only the strict upper triangle.
template <typename T>
class SkewMatrix {
public:
    SkewMatrix() = default;
    explicit SkewMatrix(std::size_t dim) : dim_(dim), upper_(dim * (dim ? dim - 1 : 0) / 2, T(0)) {}

    /// entry(i, j) is called for i < j only.
    template <typename F>
    static SkewMatrix generate(std::size_t dim, F&& entry)
    {
        SkewMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = i + 1; j < dim; ++j) m.set(i, j, entry(i, j));
        return m;
    }

    std::size_t dim() const { return dim_; }

    T at(std::size_t i, std::size_t j) const
    {
        if (i == j) return T(0);
        if (i < j) return upper_[index(i, j)];
        return -upper_[index(j, i)];
    }

    void set(std::size_t i, std::size_t j, T v)
    {
        if (i == j) throw Error(ErrorKind::DegenerateParameter, "skew matrix diagonal is fixed at zero");
        if (i < j)
            upper_[index(i, j)] = std::move(v);
        else
            upper_[index(j, i)] = -v;
    }

    /// Principal submatrix on the given (increasing) index list.
    SkewMatrix restrict_to(const std::vector<std::size_t>& idx) const
    {
        return generate(idx.size(), [&](std::size_t a, std::size_t b) { return at(idx[a], idx[b]); });
    }

    template <typename F>
    auto map(F&& f) const
    {
        using U = decltype(f(std::declval<const T&>()));
        SkewMatrix<U> out(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) out.set(i, j, f(at(i, j)));
        return out;
    }

private:
    std::size_t index(std::size_t i, std::size_t j) const
    {
        // row-major strict upper triangle
        return i * (2 * dim_ - i - 1) / 2 + (j - i - 1);
    }

    std::size_t dim_ = 0;
    std::vector<T> upper_;
};

namespace detail {

inline void require_even(std::size_t dim)
{
    if (dim % 2 != 0)
        throw Error(ErrorKind::OddDimension, "Pfaffian of odd dimension " + std::to_string(dim));
}

template <typename T>
T expand_subset(const SkewMatrix<T>& m, std::uint64_t mask, std::unordered_map<std::uint64_t, T>& memo)
{
    if (mask == 0) return T(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::size_t first = 0;
    while (!((mask >> first) & 1u)) ++first;
    std::uint64_t rest = mask & ~(std::uint64_t{1} << first);
    T total(0);
    int sign = 1;
    for (std::size_t j = first + 1; j < m.dim(); ++j) {
        if (!((rest >> j) & 1u)) continue;
        T mij = m.at(first, j);
        if (!scalar_is_zero(mij)) {
            T sub = expand_subset(m, rest & ~(std::uint64_t{1} << j), memo);
            T term = mij * sub;
            total = sign > 0 ? total + term : total - term;
        }
        sign = -sign;
    }
    memo.emplace(mask, total);
    return total;
}

} // namespace detail

/// Reference Pfaffian by expansion along the first row (memoised over index subsets).
template <typename T>
T pf_expand(const SkewMatrix<T>& m, std::size_t cap = kDefaultOracleCap)
{
    detail::require_even(m.dim());
    if (m.dim() > cap)
        throw Error(ErrorKind::OracleCap, "dimension " + std::to_string(m.dim()) +
                                              " above expansion cap " + std::to_string(cap));
    if (m.dim() > 62) throw Error(ErrorKind::OracleCap, "expansion limited to 62 indices");
    std::unordered_map<std::uint64_t, T> memo;
    std::uint64_t all = m.dim() == 0 ? 0 : ((std::uint64_t{1} << m.dim()) - 1);
    return detail::expand_subset(m, all, memo);
}

/// Pfaffian by skew-symmetric elimination. Each step brings a nonzero entry of
/// the current row into position (k, k+1) by a simultaneous row/column swap,
/// then replaces the trailing block by its skew Schur complement
///   A'[i][j] = A[i][j] + (A[k+1][i] A[k][j] - A[k][i] A[k+1][j]) / A[k][k+1],
/// so that Pf(A) = A[k][k+1] * Pf(A').
template <typename T>
T pf_eliminate(const SkewMatrix<T>& m)
{
    const std::size_t n = m.dim();
    detail::require_even(n);
    std::vector<std::vector<T>> a(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    auto swap_index = [&](std::size_t p, std::size_t r) {
        std::swap(a[p], a[r]);
        for (auto& row : a) std::swap(row[p], row[r]);
    };

    T result(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t pivot = k + 1;
        while (pivot < n && detail::scalar_is_zero(a[k][pivot])) ++pivot;
        if (pivot == n) return T(0);
        if (pivot != k + 1) {
            swap_index(k + 1, pivot);
            negate = !negate;
        }
        const T piv = a[k][k + 1];
        result = result * piv;
        for (std::size_t i = k + 2; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                T update = (a[k + 1][i] * a[k][j] - a[k][i] * a[k + 1][j]) / piv;
                a[i][j] = a[i][j] + update;
                a[j][i] = -a[i][j];
            }
        }
    }
    return negate ? -result : result;
}

/// Pfaffian over the polynomial ring, by expansion.
template <typename T>
Polynomial<T> pf_poly(const SkewMatrix<Polynomial<T>>& m, std::size_t cap = kDefaultPolyCap)
{
    return pf_expand(m, cap);
}

/// Determinant by fraction-free (Bareiss) elimination of the full antisymmetric
/// matrix; any dimension.
template <typename T>
T det_check(const SkewMatrix<T>& m)
{
    const std::size_t n = m.dim();
    if (n == 0) return T(1);
    std::vector<std::vector<T>> a(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (detail::scalar_is_zero(a[k][k])) {
            std::size_t r = k + 1;
            while (r < n && detail::scalar_is_zero(a[r][k])) ++r;
            if (r == n) return T(0);
            std::swap(a[k], a[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = T(0);
        }
        prev = a[k][k];
    }
    T det = a[n - 1][n - 1];
    return negate ? -det : det;
}

} // namespace chpf
