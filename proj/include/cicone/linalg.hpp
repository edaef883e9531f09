/**
 * Exact rational linear algebra over arbitrary-precision integers and
 * rationals. Everything in this library runs on these routines; there is
 * no floating point anywhere.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cicone {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

struct ZeroVectorError : std::runtime_error {
    ZeroVectorError() : std::runtime_error("primitive() of the zero vector") {}
};

inline Int dot(const IntVec& a, const IntVec& b)
{
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const RatVec& a, const RatVec& b)
{
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Pairing of an integer vector against a rational vector.
inline Rat dot(const IntVec& a, const RatVec& b)
{
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline bool is_zero(const IntVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline bool is_zero(const RatVec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

inline bool lex_less(const IntVec& a, const IntVec& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline RatVec to_rat(const IntVec& v)
{
    RatVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i];
    return w;
}

/// Divide an integer vector by the (positive) gcd of its entries, in place.
/// The direction of the vector is preserved; only the scale changes.
inline void make_primitive(IntVec& v)
{
    Int g = 0;
    for (const Int& x : v) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) return;
    }
    if (g == 0) throw ZeroVectorError();
    for (Int& x : v) x /= g;
}

/// Unique positive rational multiple of v with coprime integer entries.
inline IntVec primitive(const RatVec& v)
{
    Int lcm_den = 1;
    for (const Rat& q : v)
        lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(q));
    IntVec w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        w[i] = boost::multiprecision::numerator(v[i]) *
               (lcm_den / boost::multiprecision::denominator(v[i]));
    make_primitive(w);
    return w;
}

inline IntVec primitive(const IntVec& v)
{
    IntVec w = v;
    make_primitive(w);
    return w;
}

// --- Gaussian elimination -------------------------------------------------

/// Reduced row echelon form. Returns the pivot column of each surviving row.
inline std::vector<std::size_t> rref(RatMat& m)
{
    std::vector<std::size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    const std::size_t ncols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[row], m[piv]);
        const Rat inv = Rat(1) / m[row][col];
        for (Rat& x : m[row]) x *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][col] == 0) continue;
            const Rat f = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    m.resize(pivot_cols.size());
    return pivot_cols;
}

inline std::size_t rank(RatMat m) { return rref(m).size(); }

inline std::size_t rank_int(const std::vector<IntVec>& rows)
{
    RatMat m;
    m.reserve(rows.size());
    for (const IntVec& r : rows) m.push_back(to_rat(r));
    return rank(m);
}

/// Basis of {x : Mx = 0}.
inline std::vector<RatVec> kernel_basis(const RatMat& m_in)
{
    if (m_in.empty()) return {};
    const std::size_t n = m_in[0].size();
    RatMat m = m_in;
    const std::vector<std::size_t> pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        RatVec v(n, Rat(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Any solution of Ax = b, or nullopt when the system is inconsistent.
inline std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b)
{
    if (a.empty()) return is_zero(b) ? std::optional<RatVec>(RatVec{}) : std::nullopt;
    const std::size_t n = a[0].size();
    RatMat m(a.size(), RatVec(n + 1));
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::copy(a[i].begin(), a[i].end(), m[i].begin());
        m[i][n] = b[i];
    }
    const std::vector<std::size_t> pivots = rref(m);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        if (pivots[i] == n) return std::nullopt;  // row (0 ... 0 | 1)
    RatVec x(n, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][n];
    return x;
}

/// Inverse of a square matrix, or nullopt when singular.
inline std::optional<RatMat> inverse(const RatMat& a)
{
    const std::size_t n = a.size();
    RatMat m(n, RatVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(a[i].begin(), a[i].end(), m[i].begin());
        m[i][n + i] = 1;
    }
    const std::vector<std::size_t> pivots = rref(m);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    RatMat inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        std::copy(m[i].begin() + static_cast<std::ptrdiff_t>(n), m[i].end(), inv[i].begin());
    return inv;
}

/**
 * Incremental integer rank computation with an early-exit target.
 *
 * Rows are reduced against the pivot rows accumulated so far using
 * cross-multiplication; each reduced row is re-normalized by its gcd so the
 * entries stay small. This is the workhorse of the double-description
 * adjacency test, which only ever needs to know whether a set of constraint
 * normals reaches rank dim-2.
 */
class IntRankAccumulator {
  public:
    explicit IntRankAccumulator(std::size_t dim) : dim_(dim) {}

    /// Feed one row; returns true if it increased the rank.
    bool add(IntVec row)
    {
        for (std::size_t i = 0; i < pivot_rows_.size(); ++i) {
            const Int x = row[pivot_cols_[i]];  // by value: the loop below overwrites row
            if (x == 0) continue;
            const Int p = pivot_rows_[i][pivot_cols_[i]];
            for (std::size_t j = 0; j < dim_; ++j)
                row[j] = row[j] * p - pivot_rows_[i][j] * x;
        }
        std::size_t col = 0;
        while (col < dim_ && row[col] == 0) ++col;
        if (col == dim_) return false;
        make_primitive(row);
        pivot_rows_.push_back(std::move(row));
        pivot_cols_.push_back(col);
        return true;
    }

    std::size_t rank() const { return pivot_rows_.size(); }

  private:
    std::size_t dim_;
    std::vector<IntVec> pivot_rows_;
    std::vector<std::size_t> pivot_cols_;
};

}  // namespace cicone
