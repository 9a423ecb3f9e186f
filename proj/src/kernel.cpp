#include "clutterlab/kernel.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace clutterlab {

Integer dot(std::span<const Integer> a, std::span<const Integer> b)
{
    if (a.size() != b.size())
        throw UsageError("dot product of vectors of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            s += a[i] * b[i];
    return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw UsageError("dot product of vectors of different length");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            s += a[i] * b[i];
    return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b)
{
    if (a.size() != b.size())
        throw UsageError("dot product of vectors of different length");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0)
            s += Rational(a[i]) * b[i];
    return s;
}

bool is_zero(std::span<const Integer> v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) == 0; });
}

bool is_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

IntVector primitive(IntVector v)
{
    Integer g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    if (g > 1)
        for (auto& x : v)
            x /= g;
    return v;
}

RatVector to_rational(std::span<const Integer> v)
{
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        r[i] = Rational(v[i]);
    return r;
}

std::optional<IntVector> to_integer(std::span<const Rational> v)
{
    IntVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1)
            return std::nullopt;
        r[i] = v[i].get_num();
    }
    return r;
}

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = Rational(m(i, j));
    return r;
}

RatVector multiply(const RatMatrix& m, std::span<const Rational> x)
{
    if (x.size() != m.cols())
        throw UsageError("matrix-vector product with mismatched dimensions");
    RatVector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        y[i] = dot(m.row(i), x);
    return y;
}

IntVector multiply(const IntMatrix& m, std::span<const Integer> x)
{
    if (x.size() != m.cols())
        throw UsageError("matrix-vector product with mismatched dimensions");
    IntVector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        y[i] = dot(m.row(i), x);
    return y;
}

namespace {

// Scales each row by the lcm of its denominators.
IntMatrix integral_rows(const RatMatrix& m)
{
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (const auto& x : m.row(i))
            l = lcm(l, x.get_den());
        for (std::size_t j = 0; j < m.cols(); ++j)
            r(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return r;
}

// In-place Bareiss elimination to row echelon form. Returns the pivot columns.
// Every entry stays an integer (a minor of the input).
std::vector<std::size_t> bareiss_echelon(IntMatrix& m, std::size_t ncols_to_pivot)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < ncols_to_pivot && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                m(i, j) = m(r, c) * m(i, j) - m(i, c) * m(r, j);
                mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            m(i, c) = 0;
        }
        prev = m(r, c);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::size_t rank(const IntMatrix& m)
{
    IntMatrix work = m;
    return bareiss_echelon(work, work.cols()).size();
}

std::size_t rank(const RatMatrix& m)
{
    return rank(integral_rows(m));
}

std::size_t rank_of_rows(const std::vector<IntVector>& rows, std::size_t dim)
{
    if (rows.empty())
        return 0;
    return rank(IntMatrix::from_rows(rows, dim));
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw UsageError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && sgn(a(p, k)) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(k, k) * a(i, j) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b)
{
    if (b.size() != m.rows())
        throw UsageError("solve: right-hand side has length " + std::to_string(b.size()) + " but matrix has " +
                         std::to_string(m.rows()) + " rows");
    const std::size_t n = m.cols();
    RatMatrix aug(m.rows(), n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    IntMatrix work = integral_rows(aug);
    const auto pivots = bareiss_echelon(work, n);
    for (std::size_t i = pivots.size(); i < work.rows(); ++i)
        if (sgn(work(i, n)) != 0)
            return std::nullopt;

    RatVector x(n, Rational(0));
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t c = pivots[k];
        Rational s(work(k, n));
        for (std::size_t j = c + 1; j < n; ++j)
            if (sgn(work(k, j)) != 0)
                s -= Rational(work(k, j)) * x[j];
        x[c] = s / Rational(work(k, c));
    }
    return x;
}

std::vector<IntVector> nullspace(const IntMatrix& m)
{
    const std::size_t n = m.cols();
    RatMatrix a = to_rational(m);
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && sgn(a(p, c)) == 0)
            ++p;
        if (p == a.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(r, j));
        const Rational piv = a(r, c);
        for (std::size_t j = 0; j < n; ++j)
            a(r, j) /= piv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || sgn(a(i, c)) == 0)
                continue;
            const Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots)
        is_pivot[c] = true;

    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        RatVector v(n, Rational(0));
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -a(k, f);
        basis.push_back(clear_denominators(v).vector);
    }
    return basis;
}

ScaledVector clear_denominators(const RatVector& v)
{
    if (is_zero(std::span<const Rational>(v)))
        throw UsageError("clear_denominators of the zero vector");
    Integer l = 1;
    for (const auto& x : v)
        l = lcm(l, x.get_den());
    IntVector iv(v.size());
    Integer g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        iv[i] = v[i].get_num() * (l / v[i].get_den());
        g = gcd(g, iv[i]);
    }
    for (auto& x : iv)
        x /= g;
    Rational scale(l, g);
    scale.canonicalize();
    return {std::move(iv), scale};
}

ColumnEchelon column_echelon(const IntMatrix& m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    ColumnEchelon out;
    out.echelon = m;
    out.transform = IntMatrix(cols, cols);
    for (std::size_t i = 0; i < cols; ++i)
        out.transform(i, i) = 1;
    IntMatrix& e = out.echelon;
    IntMatrix& u = out.transform;

    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows; ++i)
            std::swap(e(i, a), e(i, b));
        for (std::size_t i = 0; i < cols; ++i)
            std::swap(u(i, a), u(i, b));
    };
    // (col_a, col_b) <- (s·a + t·b, p·a + q·b) with s·q − t·p = 1
    auto combine = [&](std::size_t a, std::size_t b, const Integer& s, const Integer& t, const Integer& p,
                       const Integer& q) {
        for (std::size_t i = 0; i < rows; ++i) {
            Integer x = e(i, a), y = e(i, b);
            e(i, a) = s * x + t * y;
            e(i, b) = p * x + q * y;
        }
        for (std::size_t i = 0; i < cols; ++i) {
            Integer x = u(i, a), y = u(i, b);
            u(i, a) = s * x + t * y;
            u(i, b) = p * x + q * y;
        }
    };

    std::size_t col = 0;
    for (std::size_t i = 0; i < rows && col < cols; ++i) {
        for (std::size_t j = col + 1; j < cols; ++j) {
            if (sgn(e(i, j)) == 0)
                continue;
            if (sgn(e(i, col)) == 0) {
                swap_cols(col, j);
                continue;
            }
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), e(i, col).get_mpz_t(), e(i, j).get_mpz_t());
            Integer p = -(e(i, j) / g);
            Integer q = e(i, col) / g;
            combine(col, j, s, t, p, q);
        }
        if (sgn(e(i, col)) != 0) {
            if (sgn(e(i, col)) < 0) {
                for (std::size_t k = 0; k < rows; ++k)
                    e(k, col) = -e(k, col);
                for (std::size_t k = 0; k < cols; ++k)
                    u(k, col) = -u(k, col);
            }
            out.pivot_rows.push_back(i);
            ++col;
        }
    }
    out.rank = col;
    return out;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m)
{
    const auto ce = column_echelon(m);
    std::vector<IntVector> basis;
    for (std::size_t c = ce.rank; c < m.cols(); ++c)
        basis.push_back(ce.transform.column_vector(c));
    return basis;
}

std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b)
{
    if (b.size() != m.rows())
        throw UsageError("solve_integer: right-hand side length mismatch");
    const auto ce = column_echelon(m);
    IntVector y(m.cols(), Integer(0));
    for (std::size_t c = 0; c < ce.rank; ++c) {
        const std::size_t p = ce.pivot_rows[c];
        Integer s = b[p];
        for (std::size_t k = 0; k < c; ++k)
            s -= ce.echelon(p, k) * y[k];
        if (!mpz_divisible_p(s.get_mpz_t(), ce.echelon(p, c).get_mpz_t()))
            return std::nullopt;
        y[c] = s / ce.echelon(p, c);
    }
    if (multiply(ce.echelon, y) != b)
        return std::nullopt;
    return multiply(ce.transform, y);
}

IntMatrix unimodular_inverse(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw UsageError("inverse of a non-square matrix");
    IntMatrix inv(n, n);
    RatMatrix rm = to_rational(m);
    for (std::size_t j = 0; j < n; ++j) {
        RatVector e(n, Rational(0));
        e[j] = 1;
        auto x = solve(rm, e);
        if (!x)
            throw UsageError("matrix is singular");
        auto xi = to_integer(*x);
        if (!xi)
            throw UsageError("matrix is not unimodular");
        for (std::size_t i = 0; i < n; ++i)
            inv(i, j) = (*xi)[i];
    }
    return inv;
}

namespace {
template <typename T>
std::string format_vector(std::span<const T> v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}
} // namespace

std::string to_string(std::span<const Integer> v) { return format_vector(v); }
std::string to_string(std::span<const Rational> v) { return format_vector(v); }

} // namespace clutterlab
