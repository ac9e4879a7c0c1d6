#include "skcat/matrix.hpp"

#include <algorithm>
#include <optional>

namespace skcat {

Mat Mat::identity(Field f, std::size_t n)
{
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(f);
    return m;
}

void Mat::set(std::size_t i, std::size_t j, const Scalar& v)
{
    if (v.field() != field_)
        throw InputError("mixed-field matrix entry: " + v.field().name() + " into " + field_.name());
    (*this)(i, j) = v;
}

std::vector<Scalar> Mat::operator*(const std::vector<Scalar>& v) const
{
    if (v.size() != cols_)
        throw InputError("matrix-vector size mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(i, j).is_zero() && !v[j].is_zero())
                out[i] += (*this)(i, j) * v[j];
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, col).is_zero())
            ++pr;
        if (pr == m.rows())
            continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(row, j), m(pr, j));
        Scalar inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j)
            m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero())
                continue;
            Scalar factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero())
                    m(i, j) -= factor * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::size_t rank(Mat m)
{
    return rref(m).size();
}

std::vector<std::vector<Scalar>> nullspace_basis(const Mat& m)
{
    Mat e = m;
    std::vector<std::size_t> pivots = rref(e);
    Field f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(f));
        v[free] = Scalar::one(f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -e(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const Mat& m, const std::vector<Scalar>& b)
{
    if (b.size() != m.rows())
        throw InputError("solve: rhs size mismatch");
    Field f = m.field();
    Mat aug(f, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug(i, j) = m(i, j);
        aug.set(i, m.cols(), b[i]);
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt; // row [0 ... 0 | 1]
    std::vector<Scalar> x(m.cols(), Scalar::zero(f));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, m.cols());
    return x;
}

IntMat IntMat::identity(std::size_t n)
{
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const
{
    IntMat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Mat IntMat::over(Field f) const
{
    Mat m(f, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0)
                m(i, j) = Scalar::of_int(f, (*this)(i, j));
    return m;
}

IntMat mul(const IntMat& a, const IntMat& b)
{
    if (a.cols() != b.rows())
        throw InputError("integer matrix product: size mismatch");
    IntMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b(k, j) != 0)
                    c(i, j) += aik * b(k, j);
        }
    return c;
}

Int determinant(IntMat a)
{
    if (a.rows() != a.cols())
        throw InputError("determinant of non-square matrix");
    std::size_t n = a.rows();
    if (n == 0)
        return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pr = k;
        while (pr < n && a(pr, k) == 0)
            ++pr;
        if (pr == n)
            return 0;
        if (pr != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(k, j), a(pr, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

struct SnfWork {
    IntMat d, u, v;

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < d.cols(); ++j)
            std::swap(d(a, j), d(b, j));
        for (std::size_t j = 0; j < u.cols(); ++j)
            std::swap(u(a, j), u(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < d.rows(); ++i)
            std::swap(d(i, a), d(i, b));
        for (std::size_t i = 0; i < v.rows(); ++i)
            std::swap(v(i, a), v(i, b));
    }

    // row a -= q * row b
    void add_row(std::size_t a, std::size_t b, const Int& q)
    {
        if (q == 0)
            return;
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (d(b, j) != 0)
                d(a, j) -= q * d(b, j);
        for (std::size_t j = 0; j < u.cols(); ++j)
            if (u(b, j) != 0)
                u(a, j) -= q * u(b, j);
    }

    // col a -= q * col b
    void add_col(std::size_t a, std::size_t b, const Int& q)
    {
        if (q == 0)
            return;
        for (std::size_t i = 0; i < d.rows(); ++i)
            if (d(i, b) != 0)
                d(i, a) -= q * d(i, b);
        for (std::size_t i = 0; i < v.rows(); ++i)
            if (v(i, b) != 0)
                v(i, a) -= q * v(i, b);
    }

    void negate_row(std::size_t a)
    {
        for (std::size_t j = 0; j < d.cols(); ++j)
            d(a, j) = -d(a, j);
        for (std::size_t j = 0; j < u.cols(); ++j)
            u(a, j) = -u(a, j);
    }
};

// Smallest nonzero |entry| in the trailing submatrix, ties by (row, col).
bool find_pivot(const IntMat& d, std::size_t t, std::size_t& pi, std::size_t& pj)
{
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0)
                continue;
            Int v = abs(d(i, j));
            if (!found || v < best) {
                found = true;
                best = v;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithResult smith_normal_form(const IntMat& m)
{
    SnfWork w{m, IntMat::identity(m.rows()), IntMat::identity(m.cols())};
    std::size_t t = 0;
    std::size_t bound = std::min(m.rows(), m.cols());
    for (; t < bound; ++t) {
        std::size_t pi = 0, pj = 0;
        if (!find_pivot(w.d, t, pi, pj))
            break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            // Clear column t below the pivot.
            for (std::size_t i = t + 1; i < w.d.rows(); ++i) {
                if (w.d(i, t) == 0)
                    continue;
                Int q = w.d(i, t) / w.d(t, t);
                w.add_row(i, t, q);
                if (w.d(i, t) != 0) { // remainder is a smaller pivot
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            // Clear row t right of the pivot.
            for (std::size_t j = t + 1; j < w.d.cols(); ++j) {
                if (w.d(t, j) == 0)
                    continue;
                Int q = w.d(t, j) / w.d(t, t);
                w.add_col(j, t, q);
                if (w.d(t, j) != 0) {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty)
                continue;
            // Column swaps above can reintroduce entries below the pivot.
            bool clean = true;
            for (std::size_t i = t + 1; i < w.d.rows() && clean; ++i)
                if (w.d(i, t) != 0)
                    clean = false;
            if (!clean)
                continue;
            // Pivot must divide the whole trailing submatrix.
            bool divides = true;
            for (std::size_t i = t + 1; i < w.d.rows() && divides; ++i)
                for (std::size_t j = t + 1; j < w.d.cols() && divides; ++j)
                    if (w.d(i, j) % w.d(t, t) != 0) {
                        w.add_row(t, i, Int(-1)); // pull row i into row t
                        divides = false;
                    }
            if (divides)
                break;
        }
        if (w.d(t, t) < 0)
            w.negate_row(t);
    }

    SmithResult res{std::move(w.u), std::move(w.d), std::move(w.v), t, {}};
    for (std::size_t i = 0; i < t; ++i)
        res.diagonal.push_back(res.d(i, i));

    // d = u * m * v, unimodularity, divisibility: checked on every call.
    if (!(mul(res.u, mul(m, res.v)) == res.d))
        throw std::logic_error("smith_normal_form: U*M*V != D");
    Int du = determinant(res.u), dv = determinant(res.v);
    if (!(du == 1 || du == -1) || !(dv == 1 || dv == -1))
        throw std::logic_error("smith_normal_form: transform not unimodular");
    for (std::size_t i = 0; i + 1 < res.diagonal.size(); ++i)
        if (res.diagonal[i + 1] % res.diagonal[i] != 0)
            throw std::logic_error("smith_normal_form: divisibility chain broken");
    return res;
}

IntMat reduce_row_lattice(const IntMat& m)
{
    // Collect distinct nonzero rows.
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Int> r(m.cols());
        bool zero = true;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r[j] = m(i, j);
            if (r[j] != 0)
                zero = false;
        }
        if (!zero)
            rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    // Integer row echelon by gcd steps.
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
                    best = i;
            if (best == rows.size())
                break; // no pivot in this column
            bool again = false;
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (i == best || rows[i][c] == 0)
                    continue;
                Int q = rows[i][c] / rows[best][c];
                for (std::size_t j = c; j < m.cols(); ++j)
                    rows[i][j] -= q * rows[best][j];
                if (rows[i][c] != 0)
                    again = true;
            }
            if (!again) {
                std::swap(rows[r], rows[best]);
                if (rows[r][c] < 0)
                    for (std::size_t j = c; j < m.cols(); ++j)
                        rows[r][j] = -rows[r][j];
                ++r;
                break;
            }
        }
    }
    while (rows.size() > r) // rows below the echelon are now zero
        rows.pop_back();

    IntMat out(rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = rows[i][j];
    return out;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b)
{
    if (b.size() != m.rows())
        throw InputError("solve_integer: rhs size mismatch");
    SmithResult s = smith_normal_form(m);
    // m x = b  <=>  d y = u b with x = v y.
    std::vector<Int> ub(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.rows(); ++j)
            if (s.u(i, j) != 0 && b[j] != 0)
                ub[i] += s.u(i, j) * b[j];
    std::vector<Int> y(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.d(i, i) != 0)
                return std::nullopt;
            y[i] = ub[i] / s.d(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    std::vector<Int> x(m.cols());
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (s.v(i, j) != 0 && y[j] != 0)
                x[i] += s.v(i, j) * y[j];
    return x;
}

} // namespace skcat
