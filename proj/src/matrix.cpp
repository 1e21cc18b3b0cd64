#include "idlat/matrix.hpp"
#include "idlat/errors.hpp"

#include <algorithm>
#include <sstream>

namespace idlat {

IntMatrix::IntMatrix(std::size_t n_rows, std::size_t n_cols)
    : rows_(n_rows), cols_(n_cols), data_(n_rows * n_cols)
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (auto const& r : rows) {
        if (r.size() != cols_)
            throw DimensionMismatch("ragged matrix literal");
        for (long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix::IntMatrix(std::vector<IntVector> const& rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.front().size() : 0;
    data_.reserve(rows_ * cols_);
    for (auto const& r : rows) {
        if (r.size() != cols_)
            throw DimensionMismatch("ragged matrix rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(IntVector const& diag)
{
    IntMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        m(i, i) = diag[i];
    return m;
}

IntVector IntMatrix::row_vector(std::size_t i) const
{
    auto r = row(i);
    return IntVector(r.begin(), r.end());
}

IntVector IntMatrix::col_vector(std::size_t j) const
{
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

void IntMatrix::set_row(std::size_t i, std::span<Integer const> v)
{
    if (v.size() != cols_)
        throw DimensionMismatch("set_row: length mismatch");
    std::copy(v.begin(), v.end(), row(i).begin());
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    auto a = row(i);
    auto b = row(j);
    for (std::size_t k = 0; k < cols_; ++k)
        mpz_swap(a[k].get_mpz_t(), b[k].get_mpz_t());
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j)
        return;
    for (std::size_t k = 0; k < rows_; ++k)
        mpz_swap((*this)(k, i).get_mpz_t(), (*this)(k, j).get_mpz_t());
}

void IntMatrix::negate_row(std::size_t i)
{
    for (auto& x : row(i))
        mpz_neg(x.get_mpz_t(), x.get_mpz_t());
}

void IntMatrix::negate_col(std::size_t j)
{
    for (std::size_t k = 0; k < rows_; ++k) {
        auto& x = (*this)(k, j);
        mpz_neg(x.get_mpz_t(), x.get_mpz_t());
    }
}

void IntMatrix::row_submul(std::size_t i, Integer const& k, std::size_t j)
{
    if (sgn(k) == 0)
        return;
    auto dst = row(i);
    auto src = row(j);
    for (std::size_t c = 0; c < cols_; ++c)
        if (sgn(src[c]) != 0)
            submul(dst[c], k, src[c]);
}

void IntMatrix::col_submul(std::size_t i, Integer const& k, std::size_t j)
{
    if (sgn(k) == 0)
        return;
    for (std::size_t r = 0; r < rows_; ++r) {
        auto const& s = (*this)(r, j);
        if (sgn(s) != 0)
            submul((*this)(r, i), k, s);
    }
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const
{
    if (r0 + nr > rows_ || c0 + nc > cols_)
        throw DimensionMismatch("submatrix out of range");
    IntMatrix s(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j)
            s(i, j) = (*this)(r0 + i, c0 + j);
    return s;
}

IntMatrix& IntMatrix::operator*=(Integer const& k)
{
    for (auto& x : data_)
        x *= k;
    return *this;
}

std::size_t IntMatrix::max_bits() const
{
    std::size_t bits = 0;
    for (auto const& x : data_)
        if (sgn(x) != 0)
            bits = std::max(bits, mpz_sizeinbase(x.get_mpz_t(), 2));
    return bits;
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b)
{
    if (a.cols() != b.rows())
        throw DimensionMismatch("matrix product: inner dimensions differ");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto ci = c.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            auto const& aik = a(i, k);
            if (sgn(aik) == 0)
                continue;
            auto bk = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j)
                addmul(ci[j], aik, bk[j]);
        }
    }
    return c;
}

IntMatrix operator*(Integer const& k, IntMatrix const& a)
{
    IntMatrix c = a;
    c *= k;
    return c;
}

IntVector operator*(std::span<Integer const> v, IntMatrix const& a)
{
    if (v.size() != a.rows())
        throw DimensionMismatch("vector-matrix product: length mismatch");
    IntVector out(a.cols());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        if (sgn(v[k]) == 0)
            continue;
        auto ak = a.row(k);
        for (std::size_t j = 0; j < a.cols(); ++j)
            addmul(out[j], v[k], ak[j]);
    }
    return out;
}

IntMatrix divexact(IntMatrix const& a, Integer const& d)
{
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            mpz_divexact(c(i, j).get_mpz_t(), a(i, j).get_mpz_t(),
                         d.get_mpz_t());
    return c;
}

std::string to_string(IntMatrix const& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

} // namespace idlat
