#pragma once

#include "idlat/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace idlat {

/* Dense matrix of arbitrary precision integers, row-major.
 *
 * Row i is the lattice generator b_i: the lattice of a matrix B is
 * { z*B : z in Z^n }.
 */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t n_rows, std::size_t n_cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    explicit IntMatrix(std::vector<IntVector> const& rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(IntVector const& diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t i, std::size_t j)
    {
        return data_[i * cols_ + j];
    }
    Integer const& operator()(std::size_t i, std::size_t j) const
    {
        return data_[i * cols_ + j];
    }

    std::span<Integer> row(std::size_t i)
    {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<Integer const> row(std::size_t i) const
    {
        return {data_.data() + i * cols_, cols_};
    }

    IntVector row_vector(std::size_t i) const;
    IntVector col_vector(std::size_t j) const;
    void set_row(std::size_t i, std::span<Integer const> v);

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    /* row i -= k * row j */
    void row_submul(std::size_t i, Integer const& k, std::size_t j);
    /* col i -= k * col j */
    void col_submul(std::size_t i, Integer const& k, std::size_t j);

    IntMatrix transposed() const;
    IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                        std::size_t nc) const;

    bool operator==(IntMatrix const& other) const = default;

    IntMatrix& operator*=(Integer const& k);

    /* Bit length of the largest entry in absolute value. */
    std::size_t max_bits() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
IntMatrix operator*(Integer const& k, IntMatrix const& a);
/* Row vector times matrix. */
IntVector operator*(std::span<Integer const> v, IntMatrix const& a);

/* Every entry divided exactly by d; the caller guarantees divisibility. */
IntMatrix divexact(IntMatrix const& a, Integer const& d);

std::string to_string(IntMatrix const& m);

} // namespace idlat
