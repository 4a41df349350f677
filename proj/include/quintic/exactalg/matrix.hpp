#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "quintic/exactalg/scalar.hpp"

namespace quintic::exactalg {

using Vector = std::vector<Scalar>;

/// Row-major dense matrix over a single field. A matrix with zero rows is
/// allowed (the empty constraint system) and still carries its column count.
class DenseMatrix {
public:
    DenseMatrix(Field field, std::size_t rows, std::size_t cols);

    /// Every entry must carry `field`; throws InputError otherwise.
    DenseMatrix(Field field, std::size_t cols, const std::vector<Vector>& rows);

    static DenseMatrix identity(Field field, std::size_t n);
    static DenseMatrix from_ints(Field field, std::size_t cols, const std::vector<std::vector<long>>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vector row_vector(std::size_t r) const;

    void append_row(std::span<const Scalar> row);
    void append_rows(const DenseMatrix& other);

    DenseMatrix transpose() const;
    DenseMatrix operator*(const DenseMatrix& o) const;
    Vector apply(std::span<const Scalar> v) const;

    bool is_zero() const;

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

}  // namespace quintic::exactalg
