#include "quintic/exactalg/matrix.hpp"

#include <sstream>

#include "quintic/errors.hpp"

namespace quintic::exactalg {

DenseMatrix::DenseMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field))
{
}

DenseMatrix::DenseMatrix(Field field, std::size_t cols, const std::vector<Vector>& rows)
    : field_(field), rows_(0), cols_(cols)
{
    data_.reserve(rows.size() * cols);
    for (const auto& r : rows)
        append_row(r);
}

DenseMatrix DenseMatrix::identity(Field field, std::size_t n)
{
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(field);
    return m;
}

DenseMatrix DenseMatrix::from_ints(Field field, std::size_t cols, const std::vector<std::vector<long>>& rows)
{
    DenseMatrix m(field, 0, cols);
    for (const auto& r : rows) {
        Vector v;
        for (long x : r)
            v.emplace_back(field, x);
        m.append_row(v);
    }
    return m;
}

Vector DenseMatrix::row_vector(std::size_t r) const
{
    auto s = row(r);
    return Vector(s.begin(), s.end());
}

void DenseMatrix::append_row(std::span<const Scalar> row)
{
    if (row.size() != cols_)
        throw InputError("row length " + std::to_string(row.size()) + " does not match " + std::to_string(cols_) +
                         " columns");
    for (const auto& x : row)
        if (x.field() != field_)
            throw InputError("mixed field tags in matrix: expected " + field_.to_string() + ", got " +
                             x.field().to_string());
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

void DenseMatrix::append_rows(const DenseMatrix& other)
{
    if (other.field_ != field_)
        throw InputError("mixed field tags when stacking matrices");
    if (other.cols_ != cols_)
        throw InputError("column mismatch when stacking matrices");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

DenseMatrix DenseMatrix::transpose() const
{
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& o) const
{
    if (o.field_ != field_)
        throw InputError("mixed field tags in matrix product");
    if (cols_ != o.rows_)
        throw InputError("shape mismatch in matrix product");
    DenseMatrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero())
                    out(i, j) += a * o(k, j);
        }
    return out;
}

Vector DenseMatrix::apply(std::span<const Scalar> v) const
{
    if (v.size() != cols_)
        throw InputError("shape mismatch in matrix-vector product");
    Vector out(rows_, Scalar::zero(field_));
    if (cols_ == 0)
        return out;
    for (std::size_t i = 0; i < rows_; ++i)
        out[i] = dot(row(i), v);
    return out;
}

bool DenseMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

bool operator==(const DenseMatrix& a, const DenseMatrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string DenseMatrix::to_string() const
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? ", " : "") << (*this)(r, c).to_string();
        os << ']';
    }
    os << ']';
    return os.str();
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b)
{
    if (a.size() != b.size())
        throw InputError("length mismatch in dot product");
    if (a.empty())
        throw InputError("dot product of empty vectors has no field");
    Scalar s = Scalar::zero(a[0].field());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero())
            s += a[i] * b[i];
    return s;
}

}  // namespace quintic::exactalg
