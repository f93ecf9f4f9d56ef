#include "ncwave/complex_matrix.hpp"

#include <cmath>

#include "ncwave/errors.hpp"

namespace ncwave {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols)
        throw DimensionError("ComplexMatrix: data length does not match shape");
    validate();
}

void ComplexMatrix::validate() const {
    for (const auto& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw DomainError("ComplexMatrix: non-finite entry");
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("ComplexMatrix: shape mismatch in +=");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
    for (auto& v : data_) v *= scale;
    return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
    if (cols_ != other.rows_) throw DimensionError("ComplexMatrix: shape mismatch in *");
    ComplexMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            cplx a = at(i, k);
            if (a == cplx{}) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

double hs_norm_sq(const ComplexMatrix& m) {
    double acc = 0.0;
    for (const auto& v : m.data()) acc += std::norm(v);
    return acc;
}

} // namespace ncwave
