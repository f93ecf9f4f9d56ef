#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ncwave {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Entries must be finite; the validating
/// constructors reject NaN/Inf.
class ComplexMatrix {
public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<cplx>& data() { return data_; }
    const std::vector<cplx>& data() const { return data_; }

    /// Throws DomainError if any entry is non-finite.
    void validate() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scale);
    ComplexMatrix operator*(const ComplexMatrix& other) const;

private:
    std::size_t rows_, cols_;
    std::vector<cplx> data_;
};

/// Squared Hilbert-Schmidt (Frobenius) norm: sum of |m_ij|^2.
/// Invariant under unitary conjugation.
double hs_norm_sq(const ComplexMatrix& m);

} // namespace ncwave
