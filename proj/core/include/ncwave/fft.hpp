#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ncwave {

using cplx = std::complex<double>;

/// In-place forward DFT (sum_j x_j e^{-2 pi i jk/n}), any length.
void fft_forward(std::vector<cplx>& data);

/// Forward DFT along one axis of a row-major tensor; `dims` are the tensor
/// dimensions, `axis` indexes into them.
void fft_axis(std::vector<cplx>& data, const std::vector<std::size_t>& dims, std::size_t axis);

} // namespace ncwave
