#include "ncwave/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "ncwave/errors.hpp"

namespace ncwave {

namespace {
// FFTW plan creation is not thread-safe; execution of independent plans is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

void fft_forward(std::vector<cplx>& data) {
    if (data.empty()) throw DimensionError("fft_forward: empty input");
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_dft_1d(int(data.size()), p, p, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    fftw_execute(plan);
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
}

void fft_axis(std::vector<cplx>& data, const std::vector<std::size_t>& dims, std::size_t axis) {
    if (axis >= dims.size()) throw DimensionError("fft_axis: axis out of range");
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    if (total != data.size()) throw DimensionError("fft_axis: dims do not match data size");
    std::size_t n = dims[axis];
    std::size_t inner = 1;
    for (std::size_t a = axis + 1; a < dims.size(); ++a) inner *= dims[a];
    std::size_t outer = total / (n * inner);

    // advanced interface: `outer` blocks, each holding `inner` interleaved
    // transforms of length n with stride `inner`
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    int ni = int(n);
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(plan_mutex());
        plan = fftw_plan_many_dft(1, &ni, int(inner), p, nullptr, int(inner), 1, p, nullptr,
                                  int(inner), 1, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    }
    for (std::size_t o = 0; o < outer; ++o) {
        auto* block = reinterpret_cast<fftw_complex*>(data.data() + o * n * inner);
        fftw_execute_dft(plan, block, block);
    }
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
}

} // namespace ncwave
