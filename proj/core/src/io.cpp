#include "ncwave/io.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "ncwave/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "signal container assumes a little-endian host");

namespace ncwave {

namespace {
constexpr char kSignalMagic[5] = {'N', 'C', 'W', 'V', '1'};
constexpr char kFieldMagic[5] = {'N', 'C', 'W', 'G', '1'};
constexpr double kPi = 3.14159265358979323846;

template <typename T>
void write_raw(std::ostream& out, const T& v) {
    out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T read_raw(std::istream& in, const char* what) {
    T v;
    in.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!in) throw FormatError(std::string("signal container truncated at ") + what);
    return v;
}

std::uint8_t kind_tag(GroupKind k) {
    switch (k) {
        case GroupKind::Euclidean: return 0;
        case GroupKind::Heisenberg1: return 1;
        case GroupKind::Motion2: return 2;
        case GroupKind::ProductRFinite: return 3;
    }
    return 255;
}
} // namespace

void write_signal(std::ostream& out, const SampledSignal& f) {
    if (!f.group) throw PreconditionError("write_signal: empty signal");
    out.write(kSignalMagic, sizeof kSignalMagic);
    write_raw(out, kind_tag(f.group->kind()));
    write_raw(out, std::uint32_t(f.group->axes().size()));
    for (const auto& ax : f.group->axes()) {
        write_raw(out, ax.grid.lo());
        write_raw(out, ax.grid.hi());
        write_raw(out, std::uint64_t(ax.grid.size()));
    }
    for (const cplx& z : f.values) {
        write_raw(out, z.real());
        write_raw(out, z.imag());
    }
    if (!out) throw Error("write_signal: stream write failed");
}

void write_signal_file(const std::string& path, const SampledSignal& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_signal_file: cannot open " + path);
    write_signal(out, f);
}

SampledSignal read_signal(std::istream& in) {
    char magic[5];
    in.read(magic, sizeof magic);
    if (!in || std::memcmp(magic, kSignalMagic, sizeof magic) != 0)
        throw FormatError("read_signal: bad magic");
    std::uint8_t tag = read_raw<std::uint8_t>(in, "kind tag");
    if (tag > 3) throw FormatError("read_signal: unknown kind tag");
    std::uint32_t n_axes = read_raw<std::uint32_t>(in, "axis count");
    struct RawAxis {
        double lo, hi;
        std::uint64_t n;
    };
    std::vector<RawAxis> raw(n_axes);
    for (auto& a : raw) {
        a.lo = read_raw<double>(in, "axis lo");
        a.hi = read_raw<double>(in, "axis hi");
        a.n = read_raw<std::uint64_t>(in, "axis size");
        if (!(a.lo < a.hi) || a.n < 2 || a.n > (1u << 28))
            throw FormatError("read_signal: bad axis header");
    }
    std::shared_ptr<const GroupSpec> group;
    switch (tag) {
        case 0: {
            if (n_axes < 1 || n_axes > 3) throw FormatError("read_signal: bad axis count");
            std::vector<Grid1D> axes;
            for (const auto& a : raw)
                axes.push_back(Grid1D::periodic(a.lo, a.hi, std::size_t(a.n)));
            group = make_euclidean(std::move(axes));
            break;
        }
        case 1: {
            if (n_axes != 3) throw FormatError("read_signal: bad axis count");
            group = make_heisenberg1(Grid1D::periodic(raw[0].lo, raw[0].hi, std::size_t(raw[0].n)),
                                     Grid1D::periodic(raw[1].lo, raw[1].hi, std::size_t(raw[1].n)),
                                     Grid1D::periodic(raw[2].lo, raw[2].hi, std::size_t(raw[2].n)));
            break;
        }
        case 2: {
            if (n_axes != 3) throw FormatError("read_signal: bad axis count");
            if (std::abs(raw[0].lo) > 1e-12 || std::abs(raw[0].hi - 2.0 * kPi) > 1e-12)
                throw FormatError("read_signal: rotation axis must cover [0, 2*pi)");
            group = make_motion2(std::size_t(raw[0].n),
                                 Grid1D::periodic(raw[1].lo, raw[1].hi, std::size_t(raw[1].n)),
                                 Grid1D::periodic(raw[2].lo, raw[2].hi, std::size_t(raw[2].n)));
            break;
        }
        case 3: {
            if (n_axes != 2) throw FormatError("read_signal: bad axis count");
            if (raw[1].lo != 0.0 || raw[1].hi != double(raw[1].n))
                throw FormatError("read_signal: finite axis must encode lo=0, hi=m, n=m");
            group = make_product_rfinite(
                Grid1D::periodic(raw[0].lo, raw[0].hi, std::size_t(raw[0].n)),
                std::size_t(raw[1].n));
            break;
        }
    }
    std::vector<cplx> values(group->total_points());
    for (auto& z : values) {
        double re = read_raw<double>(in, "payload");
        double im = read_raw<double>(in, "payload");
        z = cplx(re, im);
    }
    try {
        return SampledSignal(std::move(group), std::move(values));
    } catch (const DomainError&) {
        throw FormatError("read_signal: non-finite sample in payload");
    }
}

SampledSignal read_signal_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("read_signal_file: cannot open " + path);
    return read_signal(in);
}

void write_gabor_field(std::ostream& out, const GaborField& field) {
    if (!field.group) throw PreconditionError("write_gabor_field: empty field");
    out.write(kFieldMagic, sizeof kFieldMagic);
    write_raw(out, std::uint8_t(field.scalar ? 1 : 0));
    write_raw(out, std::uint32_t(field.base_dims.size()));
    for (std::size_t a = 0; a < field.base_dims.size(); ++a) {
        write_raw(out, std::uint64_t(field.base_dims[a]));
        write_raw(out, std::uint64_t(field.base.strides[a]));
    }
    write_raw(out, std::uint64_t(field.dual.size()));
    std::uint64_t dim = field.scalar ? 0 : field.dual.matrix_dim();
    write_raw(out, dim);
    if (field.scalar) {
        for (const cplx& z : field.coeffs) {
            write_raw(out, z.real());
            write_raw(out, z.imag());
        }
    } else {
        for (const auto& blk : field.coeff_blocks)
            for (const cplx& z : blk.data()) {
                write_raw(out, z.real());
                write_raw(out, z.imag());
            }
    }
    if (!out) throw Error("write_gabor_field: stream write failed");
}

void write_gabor_field_file(const std::string& path, const GaborField& field) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("write_gabor_field_file: cannot open " + path);
    write_gabor_field(out, field);
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fingerprint_hex(const std::string& bytes) {
    std::uint64_t h = fnv1a64(bytes);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace ncwave
