#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ncwave/gabor.hpp"
#include "ncwave/signal.hpp"

namespace ncwave {

/// Binary signal container, little-endian:
///   magic "NCWV1" (5 bytes)
///   u8  kind tag (0 Euclidean, 1 Heisenberg1, 2 Motion2, 3 ProductRFinite)
///   u32 axis count
///   per axis: f64 lo, f64 hi, u64 n   (finite axes encode lo=0, hi=m, n=m)
///   payload: row-major complex samples, (f64 re, f64 im) each.
/// Readers validate magic, tag, axis shape and payload length (FormatError).
void write_signal(std::ostream& out, const SampledSignal& f);
void write_signal_file(const std::string& path, const SampledSignal& f);

/// Reconstructs the group from the header. Motion2/Heisenberg1/ProductRFinite
/// axis conventions follow the factories in group.hpp.
SampledSignal read_signal(std::istream& in);
SampledSignal read_signal_file(const std::string& path);

/// Gabor field dump: "NCWG1", base dims/strides, dual size, then the
/// row-major complex coefficient array (scalar kinds) or stacked blocks.
void write_gabor_field(std::ostream& out, const GaborField& field);
void write_gabor_field_file(const std::string& path, const GaborField& field);

/// FNV-1a 64-bit, printed as 16 hex digits. Stable across platforms/runs.
std::uint64_t fnv1a64(const std::string& bytes);
std::string fingerprint_hex(const std::string& bytes);

} // namespace ncwave
