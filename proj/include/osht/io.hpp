#pragma once

#include <string>
#include <vector>

#include "osht/bench.hpp"
#include "osht/types.hpp"

namespace osht {

/// Scientific notation with 17 significant digits ("%.16e"): doubles
/// round-trip exactly and equal inputs render to equal bytes.
std::string format_real(Real value);

// Renderers produce the exact bytes the corresponding writer puts on disk.

/// Scheme files are JSON: {"bandlimit": L, "method": "...", "theta": [...]}.
std::string render_scheme(const SamplingScheme& scheme);
void write_scheme(const std::string& path, const SamplingScheme& scheme);

/// Readers validate shape and reject files whose theta is not a permutation
/// of the candidate grid (absolute tolerance 1e-12 per angle).
SamplingScheme read_scheme(const std::string& path);

/// Coefficient files are CSV "l,m,re,im", one row per coefficient in flat
/// order (sorted by l^2 + l + m).
std::string render_coeffs(const HarmonicCoeffs& coeffs);
void write_coeffs(const std::string& path, const HarmonicCoeffs& coeffs);
HarmonicCoeffs read_coeffs(const std::string& path);

/// Signal files are CSV "ring,j,re,im", ring-major, j ascending within a ring.
std::string render_signal(const SpatialSignal& signal);
void write_signal(const std::string& path, const SpatialSignal& signal);
SpatialSignal read_signal(const std::string& path);

// Benchmark datasets.  Singular cells render their infinities as "inf".

std::string render_cond_csv(const ConditioningData& data);       // L,method,m,kappa
std::string render_cond_max_csv(const ConditioningData& data);   // L,method,kappa_max
std::string render_accuracy_csv(const std::vector<BenchRecord>& records);
    // L,method,trial,E_max,passes,E_max_final
std::string render_multipass_csv(const std::vector<BenchRecord>& records);
    // L,method,trial,pass,E_max_k,residual_max
void write_text(const std::string& path, const std::string& content);

}  // namespace osht
