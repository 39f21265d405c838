#pragma once

// Batched Minkowski quadratic forms over arrays of Vec31, with a scalar
// reference implementation and an AVX2 variant chosen at runtime.
// Both evaluate -a0 b0 + a1 b1 + a2 b2 + a3 b3 left to right without
// fused operations, so their results agree bit for bit.

#include <cstddef>
#include <span>

#include "lisurf/minkowski.hpp"

namespace lisurf::kernels {

enum class Backend { scalar, avx2 };

const char* to_string(Backend b);
bool avx2_available();
/// Backend used by the dispatching entry points.
Backend active_backend();
/// Overrides dispatch (tests, benchmarks). Requesting avx2 on a CPU without
/// it falls back to scalar.
void set_backend(Backend b);
/// Restores automatic selection.
void reset_backend();

/// out[k] = (a[k], b[k]).
void pairings(std::span<const Vec31> a, std::span<const Vec31> b, std::span<double> out);
/// out[k] = (v[k], v[k]).
void quadratic_forms(std::span<const Vec31> v, std::span<double> out);
/// max_k |(v[k], v[k]) - mu|.
double max_quadric_deviation(std::span<const Vec31> v, double mu);
/// max_k |(v[k], v[k])| / |v[k]|^2 (0 for zero vectors).
double max_lightlike_residual(std::span<const Vec31> v);

namespace scalar {
void pairings(const Vec31* a, const Vec31* b, double* out, std::size_t n);
double max_quadric_deviation(const Vec31* v, std::size_t n, double mu);
double max_lightlike_residual(const Vec31* v, std::size_t n);
}  // namespace scalar

namespace avx2 {
void pairings(const Vec31* a, const Vec31* b, double* out, std::size_t n);
double max_quadric_deviation(const Vec31* v, std::size_t n, double mu);
double max_lightlike_residual(const Vec31* v, std::size_t n);
}  // namespace avx2

}  // namespace lisurf::kernels
