#include "lisurf/kernels.hpp"

#include <atomic>

#include "lisurf/error.hpp"

namespace lisurf::kernels {

namespace {

Backend detect() { return avx2_available() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend>& current() {
    static std::atomic<Backend> b{detect()};
    return b;
}

}  // namespace

const char* to_string(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend active_backend() { return current().load(); }

void set_backend(Backend b) { current().store(b == Backend::avx2 && !avx2_available() ? Backend::scalar : b); }

void reset_backend() { current().store(detect()); }

void pairings(std::span<const Vec31> a, std::span<const Vec31> b, std::span<double> out) {
    if (a.size() != b.size() || out.size() != a.size()) throw InputError("kernels::pairings: size mismatch");
    if (active_backend() == Backend::avx2) avx2::pairings(a.data(), b.data(), out.data(), a.size());
    else scalar::pairings(a.data(), b.data(), out.data(), a.size());
}

void quadratic_forms(std::span<const Vec31> v, std::span<double> out) { pairings(v, v, out); }

double max_quadric_deviation(std::span<const Vec31> v, double mu) {
    if (active_backend() == Backend::avx2) return avx2::max_quadric_deviation(v.data(), v.size(), mu);
    return scalar::max_quadric_deviation(v.data(), v.size(), mu);
}

double max_lightlike_residual(std::span<const Vec31> v) {
    if (active_backend() == Backend::avx2) return avx2::max_lightlike_residual(v.data(), v.size());
    return scalar::max_lightlike_residual(v.data(), v.size());
}

}  // namespace lisurf::kernels
