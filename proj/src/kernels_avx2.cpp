#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "lisurf/kernels.hpp"

namespace lisurf::kernels::avx2 {

namespace {

#define LISURF_AVX2 __attribute__((target("avx2")))

struct Cols {
    __m256d c0, c1, c2, c3;
};

// Four consecutive Vec31 -> coordinate columns.
LISURF_AVX2 inline Cols load4(const Vec31* v) {
    const __m256d r0 = _mm256_loadu_pd(v[0].c.data());
    const __m256d r1 = _mm256_loadu_pd(v[1].c.data());
    const __m256d r2 = _mm256_loadu_pd(v[2].c.data());
    const __m256d r3 = _mm256_loadu_pd(v[3].c.data());
    const __m256d t0 = _mm256_unpacklo_pd(r0, r1);
    const __m256d t1 = _mm256_unpackhi_pd(r0, r1);
    const __m256d t2 = _mm256_unpacklo_pd(r2, r3);
    const __m256d t3 = _mm256_unpackhi_pd(r2, r3);
    return {_mm256_permute2f128_pd(t0, t2, 0x20), _mm256_permute2f128_pd(t1, t3, 0x20),
            _mm256_permute2f128_pd(t0, t2, 0x31), _mm256_permute2f128_pd(t1, t3, 0x31)};
}

LISURF_AVX2 inline __m256d form4(const Cols& a, const Cols& b) {
    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d s = _mm256_xor_pd(_mm256_mul_pd(a.c0, b.c0), sign);
    s = _mm256_add_pd(s, _mm256_mul_pd(a.c1, b.c1));
    s = _mm256_add_pd(s, _mm256_mul_pd(a.c2, b.c2));
    s = _mm256_add_pd(s, _mm256_mul_pd(a.c3, b.c3));
    return s;
}

LISURF_AVX2 inline __m256d euclid4(const Cols& a) {
    __m256d s = _mm256_mul_pd(a.c0, a.c0);
    s = _mm256_add_pd(s, _mm256_mul_pd(a.c1, a.c1));
    s = _mm256_add_pd(s, _mm256_mul_pd(a.c2, a.c2));
    s = _mm256_add_pd(s, _mm256_mul_pd(a.c3, a.c3));
    return s;
}

LISURF_AVX2 inline __m256d abs4(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

LISURF_AVX2 inline double hmax(__m256d x) {
    alignas(32) double t[4];
    _mm256_store_pd(t, x);
    return std::max(std::max(t[0], t[1]), std::max(t[2], t[3]));
}

}  // namespace

LISURF_AVX2 void pairings(const Vec31* a, const Vec31* b, double* out, std::size_t n) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) _mm256_storeu_pd(out + k, form4(load4(a + k), load4(b + k)));
    scalar::pairings(a + k, b + k, out + k, n - k);
}

LISURF_AVX2 double max_quadric_deviation(const Vec31* v, std::size_t n, double mu) {
    std::size_t k = 0;
    __m256d acc = _mm256_setzero_pd();
    const __m256d m = _mm256_set1_pd(mu);
    for (; k + 4 <= n; k += 4) {
        const Cols c = load4(v + k);
        acc = _mm256_max_pd(abs4(_mm256_sub_pd(form4(c, c), m)), acc);
    }
    return std::max(hmax(acc), scalar::max_quadric_deviation(v + k, n - k, mu));
}

LISURF_AVX2 double max_lightlike_residual(const Vec31* v, std::size_t n) {
    std::size_t k = 0;
    __m256d acc = _mm256_setzero_pd();
    const __m256d zero = _mm256_setzero_pd();
    for (; k + 4 <= n; k += 4) {
        const Cols c = load4(v + k);
        const __m256d e = euclid4(c);
        const __m256d q = _mm256_div_pd(abs4(form4(c, c)), e);
        const __m256d nonzero = _mm256_cmp_pd(e, zero, _CMP_GT_OQ);
        acc = _mm256_max_pd(_mm256_and_pd(q, nonzero), acc);
    }
    return std::max(hmax(acc), scalar::max_lightlike_residual(v + k, n - k));
}

}  // namespace lisurf::kernels::avx2
