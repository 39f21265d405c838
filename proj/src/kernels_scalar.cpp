#include <algorithm>
#include <cmath>

#include "lisurf/kernels.hpp"

namespace lisurf::kernels::scalar {

namespace {

double form(const Vec31& a, const Vec31& b) {
    double s = -(a.c[0] * b.c[0]);
    s = s + a.c[1] * b.c[1];
    s = s + a.c[2] * b.c[2];
    s = s + a.c[3] * b.c[3];
    return s;
}

double euclid2(const Vec31& a) {
    double s = a.c[0] * a.c[0];
    s = s + a.c[1] * a.c[1];
    s = s + a.c[2] * a.c[2];
    s = s + a.c[3] * a.c[3];
    return s;
}

}  // namespace

void pairings(const Vec31* a, const Vec31* b, double* out, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) out[k] = form(a[k], b[k]);
}

double max_quadric_deviation(const Vec31* v, std::size_t n, double mu) {
    double r = 0.0;
    for (std::size_t k = 0; k < n; ++k) r = std::max(r, std::abs(form(v[k], v[k]) - mu));
    return r;
}

double max_lightlike_residual(const Vec31* v, std::size_t n) {
    double r = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double e = euclid2(v[k]);
        if (e > 0.0) r = std::max(r, std::abs(form(v[k], v[k])) / e);
    }
    return r;
}

}  // namespace lisurf::kernels::scalar
