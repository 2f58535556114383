#include "ufmt/kernels.hpp"

#if defined(UFMT_HAVE_AVX2)

#include <immintrin.h>

namespace ufmt::kern::detail {

// Outer-product accumulation over j for each fixed i, 4 complex doubles
// per step. c[i+j] += a[i]*b[j] with split re/im arrays.
void conv_trunc_avx2(const double* are, const double* aim, std::size_t na,
                     const double* bre, const double* bim, std::size_t nb,
                     double* cre, double* cim, std::size_t nc) {
  for (std::size_t k = 0; k < nc; ++k) {
    cre[k] = 0.0;
    cim[k] = 0.0;
  }
  const std::size_t imax = na < nc ? na : nc;
  for (std::size_t i = 0; i < imax; ++i) {
    const __m256d ar = _mm256_set1_pd(are[i]);
    const __m256d ai = _mm256_set1_pd(aim[i]);
    const std::size_t jmax = nb < nc - i ? nb : nc - i;
    double* cr = cre + i;
    double* ci = cim + i;
    std::size_t j = 0;
    for (; j + 4 <= jmax; j += 4) {
      const __m256d br = _mm256_loadu_pd(bre + j);
      const __m256d bi = _mm256_loadu_pd(bim + j);
      __m256d accr = _mm256_loadu_pd(cr + j);
      __m256d acci = _mm256_loadu_pd(ci + j);
      accr = _mm256_fmadd_pd(ar, br, accr);
      accr = _mm256_fnmadd_pd(ai, bi, accr);
      acci = _mm256_fmadd_pd(ar, bi, acci);
      acci = _mm256_fmadd_pd(ai, br, acci);
      _mm256_storeu_pd(cr + j, accr);
      _mm256_storeu_pd(ci + j, acci);
    }
    const double sar = are[i];
    const double sai = aim[i];
    for (; j < jmax; ++j) {
      cr[j] += sar * bre[j] - sai * bim[j];
      ci[j] += sar * bim[j] + sai * bre[j];
    }
  }
}

void horner_many_avx2(const double* cre, const double* cim, std::size_t nc,
                      const double* zre, const double* zim, std::size_t npts,
                      double* wre, double* wim) {
  if (nc == 0) {
    for (std::size_t p = 0; p < npts; ++p) {
      wre[p] = 0.0;
      wim[p] = 0.0;
    }
    return;
  }
  std::size_t p = 0;
  for (; p + 4 <= npts; p += 4) {
    const __m256d zr = _mm256_loadu_pd(zre + p);
    const __m256d zi = _mm256_loadu_pd(zim + p);
    __m256d ar = _mm256_set1_pd(cre[nc - 1]);
    __m256d ai = _mm256_set1_pd(cim[nc - 1]);
    for (std::size_t n = nc - 1; n-- > 0;) {
      const __m256d cr = _mm256_set1_pd(cre[n]);
      const __m256d ci = _mm256_set1_pd(cim[n]);
      __m256d tr = _mm256_fmadd_pd(ar, zr, cr);
      tr = _mm256_fnmadd_pd(ai, zi, tr);
      __m256d ti = _mm256_fmadd_pd(ar, zi, ci);
      ti = _mm256_fmadd_pd(ai, zr, ti);
      ar = tr;
      ai = ti;
    }
    _mm256_storeu_pd(wre + p, ar);
    _mm256_storeu_pd(wim + p, ai);
  }
  if (p < npts) {
    horner_many_scalar(cre, cim, nc, zre + p, zim + p, npts - p, wre + p,
                       wim + p);
  }
}

void abs_many_avx2(const double* wre, const double* wim, std::size_t n,
                   double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d re = _mm256_loadu_pd(wre + i);
    const __m256d im = _mm256_loadu_pd(wim + i);
    const __m256d s = _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(s));
  }
  if (i < n) {
    abs_many_scalar(wre + i, wim + i, n - i, out + i);
  }
}

}  // namespace ufmt::kern::detail

#endif  // UFMT_HAVE_AVX2
