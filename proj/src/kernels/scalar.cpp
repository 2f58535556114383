#include "ufmt/kernels.hpp"

#include <cmath>

namespace ufmt::kern::detail {

void conv_trunc_scalar(const double* are, const double* aim, std::size_t na,
                       const double* bre, const double* bim, std::size_t nb,
                       double* cre, double* cim, std::size_t nc) {
  for (std::size_t k = 0; k < nc; ++k) {
    cre[k] = 0.0;
    cim[k] = 0.0;
  }
  const std::size_t imax = na < nc ? na : nc;
  for (std::size_t i = 0; i < imax; ++i) {
    const double ar = are[i];
    const double ai = aim[i];
    const std::size_t jmax = nb < nc - i ? nb : nc - i;
    double* cr = cre + i;
    double* ci = cim + i;
    for (std::size_t j = 0; j < jmax; ++j) {
      cr[j] += ar * bre[j] - ai * bim[j];
      ci[j] += ar * bim[j] + ai * bre[j];
    }
  }
}

void horner_many_scalar(const double* cre, const double* cim, std::size_t nc,
                        const double* zre, const double* zim, std::size_t npts,
                        double* wre, double* wim) {
  if (nc == 0) {
    for (std::size_t p = 0; p < npts; ++p) {
      wre[p] = 0.0;
      wim[p] = 0.0;
    }
    return;
  }
  for (std::size_t p = 0; p < npts; ++p) {
    const double zr = zre[p];
    const double zi = zim[p];
    double ar = cre[nc - 1];
    double ai = cim[nc - 1];
    for (std::size_t n = nc - 1; n-- > 0;) {
      const double tr = ar * zr - ai * zi + cre[n];
      const double ti = ar * zi + ai * zr + cim[n];
      ar = tr;
      ai = ti;
    }
    wre[p] = ar;
    wim[p] = ai;
  }
}

void abs_many_scalar(const double* wre, const double* wim, std::size_t n,
                     double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::sqrt(wre[i] * wre[i] + wim[i] * wim[i]);
  }
}

}  // namespace ufmt::kern::detail
