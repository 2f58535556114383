#pragma once

#include <cstddef>
#include <string_view>

// Data-parallel inner loops used by the series and scan layers.
// Every kernel has a scalar reference implementation and, on x86-64,
// an AVX2+FMA variant selected at runtime. The two are equivalence-tested
// against each other; callers never see which one ran.

namespace ufmt::kern {

enum class Backend { Auto, Scalar, Avx2 };

// Process-wide backend selection. Auto (the default) picks the widest
// instruction set the running CPU supports. The environment variable
// UFMT_KERNEL=scalar|avx2|auto is honored once, at first kernel use.
void set_backend(Backend b);
Backend active_backend();
std::string_view backend_name();

// Truncated Cauchy product on split-complex arrays:
//   c[k] = sum_{i+j=k, i<na, j<nb} a[i]*b[j]   for k = 0..nc-1.
// c must not alias a or b; c is overwritten.
void conv_trunc(const double* are, const double* aim, std::size_t na,
                const double* bre, const double* bim, std::size_t nb,
                double* cre, double* cim, std::size_t nc);

// Horner evaluation of the polynomial with coefficients c[0..nc-1]
// (degree nc-1, c[0] constant term) at npts points, split-complex in/out.
void horner_many(const double* cre, const double* cim, std::size_t nc,
                 const double* zre, const double* zim, std::size_t npts,
                 double* wre, double* wim);

// out[i] = sqrt(wre[i]^2 + wim[i]^2).
void abs_many(const double* wre, const double* wim, std::size_t n, double* out);

namespace detail {

void conv_trunc_scalar(const double*, const double*, std::size_t,
                       const double*, const double*, std::size_t,
                       double*, double*, std::size_t);
void horner_many_scalar(const double*, const double*, std::size_t,
                        const double*, const double*, std::size_t,
                        double*, double*);
void abs_many_scalar(const double*, const double*, std::size_t, double*);

#if defined(UFMT_HAVE_AVX2)
void conv_trunc_avx2(const double*, const double*, std::size_t,
                     const double*, const double*, std::size_t,
                     double*, double*, std::size_t);
void horner_many_avx2(const double*, const double*, std::size_t,
                      const double*, const double*, std::size_t,
                      double*, double*);
void abs_many_avx2(const double*, const double*, std::size_t, double*);
#endif

}  // namespace detail

}  // namespace ufmt::kern
