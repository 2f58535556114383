#include "ufmt/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace ufmt::kern {

namespace {

bool avx2_usable() {
#if defined(UFMT_HAVE_AVX2) && (defined(__x86_64__) || defined(_M_X64))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend backend_from_env() {
  const char* e = std::getenv("UFMT_KERNEL");
  if (e == nullptr) return Backend::Auto;
  if (std::strcmp(e, "scalar") == 0) return Backend::Scalar;
  if (std::strcmp(e, "avx2") == 0) return Backend::Avx2;
  return Backend::Auto;
}

std::atomic<Backend> g_requested{backend_from_env()};

Backend resolve(Backend b) {
  if (b == Backend::Avx2 && !avx2_usable()) return Backend::Scalar;
  if (b == Backend::Auto) return avx2_usable() ? Backend::Avx2 : Backend::Scalar;
  return b;
}

}  // namespace

void set_backend(Backend b) { g_requested.store(b); }

Backend active_backend() { return resolve(g_requested.load()); }

std::string_view backend_name() {
  return active_backend() == Backend::Avx2 ? "avx2" : "scalar";
}

void conv_trunc(const double* are, const double* aim, std::size_t na,
                const double* bre, const double* bim, std::size_t nb,
                double* cre, double* cim, std::size_t nc) {
#if defined(UFMT_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) {
    detail::conv_trunc_avx2(are, aim, na, bre, bim, nb, cre, cim, nc);
    return;
  }
#endif
  detail::conv_trunc_scalar(are, aim, na, bre, bim, nb, cre, cim, nc);
}

void horner_many(const double* cre, const double* cim, std::size_t nc,
                 const double* zre, const double* zim, std::size_t npts,
                 double* wre, double* wim) {
#if defined(UFMT_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) {
    detail::horner_many_avx2(cre, cim, nc, zre, zim, npts, wre, wim);
    return;
  }
#endif
  detail::horner_many_scalar(cre, cim, nc, zre, zim, npts, wre, wim);
}

void abs_many(const double* wre, const double* wim, std::size_t n,
              double* out) {
#if defined(UFMT_HAVE_AVX2)
  if (active_backend() == Backend::Avx2) {
    detail::abs_many_avx2(wre, wim, n, out);
    return;
  }
#endif
  detail::abs_many_scalar(wre, wim, n, out);
}

}  // namespace ufmt::kern
