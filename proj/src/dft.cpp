#include "kloospath/dft.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kloospath {

namespace {

cplx unit(double turns) {
  const double angle = 2.0 * std::numbers::pi * turns;
  return cplx(std::cos(angle), std::sin(angle));
}

// e(-k/n) for k < n/2.
std::vector<cplx> twiddle_table(std::size_t n) {
  std::vector<cplx> w(n / 2);
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = unit(-static_cast<double>(k) / static_cast<double>(n));
  return w;
}

void fft_core(std::span<cplx> a, std::span<const cplx> twiddles, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const cplx w = inverse ? std::conj(twiddles[k * stride]) : twiddles[k * stride];
        const cplx u = a[i + k];
        const cplx v = a[i + k + half] * w;
        a[i + k] = u + v;
        a[i + k + half] = u - v;
      }
    }
  }
}

}  // namespace

void fft_pow2(std::span<cplx> a, bool inverse) {
  const std::size_t n = a.size();
  if (n == 0 || !std::has_single_bit(n)) throw std::invalid_argument("fft_pow2: size must be a power of two");
  const auto w = twiddle_table(n);
  fft_core(a, w, inverse);
}

DftPlan::DftPlan(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("DftPlan: length must be positive");
  if (std::has_single_bit(n)) {
    twiddles_ = twiddle_table(n);
    return;
  }
  m_ = std::bit_ceil(2 * n - 1);
  twiddles_ = twiddle_table(m_);
  chirp_.resize(n);
  const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);
  for (std::size_t j = 0; j < n; ++j) {
    // j^2 mod 2n in integers keeps the chirp phase exact for large n.
    const std::uint64_t q = (static_cast<std::uint64_t>(j) * j) % two_n;
    chirp_[j] = unit(-static_cast<double>(q) / static_cast<double>(two_n));
  }
  kernel_hat_.assign(m_, cplx(0.0));
  kernel_hat_[0] = std::conj(chirp_[0]);
  for (std::size_t j = 1; j < n; ++j) {
    kernel_hat_[j] = std::conj(chirp_[j]);
    kernel_hat_[m_ - j] = std::conj(chirp_[j]);
  }
  fft_core(kernel_hat_, twiddles_, false);
}

std::vector<cplx> DftPlan::forward(std::span<const cplx> x) const {
  if (x.size() != n_) throw std::invalid_argument("DftPlan::forward: length mismatch");
  if (m_ == 0) {
    std::vector<cplx> out(x.begin(), x.end());
    fft_core(out, twiddles_, false);
    return out;
  }
  std::vector<cplx> buf(m_, cplx(0.0));
  for (std::size_t j = 0; j < n_; ++j) buf[j] = x[j] * chirp_[j];
  fft_core(buf, twiddles_, false);
  for (std::size_t k = 0; k < m_; ++k) buf[k] *= kernel_hat_[k];
  fft_core(buf, twiddles_, true);
  const double inv_m = 1.0 / static_cast<double>(m_);
  std::vector<cplx> out(n_);
  for (std::size_t k = 0; k < n_; ++k) out[k] = buf[k] * inv_m * chirp_[k];
  return out;
}

std::vector<cplx> dft_naive(std::span<const cplx> x) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n, cplx(0.0));
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = (j * k) % n;
      acc += x[j] * unit(-static_cast<double>(r) / static_cast<double>(n));
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace kloospath
