#pragma once

// Discrete Fourier transform of arbitrary length.
//   X[k] = sum_{j<n} x[j] e(-jk/n)
// Power-of-two lengths use an iterative radix-2 FFT; all other lengths go
// through Bluestein's chirp-z reduction to a power-of-two convolution.

#include <span>
#include <vector>

#include "kloospath/modarith.hpp"

namespace kloospath {

class DftPlan {
 public:
  explicit DftPlan(std::size_t n);

  std::size_t size() const { return n_; }

  /// Forward transform. Reentrant: scratch space is allocated per call.
  std::vector<cplx> forward(std::span<const cplx> x) const;

 private:
  std::size_t n_;
  std::size_t m_ = 0;              // convolution length (Bluestein only)
  std::vector<cplx> chirp_;        // e(-j^2 / 2n), j < n
  std::vector<cplx> kernel_hat_;   // FFT of the conjugate chirp, length m
  std::vector<cplx> twiddles_;     // e(-k/N), k < N/2, N = n or m
};

/// O(n^2) reference transform.
std::vector<cplx> dft_naive(std::span<const cplx> x);

/// In-place radix-2 FFT; size must be a power of two. inverse = true computes
/// the unnormalized inverse transform.
void fft_pow2(std::span<cplx> a, bool inverse);

}  // namespace kloospath
