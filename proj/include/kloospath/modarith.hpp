#pragma once

// Modular arithmetic and complete / partial exponential sums modulo an odd prime.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace kloospath {

using cplx = std::complex<double>;

bool is_prime(std::int64_t n);

/// Inverse of x modulo p by extended Euclid. Throws std::domain_error when x = 0 mod p.
std::int64_t mod_inverse(std::int64_t x, std::int64_t p);

/// Table of inverses of 1..p-1 (entry 0 is unused and set to 0).
std::vector<std::int64_t> inverse_table(std::int64_t p);

/// Legendre symbol (x / p) for odd prime p, in {-1, 0, 1}.
int legendre(std::int64_t x, std::int64_t p);

/// The p-th roots of unity e(k/p), k = 0..p-1. Immutable once built.
class RootTable {
 public:
  explicit RootTable(std::int64_t p);

  std::int64_t modulus() const { return p_; }
  /// e(k/p) for any integer k (reduced mod p).
  cplx operator()(std::int64_t k) const {
    k %= p_;
    if (k < 0) k += p_;
    return roots_[static_cast<std::size_t>(k)];
  }

 private:
  std::int64_t p_;
  std::vector<cplx> roots_;
};

enum class SumKind { Kloosterman, Birch, LegendreCharacter };

/// A complete exponential sum modulo p. Residues are stored reduced to [0, p).
struct SumSpec {
  std::int64_t p = 3;
  SumKind kind = SumKind::Kloosterman;
  std::int64_t a = 1;
  std::int64_t b = 1;

  static SumSpec kloosterman(std::int64_t a, std::int64_t b, std::int64_t p);
  static SumSpec birch(std::int64_t a, std::int64_t p);
  static SumSpec legendre_character(std::int64_t p);

  /// Throws std::invalid_argument if p is not an odd prime or a Kloosterman residue is 0 mod p.
  void validate() const;
};

struct CompleteSum {
  SumSpec spec;
  cplx value;
  /// Partial sum at j = (p-1)/2; only meaningful for Kloosterman sums.
  cplx half_value;
};

/// Normalized summands of the sum, in path order.
///   Kloosterman: x = 1..p-1, e((ax + b/x)/p)/sqrt(p)
///   Birch:       x = 0..p-1, e((ax + x^3)/p)/sqrt(p)
///   Legendre:    x = 1..p-1, (x/p)/sqrt(p)
std::vector<cplx> summands(const SumSpec& spec);
std::vector<cplx> summands(const SumSpec& spec, const RootTable& roots);

/// Normalized partial sums z_0 = 0, z_j = z_{j-1} + summand_j.
/// Length p for Kloosterman and Legendre (j = 0..p-1), p+1 for Birch (j = 0..p).
std::vector<cplx> partial_sums(const SumSpec& spec);

CompleteSum complete_sum(const SumSpec& spec);

/// Normalized Kloosterman sum Kl2(a,b;p) for any a (including a = 0 mod p).
cplx kloosterman(std::int64_t a, std::int64_t b, std::int64_t p);
/// Half-path sum p^{-1/2} sum_{1<=x<=(p-1)/2} e((ax + b/x)/p).
cplx kloosterman_half(std::int64_t a, std::int64_t b, std::int64_t p);
/// Normalized Birch sum B(a;p).
cplx birch(std::int64_t a, std::int64_t p);

/// Normalized Gauss sum of the Legendre symbol modulo p.
cplx gauss_sum(std::int64_t p);

}  // namespace kloospath
