#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "mfcalc/integer.hpp"
#include "mfcalc/polynomial.hpp"
#include "mfcalc/sparse_matrix.hpp"

namespace mfcalc {

// E_2 page of the Leray-Serre spectral sequence of the principal
// T^(k-1) bundle over N = #_{k-1}(S^2 x S^3) classified by the basis
// w_1..w_{k-1} of H^2(N). E_2 = H^*(N) (x) Lambda(t_1..t_{k-1}), with
// H^*(N) spanned by 1, w_i (deg 2), y_i (deg 3), z (deg 5) subject to
// w_i w_j = 0, y_i y_j = 0, w_i y_j = delta_ij z.

enum class SpectralBlock { B1, B2, B3, B4 };
enum class BaseClass { One, Omega, Y, Z };

/// x (x) t_I. The multi-index I is a bitmask: bit j stands for t_(j+1).
struct SpectralBasisElement {
  SpectralBlock block = SpectralBlock::B2;
  BaseClass base = BaseClass::One;
  int index = 0;  // i for w_i / y_i (1-based), 0 otherwise
  std::uint32_t multi_index = 0;

  int degree() const;
  /// Sorted entries of I, 1-based.
  std::vector<int> indices() const;
  std::string to_string() const;

  friend bool operator==(const SpectralBasisElement&,
                         const SpectralBasisElement&) = default;
};

/// Basis of E_2, grouped by total degree (0 .. k+4). Multi-indices are
/// enumerated in binary-counter order; 1 (x) t_empty belongs to B2.
std::vector<std::vector<SpectralBasisElement>> spectral_basis(int k);

/// Matrix of d_2 : E_2^degree -> E_2^(degree+1) in the bases above, with
/// columns indexed by the source basis. Built from the transgression
/// d_2(1 (x) t_i) = w_i and the Leibniz rule.
SparseIntMatrix d2_matrix(
    int k, int degree,
    const std::vector<std::vector<SpectralBasisElement>>& basis);

struct SpectralDegree {
  int degree = 0;
  std::size_t e2_rank = 0;
  std::size_t d2_out_rank = 0;  // rank of d_2 leaving this degree
  std::size_t e3_rank = 0;
  std::vector<Integer> e3_torsion;  // elementary divisors > 1
};

struct SpectralReport {
  int k = 0;
  std::vector<SpectralDegree> degrees;
  IntPolynomial e3_poincare;
  /// Per-block ranks of E_2, indexed B1..B4.
  std::array<IntPolynomial, 4> block_poincare;
  /// Ranks of B4 / d_2(B3) per degree.
  IntPolynomial b4_quotient;
  bool d2_squared_zero = false;
  bool torsion_free = false;
};

/// Runs the E_2 -> E_3 computation from explicit d_2 matrices. Degrees are
/// processed concurrently when `parallel` is set. Requires 2 <= k <= 20.
SpectralReport spectral_e3_report(int k, bool parallel = true);

/// Poincare polynomial of E_3 = E_infinity.
IntPolynomial spectral_e3_poincare(int k);

}  // namespace mfcalc
