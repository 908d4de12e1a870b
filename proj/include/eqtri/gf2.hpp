#pragma once
// GF(2) linear algebra over bit-packed rows, boundary matrices, Betti
// numbers, and the Euler characteristic.

#include <cstdint>
#include <vector>

#include "eqtri/complex.hpp"

namespace eqtri {

class Gf2Matrix {
 public:
  Gf2Matrix(std::size_t rows, std::size_t cols);
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  void set(std::size_t r, std::size_t c, bool v = true);
  bool get(std::size_t r, std::size_t c) const;
  // Rank by Gaussian elimination on a working copy.
  std::size_t rank() const;

 private:
  std::size_t rows_, cols_, words_;
  std::vector<std::uint64_t> bits_;  // row-major
};

// Boundary map from k-faces to (k-1)-faces over the canonical face orderings;
// rows index (k-1)-faces, columns index k-faces. Requires 0 <= k <= dim.
Gf2Matrix boundary_matrix(const Complex& X, int k);

struct BettiProfile {
  std::vector<long long> b;  // b[0] .. b[dim]
  bool operator==(const BettiProfile&) const = default;
};

// Unreduced GF(2) Betti numbers: b_k = dim ker d_k - rank d_{k+1}.
BettiProfile betti_gf2(const Complex& X);

// Alternating sum f0 - f1 + f2 - ...
long long euler_characteristic(const Complex& X);

}  // namespace eqtri
