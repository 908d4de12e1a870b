#include "eqtri/gf2.hpp"

#include <algorithm>
#include <map>

namespace eqtri {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
  auto& w = bits_[r * words_ + c / 64];
  std::uint64_t m = 1ull << (c % 64);
  if (v) w |= m; else w &= ~m;
}

bool Gf2Matrix::get(std::size_t r, std::size_t c) const {
  return (bits_[r * words_ + c / 64] >> (c % 64)) & 1ull;
}

std::size_t Gf2Matrix::rank() const {
  std::vector<std::uint64_t> work = bits_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t w = col / 64;
    std::uint64_t m = 1ull << (col % 64);
    std::size_t pivot = rows_;
    for (std::size_t r = rank; r < rows_; ++r) {
      if (work[r * words_ + w] & m) { pivot = r; break; }
    }
    if (pivot == rows_) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < words_; ++k)
        std::swap(work[pivot * words_ + k], work[rank * words_ + k]);
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r != rank && (work[r * words_ + w] & m)) {
        for (std::size_t k = 0; k < words_; ++k)
          work[r * words_ + k] ^= work[rank * words_ + k];
      }
    }
    ++rank;
  }
  return rank;
}

Gf2Matrix boundary_matrix(const Complex& X, int k) {
  if (k < 0 || k > X.dim())
    throw Error(ErrorKind::Range, "boundary matrix index out of range");
  const auto& rows_faces = X.faces(k - 1);
  const auto& cols_faces = X.faces(k);
  std::map<Simplex, std::size_t> row_index;
  for (std::size_t i = 0; i < rows_faces.size(); ++i) row_index[rows_faces[i]] = i;
  Gf2Matrix M(rows_faces.size(), cols_faces.size());
  if (k == 0) return M;  // boundary of a vertex is the zero chain over GF(2)
  for (std::size_t c = 0; c < cols_faces.size(); ++c) {
    for (const auto& v : cols_faces[c].vertices())
      M.set(row_index.at(cols_faces[c].without(v)), c);
  }
  return M;
}

BettiProfile betti_gf2(const Complex& X) {
  BettiProfile out;
  int d = X.dim();
  if (d < 0) return out;
  std::vector<long long> rank(d + 2, 0);  // rank[k] = rank d_k, rank[d+1] = 0
  for (int k = 1; k <= d; ++k)
    rank[k] = static_cast<long long>(boundary_matrix(X, k).rank());
  for (int k = 0; k <= d; ++k) {
    long long kernel = X.face_count(k) - rank[k];
    out.b.push_back(kernel - rank[k + 1]);
  }
  return out;
}

long long euler_characteristic(const Complex& X) {
  long long chi = 0;
  for (int k = 0; k <= X.dim(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * X.face_count(k);
  return chi;
}

}  // namespace eqtri
