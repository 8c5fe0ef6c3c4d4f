#pragma once

#include <cstdint>
#include <vector>

#include "toricdiag/pauli.hpp"
#include "toricdiag/toric.hpp"

namespace toricdiag {
namespace oracle {

// Brute-force ground truth on tiny patches: operators are built from explicit
// 2x2 matrices by Kronecker products with exact complex-rational entries, and
// never through the symplectic bookkeeping they are meant to check. Hard cap
// at 12 edges.

inline constexpr std::size_t kMaxOracleEdges = 12;

// Column-sparse exact matrix over Q(i).
class SparseRationalMatrix {
 public:
  explicit SparseRationalMatrix(std::size_t dim);
  static SparseRationalMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  void set(std::size_t row, std::size_t col, const GaussianRational& v);
  GaussianRational entry(std::size_t row, std::size_t col) const;
  std::size_t nonzero_count() const;

  friend SparseRationalMatrix operator*(const SparseRationalMatrix& a,
                                        const SparseRationalMatrix& b);
  friend SparseRationalMatrix operator+(const SparseRationalMatrix& a,
                                        const SparseRationalMatrix& b);
  friend SparseRationalMatrix operator-(const SparseRationalMatrix& a,
                                        const SparseRationalMatrix& b);
  SparseRationalMatrix scaled(const GaussianRational& c) const;
  SparseRationalMatrix adjoint() const;
  GaussianRational trace() const;
  bool is_zero() const;

  friend bool operator==(const SparseRationalMatrix&, const SparseRationalMatrix&) = default;

  // Kronecker product, left factor on the high bits.
  friend SparseRationalMatrix kron(const SparseRationalMatrix& a, const SparseRationalMatrix& b);

 private:
  using Column = std::vector<std::pair<std::uint32_t, GaussianRational>>;
  std::size_t dim_;
  std::vector<Column> cols_;  // sorted by row, no stored zeros
};

// The operator as a matrix on the tensor space over the patch edges (sorted
// edge order, first edge on the highest bit). Multiplicative and phase-exact.
SparseRationalMatrix dense(const PauliOperator& p, const Patch& patch);
SparseRationalMatrix dense_sum(const PauliSum& x, const Patch& patch);

// prod over interior sites of (1 + f(w) S_w)/2; idempotent and Hermitian.
SparseRationalMatrix dense_projector(const ProjectorNetElement& e);

// The local Hamiltonian sum_w (1 - f(w) S_w)/2 with its exact spectrum,
// obtained from the simultaneous eigenspaces of the commuting generators and
// verified against the matrix, never through numerical eigensolvers.
struct HamiltonianSpectrum {
  SparseRationalMatrix matrix;
  std::vector<std::pair<int, long long>> spectrum;  // (eigenvalue, multiplicity), ascending
  long long ground_rank = 0;                        // = 2^(edges - interior sites)
};
HamiltonianSpectrum dense_hamiltonian(const Patch& patch, const Configuration& f);

enum class DenseCompression : std::uint8_t { Zero, Scalar, Residual };

struct DenseCompressionResult {
  DenseCompression kind = DenseCompression::Residual;
  GaussianRational scalar;  // omega_Lambda(X), always filled in
  friend bool operator==(const DenseCompressionResult&, const DenseCompressionResult&) = default;
};

// Computes P X P and Tr(P X P)/Tr(P) exactly and classifies the compression.
DenseCompressionResult dense_compress(const PauliOperator& p, const ProjectorNetElement& e);
DenseCompressionResult dense_compress_sum(const PauliSum& x, const ProjectorNetElement& e);

}  // namespace oracle
}  // namespace toricdiag
