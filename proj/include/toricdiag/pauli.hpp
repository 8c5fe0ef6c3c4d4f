#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toricdiag/lattice.hpp"
#include "toricdiag/rational.hpp"

namespace toricdiag {

// Phase i^k, k in 0..3.
class Phase {
 public:
  constexpr Phase() = default;
  static constexpr Phase one() { return Phase(0); }
  static constexpr Phase imaginary() { return Phase(1); }
  static constexpr Phase minus_one() { return Phase(2); }
  static constexpr Phase minus_imaginary() { return Phase(3); }

  constexpr int exponent() const { return k_; }
  constexpr bool is_real() const { return k_ % 2 == 0; }
  constexpr Phase operator*(Phase o) const { return Phase((k_ + o.k_) % 4); }
  constexpr Phase conjugated() const { return Phase((4 - k_) % 4); }
  GaussianRational value() const { return GaussianRational::unit_phase(k_); }
  const char* str() const {
    constexpr const char* names[4] = {"1", "i", "-1", "-i"};
    return names[k_];
  }
  friend bool operator==(const Phase&, const Phase&) = default;

 private:
  constexpr explicit Phase(int k) : k_(static_cast<std::uint8_t>(((k % 4) + 4) % 4)) {}
  std::uint8_t k_ = 0;
};

// A finitely supported element of the Pauli group:
//
//   phase * (prod_{e in x_support} sigma^x_e) * (prod_{e in z_support} sigma^z_e)
//
// with the Z factors applied first. Supports are sorted edge sets; two
// operators are equal iff all three fields agree.
class PauliOperator {
 public:
  PauliOperator() = default;  // identity
  PauliOperator(std::vector<Edge> x_support, std::vector<Edge> z_support, Phase phase);

  static PauliOperator identity() { return PauliOperator(); }

  const std::vector<Edge>& x_support() const { return x_support_; }
  const std::vector<Edge>& z_support() const { return z_support_; }
  Phase phase() const { return phase_; }

  bool is_identity() const {
    return x_support_.empty() && z_support_.empty() && phase_ == Phase::one();
  }
  bool is_hermitian() const;
  // Inverse (= adjoint, since the operator is unitary).
  PauliOperator inverse() const;
  // Union of the two supports.
  std::vector<Edge> support() const;

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;
  friend auto operator<=>(const PauliOperator&, const PauliOperator&) = default;

 private:
  std::vector<Edge> x_support_;
  std::vector<Edge> z_support_;
  Phase phase_;
};

PauliOperator sigma_x(Edge e);
PauliOperator sigma_z(Edge e);

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
// True iff |x_p n z_q| + |z_p n x_q| is even.
bool commutes(const PauliOperator& p, const PauliOperator& q);

// prod_{e in rho} sigma^z_e for a direct path; prod over crossed edges of
// sigma^x_e for a dual path. Phase 1.
PauliOperator ribbon_z(const LatticePath& rho);
PauliOperator ribbon_x(const LatticePath& rho_dual);

// Bit w is set iff p anticommutes with the star/face operator at sites[w].
std::vector<bool> syndrome(const PauliOperator& p, const std::vector<Site>& sites);
// Every site of the infinite lattice whose star/face operator anticommutes
// with p; always finite, and even in both the vertex and the face sector.
std::vector<Site> full_syndrome(const PauliOperator& p);

// Independent signed commuting involutions with a row-reduced symplectic
// echelon over GF(2) for membership and decomposition queries. Bit rows are
// machine-word packed; generators keep their exact signs.
class SignedStabilizerGroup {
 public:
  explicit SignedStabilizerGroup(Patch support);

  // Throws if g is not an involution with real phase, has support outside the
  // patch, anticommutes with an existing generator, or is dependent.
  void add_generator(const PauliOperator& g);

  std::size_t generator_count() const { return generators_.size(); }
  const PauliOperator& generator(std::size_t i) const { return generators_[i]; }
  const Patch& support() const { return support_; }

  bool commutes_with_all(const PauliOperator& p) const;

  struct Membership {
    int sign = 1;  // prod of the witness generators equals sign * p exactly
    std::vector<std::size_t> witness;
  };
  // nullopt when p is not +/- a product of generators. p anticommuting with a
  // generator is reported as non-membership, not as an error.
  std::optional<Membership> membership(const PauliOperator& p) const;

  // Canonical fully reduced echelon (pivot-ordered); identical for any
  // generator insertion order.
  struct EchelonRow {
    std::vector<std::uint64_t> bits;  // x words then z words
    int sign = 1;
    std::vector<std::size_t> combination;  // generator indices with this row product
  };
  std::vector<EchelonRow> echelon() const;

 private:
  struct Row {
    std::vector<std::uint64_t> bits;
    int sign = 1;
    std::vector<std::uint64_t> combo;
    std::size_t pivot = 0;
  };

  std::optional<Row> pack(const PauliOperator& p) const;  // strict: support within patch
  Row pack_clipped(const PauliOperator& p) const;         // drops out-of-patch edges
  bool symplectic_odd(const Row& a, const Row& b) const;
  void row_multiply(Row& a, const Row& b) const;  // a := a * b, sign-exact

  Patch support_;
  std::size_t words_ = 0;  // 64-bit words per x/z half
  std::vector<PauliOperator> generators_;
  std::vector<Row> rows_;  // sorted by pivot
};

// GF(2) linear solve: find a Pauli supported in `support` whose syndrome on
// the listed sites matches the target bits. nullopt when infeasible.
std::optional<PauliOperator> solve_syndrome(const std::vector<std::pair<Site, bool>>& target,
                                            const Patch& support);

// Finite formal sum of Pauli operators with exact Gaussian-rational
// coefficients. Canonical: term operators carry phase 1 (phases are folded
// into coefficients), terms are support-sorted, zero coefficients dropped.
class PauliSum {
 public:
  struct Term {
    GaussianRational coefficient;
    PauliOperator op;
    friend bool operator==(const Term&, const Term&) = default;
  };

  PauliSum() = default;  // zero
  static PauliSum term(const GaussianRational& c, const PauliOperator& p);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<Edge> support() const;

  friend PauliSum operator+(const PauliSum& a, const PauliSum& b);
  friend PauliSum operator-(const PauliSum& a, const PauliSum& b);
  PauliSum scaled(const GaussianRational& c) const;
  friend PauliSum multiply(const PauliSum& a, const PauliSum& b);

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  explicit PauliSum(std::vector<Term> raw);
  std::vector<Term> terms_;
};

}  // namespace toricdiag
