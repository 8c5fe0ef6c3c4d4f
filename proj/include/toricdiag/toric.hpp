#pragma once

#include <cstdint>
#include <vector>

#include "toricdiag/lattice.hpp"
#include "toricdiag/pauli.hpp"

namespace toricdiag {

// The star operator prod_{e incident to v} sigma^x_e.
PauliOperator star(Vertex v);
// The face operator prod_{e on the boundary of f} sigma^z_e.
PauliOperator face(Face f);
// star or face according to the site tag.
PauliOperator site_operator(Site w);

// A total sign assignment on a finite site window.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<std::pair<Site, int>> values);
  static Configuration all_plus(const std::vector<Site>& window);

  const std::vector<std::pair<Site, int>>& values() const { return values_; }
  const std::vector<Site>& window() const { return window_; }
  bool covers(const std::vector<Site>& sites) const;
  int sign_at(Site w) const;  // throws when w is outside the window

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<std::pair<Site, int>> values_;  // sorted by site
  std::vector<Site> window_;
};

// A configuration on the whole lattice: explicit signs on a finite window and
// a default sign everywhere else. This is all the algebra ever reads.
struct ConfigurationRule {
  Configuration window_values;
  int default_sign = 1;

  int sign_at(Site w) const;
  Configuration restrict_to(const std::vector<Site>& sites) const;
};

// One element of the signed frustration-free net: the patch, the signs on its
// interior sites, and the group generated by {f(w) S_w : w interior}.
class ProjectorNetElement {
 public:
  ProjectorNetElement(Patch patch, const Configuration& f);

  const Patch& patch() const { return patch_; }
  const Configuration& config() const { return config_; }
  const SignedStabilizerGroup& group() const { return group_; }
  const std::vector<Site>& interior() const { return interior_; }

 private:
  Patch patch_;
  std::vector<Site> interior_;
  Configuration config_;  // restricted to the interior sites
  SignedStabilizerGroup group_;
};

ProjectorNetElement projector_net(const Patch& patch, const Configuration& f);

// Symbolic witness of the operator inequality between two net elements with
// nested patches and agreeing signs: every generator of the smaller element
// must be a +1 member of the larger element's group.
bool ff_monotone(const ProjectorNetElement& larger, const ProjectorNetElement& smaller);

enum class CompressionKind : std::uint8_t { Zero, Scalar, Residual };

struct CompressionResult {
  CompressionKind kind = CompressionKind::Residual;
  int scalar = 0;  // +/-1 when kind == Scalar
  friend bool operator==(const CompressionResult&, const CompressionResult&) = default;
};

// Classifies P X P for X a single Pauli: Zero when X anticommutes with a
// signed generator, Scalar(s) when X is s times a product of generators,
// Residual otherwise.
CompressionResult compress(const PauliOperator& p, const ProjectorNetElement& e);

// Result of growing concentric boxes around the support until every term of
// the observable compresses to Zero or a scalar.
struct LtqoCertificate {
  BoxSpec delta_box;
  Patch delta;
  int rings_grown = 0;
  std::vector<CompressionResult> term_results;  // aligned with x.terms()
};

LtqoCertificate ltqo_radius(const PauliSum& x, const ConfigurationRule& f, int max_rings = 10);

// The value of the unique pure state attached to f on a single Pauli: 0 when
// the compression vanishes, otherwise the scalar (times the operator phase).
GaussianRational omega_f(const PauliOperator& p, const ConfigurationRule& f, int max_rings = 10);

// Integer-coefficient polynomial in the commuting symmetries {S_w}, each
// monomial a finite site set.
class StabilizerPolynomial {
 public:
  StabilizerPolynomial() = default;

  void add(const GaussianRational& c, std::vector<Site> monomial);
  const std::vector<std::pair<std::vector<Site>, GaussianRational>>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  GaussianRational evaluate(const ConfigurationRule& f) const;
  PauliSum to_pauli_sum() const;
  StabilizerPolynomial multiplied_by_monomial(const std::vector<Site>& monomial) const;

  friend bool operator==(const StabilizerPolynomial&, const StabilizerPolynomial&) = default;

 private:
  std::vector<std::pair<std::vector<Site>, GaussianRational>> terms_;  // sorted monomials
};

// The conditional expectation onto the diagonal: term by term, a Pauli with
// empty syndrome decomposes as a signed product of S_w's and contributes that
// monomial; a Pauli with nonempty syndrome contributes nothing.
StabilizerPolynomial conditional_expectation(const PauliSum& x, int max_rings = 12);

// Conjugation by the length-n truncated straight ribbon starting at w.
PauliOperator truncated_symmetry(Site w, int n, const PauliOperator& p);

// Product of ribbon operators pairing the listed endpoints via deterministic
// L-shaped routings; its syndrome is exactly the listed sites.
PauliOperator excitation_operator(const std::vector<std::pair<Vertex, Vertex>>& v_pairs,
                                  const std::vector<std::pair<Face, Face>>& f_pairs);

// Exact verification that (a) the product of all star operators interior to
// the closure of box(n) equals the boundary dual ribbon, and (b) no Pauli
// supported in box(n) flips exactly one star, while flipping any two stars is
// feasible with a ribbon witness.
struct NoLiftReport {
  int n = 0;
  Vertex center;
  bool star_product_equals_boundary_ribbon = false;
  std::size_t closure_interior_star_count = 0;
  std::size_t boundary_ribbon_length = 0;
  bool single_flip_infeasible = false;
  std::size_t pair_targets_checked = 0;
  bool pair_targets_feasible = false;
  bool ok() const {
    return star_product_equals_boundary_ribbon && single_flip_infeasible && pair_targets_feasible;
  }
};

NoLiftReport no_lift_certificate(int n, Vertex center = {0, 0});

}  // namespace toricdiag
