#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toricdiag/cylinder.hpp"
#include "toricdiag/pauli.hpp"
#include "toricdiag/toric.hpp"

namespace toricdiag {

// Finitely supported labeling of two copies of the edge set; the group law is
// componentwise symmetric difference, so every element is an involution.
class GammaElement {
 public:
  GammaElement() = default;
  GammaElement(std::vector<Edge> x_part, std::vector<Edge> z_part);

  static GammaElement x_generator(Edge e) { return GammaElement({e}, {}); }
  static GammaElement z_generator(Edge e) { return GammaElement({}, {e}); }

  const std::vector<Edge>& x_part() const { return x_part_; }
  const std::vector<Edge>& z_part() const { return z_part_; }
  bool is_identity() const { return x_part_.empty() && z_part_.empty(); }

  GammaElement operator*(const GammaElement& o) const;
  friend bool operator==(const GammaElement&, const GammaElement&) = default;

 private:
  std::vector<Edge> x_part_;  // sorted
  std::vector<Edge> z_part_;
};

// A finitely supported sign pattern on sites, with evenly many flipped
// vertices and evenly many flipped faces (the image constraint of the
// boundary map).
class BoundaryPattern {
 public:
  BoundaryPattern() = default;
  explicit BoundaryPattern(std::vector<Site> flips);

  const std::vector<Site>& flips() const { return flips_; }
  bool is_identity() const { return flips_.empty(); }
  int sign_at(Site w) const;

  BoundaryPattern operator*(const BoundaryPattern& o) const;
  friend bool operator==(const BoundaryPattern&, const BoundaryPattern&) = default;

 private:
  std::vector<Site> flips_;  // sorted
};

// The boundary map: a vertex flips when an odd number of its incident edges
// carry the z label, a face when an odd number of its boundary edges carry
// the x label. A group homomorphism into the sign patterns.
BoundaryPattern boundary(const GammaElement& g);

Configuration act(const BoundaryPattern& b, const Configuration& f);
CylinderSet<Site> act(const BoundaryPattern& b, const CylinderSet<Site>& c);
CylinderFunction<Site> act(const BoundaryPattern& b, const CylinderFunction<Site>& q);

// A group element whose boundary restricted to the keys realizes the target
// signs. Flip sites are paired with L-shaped paths; an odd leftover is routed
// to a deterministic auxiliary site outside the keys' inflated bounding box.
GammaElement solve_boundary(const std::vector<std::pair<Site, int>>& target);

// Constructive minimality witness: a group element moving f into the given
// cylinder. Requires f's window to cover the key set.
GammaElement orbit_reach(const Configuration& f, const CylinderSet<Site>& c);

// Freeness on a window covering the flips: a nontrivial boundary pattern
// moves every configuration, the trivial one fixes every configuration.
bool freeness_check(const GammaElement& g, const std::vector<Site>& window);

struct RibbonLetter {
  enum class Kind : std::uint8_t { X, Z };
  Kind kind = Kind::Z;
  Edge edge;
};

// The epimorphism from ribbon words onto boundary patterns: each letter maps
// to the corresponding single-edge generator.
GammaElement ribbon_to_gamma(const std::vector<RibbonLetter>& word);
// The Pauli-side product of the same word, for conjugation crosschecks.
PauliOperator ribbon_word_operator(const std::vector<RibbonLetter>& word);

enum class DiagonalModel : std::uint8_t { ToricDiagonal, StandardDiagonal };

// Per-model data exposing the ordered invariant: the realizable dyadic
// measures, their positivity behavior, the order-unit image, and the
// class-reduction consistency flags.
struct InvariantSideReport {
  std::string model;
  std::size_t window_keys = 0;
  std::size_t samples = 0;
  bool reduce_consistent = false;
  bool commutators_vanish = false;
  bool exchange_verified = false;
  bool positivity_ok = false;
  bool injectivity_ok = false;
  std::vector<std::string> realizable_dyadics;  // sorted, reduced
  std::vector<std::string> positive_cone_samples;
  std::string order_unit_image;

  bool ok() const {
    return reduce_consistent && commutators_vanish && exchange_verified && positivity_ok &&
           injectivity_ok && order_unit_image == "1";
  }
};

struct InvariantTripleOptions {
  int window_radius = 3;
  int max_keys = 12;
  int samples = 200;
  int coefficient_bound = 8;
  std::uint64_t seed = 0;
};

InvariantSideReport invariant_side(DiagonalModel model, const InvariantTripleOptions& options);

struct InvariantTripleReport {
  InvariantSideReport toric_side;
  InvariantSideReport standard_side;
  bool sides_match = false;
  bool ok() const { return sides_match && toric_side.ok() && standard_side.ok(); }
};

InvariantTripleReport invariant_triple(const InvariantTripleOptions& options);

}  // namespace toricdiag
