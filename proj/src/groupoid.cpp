#include "toricdiag/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "toricdiag/rng.hpp"

namespace toricdiag {

namespace {

std::vector<Edge> sorted_sym_diff(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require_sorted_unique_edges(std::vector<Edge>& v, const char* what) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw std::invalid_argument(std::string(what) + ": duplicate edge");
  }
}

}  // namespace

GammaElement::GammaElement(std::vector<Edge> x_part, std::vector<Edge> z_part)
    : x_part_(std::move(x_part)), z_part_(std::move(z_part)) {
  require_sorted_unique_edges(x_part_, "GammaElement x_part");
  require_sorted_unique_edges(z_part_, "GammaElement z_part");
}

GammaElement GammaElement::operator*(const GammaElement& o) const {
  return GammaElement(sorted_sym_diff(x_part_, o.x_part_), sorted_sym_diff(z_part_, o.z_part_));
}

BoundaryPattern::BoundaryPattern(std::vector<Site> flips) : flips_(std::move(flips)) {
  std::sort(flips_.begin(), flips_.end());
  if (std::adjacent_find(flips_.begin(), flips_.end()) != flips_.end()) {
    throw std::invalid_argument("BoundaryPattern: duplicate site");
  }
  std::size_t vertex_count = 0;
  for (const Site& s : flips_) {
    if (s.is_vertex()) ++vertex_count;
  }
  if (vertex_count % 2 != 0 || (flips_.size() - vertex_count) % 2 != 0) {
    throw std::invalid_argument("BoundaryPattern: flip parities must be even in each sector");
  }
}

int BoundaryPattern::sign_at(Site w) const {
  return std::binary_search(flips_.begin(), flips_.end(), w) ? -1 : 1;
}

BoundaryPattern BoundaryPattern::operator*(const BoundaryPattern& o) const {
  std::vector<Site> out;
  std::set_symmetric_difference(flips_.begin(), flips_.end(), o.flips_.begin(), o.flips_.end(),
                                std::back_inserter(out));
  return BoundaryPattern(std::move(out));
}

BoundaryPattern boundary(const GammaElement& g) {
  std::map<Site, int> parity;
  for (const Edge& e : g.z_part()) {
    for (const Vertex& v : endpoints(e)) parity[Site::vertex(v)] ^= 1;
  }
  for (const Edge& e : g.x_part()) {
    for (const Face& f : side_faces(e)) parity[Site::face(f)] ^= 1;
  }
  std::vector<Site> flips;
  for (const auto& [site, odd] : parity) {
    if (odd) flips.push_back(site);
  }
  return BoundaryPattern(std::move(flips));
}

Configuration act(const BoundaryPattern& b, const Configuration& f) {
  std::vector<std::pair<Site, int>> values = f.values();
  for (auto& [site, sign] : values) sign *= b.sign_at(site);
  return Configuration(std::move(values));
}

CylinderSet<Site> act(const BoundaryPattern& b, const CylinderSet<Site>& c) {
  return flip_keys(b.flips(), c);
}

CylinderFunction<Site> act(const BoundaryPattern& b, const CylinderFunction<Site>& q) {
  return flip_keys(b.flips(), q);
}

GammaElement solve_boundary(const std::vector<std::pair<Site, int>>& target) {
  int min_x = std::numeric_limits<int>::max(), min_y = min_x;
  std::vector<Vertex> vertex_flips;
  std::vector<Face> face_flips;
  for (const auto& [site, sign] : target) {
    if (sign != 1 && sign != -1) {
      throw std::invalid_argument("solve_boundary: target signs must be +/-1");
    }
    Vertex at = site.coordinates();
    min_x = std::min(min_x, at.x);
    min_y = std::min(min_y, at.y);
    if (sign == -1) {
      if (site.is_vertex()) {
        vertex_flips.push_back(site.as_vertex());
      } else {
        face_flips.push_back(site.as_face());
      }
    }
  }
  std::sort(vertex_flips.begin(), vertex_flips.end());
  std::sort(face_flips.begin(), face_flips.end());
  if (std::adjacent_find(vertex_flips.begin(), vertex_flips.end()) != vertex_flips.end() ||
      std::adjacent_find(face_flips.begin(), face_flips.end()) != face_flips.end()) {
    throw std::invalid_argument("solve_boundary: duplicate target site");
  }

  // Odd leftovers pair with a site strictly outside the keys' inflated
  // bounding box; only endpoint parity matters, never the routing.
  std::set<Edge> z_toggles, x_toggles;
  auto toggle = [](std::set<Edge>& acc, const std::vector<Edge>& edges) {
    for (const Edge& e : edges) {
      auto [it, inserted] = acc.insert(e);
      if (!inserted) acc.erase(it);
    }
  };
  if (vertex_flips.size() % 2 != 0) {
    vertex_flips.push_back(Vertex{min_x - 2, min_y - 2});
    std::sort(vertex_flips.begin(), vertex_flips.end());
  }
  for (std::size_t i = 0; i + 1 < vertex_flips.size(); i += 2) {
    toggle(z_toggles, l_path(vertex_flips[i], vertex_flips[i + 1], true).edges());
  }
  if (face_flips.size() % 2 != 0) {
    face_flips.push_back(Face{{min_x - 3, min_y - 3}});
    std::sort(face_flips.begin(), face_flips.end());
  }
  for (std::size_t i = 0; i + 1 < face_flips.size(); i += 2) {
    toggle(x_toggles, dual_l_path(face_flips[i], face_flips[i + 1], true).edges());
  }
  return GammaElement({x_toggles.begin(), x_toggles.end()}, {z_toggles.begin(), z_toggles.end()});
}

GammaElement orbit_reach(const Configuration& f, const CylinderSet<Site>& c) {
  if (!f.covers(c.keys())) {
    throw std::invalid_argument("orbit_reach: configuration window does not cover the key set");
  }
  std::vector<std::pair<Site, int>> target;
  target.reserve(c.rank());
  for (std::size_t i = 0; i < c.rank(); ++i) {
    const Site& w = c.keys()[i];
    int wanted = ((c.negatives() >> i) & 1) ? -1 : 1;
    target.emplace_back(w, wanted * f.sign_at(w));
  }
  return solve_boundary(target);
}

bool freeness_check(const GammaElement& g, const std::vector<Site>& window) {
  std::vector<Site> w = window;
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  BoundaryPattern b = boundary(g);
  for (const Site& s : b.flips()) {
    if (!std::binary_search(w.begin(), w.end(), s)) return false;
  }
  Configuration plus = Configuration::all_plus(w);
  Configuration moved = act(b, plus);
  if (b.is_identity()) return moved == plus;
  // A flipped site changes sign in every configuration, so the pattern fixes
  // nothing.
  for (const Site& s : b.flips()) {
    if (moved.sign_at(s) != -1) return false;
  }
  return moved != plus;
}

GammaElement ribbon_to_gamma(const std::vector<RibbonLetter>& word) {
  GammaElement g;
  for (const RibbonLetter& letter : word) {
    g = g * (letter.kind == RibbonLetter::Kind::X ? GammaElement::x_generator(letter.edge)
                                                  : GammaElement::z_generator(letter.edge));
  }
  return g;
}

PauliOperator ribbon_word_operator(const std::vector<RibbonLetter>& word) {
  PauliOperator u;
  for (const RibbonLetter& letter : word) {
    u = multiply(u, letter.kind == RibbonLetter::Kind::X ? sigma_x(letter.edge)
                                                         : sigma_z(letter.edge));
  }
  return u;
}

namespace {

template <typename Key>
InvariantSideReport run_invariant_side(
    std::string model_name, const std::vector<Key>& universe,
    const std::function<std::vector<Key>(Rng&)>& sample_flips,
    const std::function<std::vector<Key>(const std::vector<Key>&, std::uint32_t)>& exchange_flips,
    const InvariantTripleOptions& opt) {
  InvariantSideReport report;
  report.model = std::move(model_name);
  report.window_keys = universe.size();
  report.samples = static_cast<std::size_t>(opt.samples);
  report.reduce_consistent = true;
  report.commutators_vanish = true;
  report.exchange_verified = true;
  report.positivity_ok = true;
  report.injectivity_ok = true;

  const int max_keys = std::min<int>(opt.max_keys, static_cast<int>(universe.size()));
  Rng rng(splitmix64(opt.seed ^ fnv1a64(report.model)));

  auto random_keys = [&](int max_count, bool nonempty) {
    int k = static_cast<int>(rng.range(nonempty ? 1 : 0, max_count));
    auto idx = rng.sample_indices(universe.size(), static_cast<std::size_t>(k));
    std::vector<Key> keys;
    keys.reserve(idx.size());
    for (std::size_t i : idx) keys.push_back(universe[i]);
    std::sort(keys.begin(), keys.end());
    return keys;
  };

  for (int s = 0; s < opt.samples; ++s) {
    std::vector<Key> keys = random_keys(max_keys, false);
    std::vector<long long> table(std::size_t{1} << keys.size());
    for (long long& v : table) v = rng.range(-opt.coefficient_bound, opt.coefficient_bound);
    CylinderFunction<Key> q(keys, table);

    auto reduced = q.class_reduce();
    if (q.measure() != Dyadic(reduced.coefficient, static_cast<unsigned>(q.keys().size()))) {
      report.reduce_consistent = false;
    }

    std::vector<Key> flips = sample_flips(rng);
    CylinderFunction<Key> commutator = q - flip_keys(flips, q);
    if (commutator.class_reduce().coefficient != 0) report.commutators_vanish = false;
    if (flip_keys(flips, q).measure() != q.measure()) report.reduce_consistent = false;

    std::vector<long long> abs_table = table;
    for (long long& v : abs_table) v = v < 0 ? -v : v;
    CylinderFunction<Key> nonneg(keys, abs_table);
    Dyadic mu = nonneg.measure();
    if (!mu.is_nonnegative()) report.positivity_ok = false;
    if (report.positive_cone_samples.size() < 16) {
      report.positive_cone_samples.push_back(mu.str());
    }
  }

  const int exchange_rounds = std::min(opt.samples, 64);
  for (int s = 0; s < exchange_rounds; ++s) {
    std::vector<Key> keys = random_keys(std::min(max_keys, 10), true);
    auto mask_for = [&] {
      return static_cast<std::uint32_t>(rng.u64() & ((1u << keys.size()) - 1));
    };
    std::uint32_t eps = mask_for(), eps_prime = mask_for();
    std::vector<Key> flips = exchange_flips(keys, eps ^ eps_prime);
    CylinderSet<Key> from(keys, eps), to(keys, eps_prime);
    if (flip_keys(flips, from) != to || flip_keys(flips, to) != from) {
      report.exchange_verified = false;
    }
  }

  std::set<Dyadic> realizable;
  for (int k = 0; k <= max_keys; ++k) {
    std::vector<Key> keys(universe.begin(), universe.begin() + k);
    std::sort(keys.begin(), keys.end());
    CylinderSet<Key> cyl(keys, 0);
    for (int a = -opt.coefficient_bound; a <= opt.coefficient_bound; ++a) {
      CylinderFunction<Key> q = CylinderFunction<Key>::indicator(cyl).scaled(a);
      Dyadic expected(a, static_cast<unsigned>(k));
      if (q.measure() != expected) {
        report.reduce_consistent = false;
      }
      if (a >= 0 && !q.measure().is_nonnegative()) report.positivity_ok = false;
      realizable.insert(expected);
    }
  }
  for (const Dyadic& d : realizable) report.realizable_dyadics.push_back(d.str());

  // Equal measures force equal reduced classes after refinement to a common
  // key set.
  for (int k = 0; k + 1 <= max_keys; ++k) {
    std::vector<Key> small_keys(universe.begin(), universe.begin() + k);
    std::vector<Key> big_keys(universe.begin(), universe.begin() + k + 1);
    std::sort(small_keys.begin(), small_keys.end());
    std::sort(big_keys.begin(), big_keys.end());
    CylinderFunction<Key> coarse = CylinderFunction<Key>::indicator(CylinderSet<Key>(small_keys, 0));
    CylinderFunction<Key> fine =
        CylinderFunction<Key>::indicator(CylinderSet<Key>(big_keys, 0)).scaled(2);
    if (coarse.measure() != fine.measure() ||
        (coarse - fine).class_reduce().coefficient != 0) {
      report.injectivity_ok = false;
    }
  }

  report.order_unit_image = CylinderFunction<Key>::constant(1).measure().str();
  return report;
}

}  // namespace

InvariantSideReport invariant_side(DiagonalModel model, const InvariantTripleOptions& opt) {
  const int r = opt.window_radius;
  if (model == DiagonalModel::ToricDiagonal) {
    std::vector<Site> universe;
    for (int x = -r; x <= r; ++x) {
      for (int y = -r; y <= r; ++y) universe.push_back(Site::vertex(Vertex{x, y}));
    }
    for (int x = -r; x < r; ++x) {
      for (int y = -r; y < r; ++y) universe.push_back(Site::face(Face{{x, y}}));
    }
    std::sort(universe.begin(), universe.end());

    std::vector<Edge> window_edges = box_patch({0, 0}, r).edges();
    auto sample_flips = [window_edges](Rng& rng) {
      std::vector<Edge> x_part, z_part;
      for (long long i = rng.range(0, 3); i > 0; --i) x_part.push_back(rng.pick(window_edges));
      for (long long i = rng.range(0, 3); i > 0; --i) z_part.push_back(rng.pick(window_edges));
      std::set<Edge> xs, zs;
      for (const Edge& e : x_part) {
        if (!xs.insert(e).second) xs.erase(e);
      }
      for (const Edge& e : z_part) {
        if (!zs.insert(e).second) zs.erase(e);
      }
      GammaElement g({xs.begin(), xs.end()}, {zs.begin(), zs.end()});
      return boundary(g).flips();
    };
    auto exchange_flips = [](const std::vector<Site>& keys, std::uint32_t mismatch) {
      std::vector<std::pair<Site, int>> target;
      for (std::size_t i = 0; i < keys.size(); ++i) {
        target.emplace_back(keys[i], ((mismatch >> i) & 1) ? -1 : 1);
      }
      return boundary(solve_boundary(target)).flips();
    };
    return run_invariant_side<Site>("toric-diagonal", universe, sample_flips, exchange_flips, opt);
  }

  std::vector<Edge> universe = box_patch({0, 0}, r).edges();
  auto sample_flips = [universe](Rng& rng) {
    std::set<Edge> flips;
    for (long long i = rng.range(0, 6); i > 0; --i) {
      Edge e = rng.pick(universe);
      if (!flips.insert(e).second) flips.erase(e);
    }
    return std::vector<Edge>(flips.begin(), flips.end());
  };
  auto exchange_flips = [](const std::vector<Edge>& keys, std::uint32_t mismatch) {
    std::vector<Edge> flips;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if ((mismatch >> i) & 1) flips.push_back(keys[i]);
    }
    return flips;
  };
  return run_invariant_side<Edge>("standard-diagonal", universe, sample_flips, exchange_flips, opt);
}

InvariantTripleReport invariant_triple(const InvariantTripleOptions& opt) {
  InvariantTripleReport report;
  report.toric_side = invariant_side(DiagonalModel::ToricDiagonal, opt);
  report.standard_side = invariant_side(DiagonalModel::StandardDiagonal, opt);
  report.sides_match =
      report.toric_side.realizable_dyadics == report.standard_side.realizable_dyadics &&
      report.toric_side.order_unit_image == report.standard_side.order_unit_image;
  return report;
}

}  // namespace toricdiag
