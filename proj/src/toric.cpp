#include "toricdiag/toric.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toricdiag {

PauliOperator star(Vertex v) {
  auto es = star_edges(v);
  return PauliOperator({es.begin(), es.end()}, {}, Phase::one());
}

PauliOperator face(Face f) {
  auto es = face_edges(f);
  return PauliOperator({}, {es.begin(), es.end()}, Phase::one());
}

PauliOperator site_operator(Site w) {
  return w.is_vertex() ? star(w.as_vertex()) : face(w.as_face());
}

Configuration::Configuration(std::vector<std::pair<Site, int>> values)
    : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].second != 1 && values_[i].second != -1) {
      throw std::invalid_argument("Configuration: signs must be +/-1");
    }
    if (i > 0 && values_[i].first == values_[i - 1].first) {
      throw std::invalid_argument("Configuration: duplicate site");
    }
    window_.push_back(values_[i].first);
  }
}

Configuration Configuration::all_plus(const std::vector<Site>& window) {
  std::vector<std::pair<Site, int>> values;
  values.reserve(window.size());
  for (const Site& w : window) values.emplace_back(w, 1);
  return Configuration(std::move(values));
}

bool Configuration::covers(const std::vector<Site>& sites) const {
  for (const Site& w : sites) {
    if (!std::binary_search(window_.begin(), window_.end(), w)) return false;
  }
  return true;
}

int Configuration::sign_at(Site w) const {
  auto it = std::lower_bound(window_.begin(), window_.end(), w);
  if (it == window_.end() || *it != w) {
    throw std::invalid_argument("Configuration: site outside the window");
  }
  return values_[static_cast<std::size_t>(it - window_.begin())].second;
}

int ConfigurationRule::sign_at(Site w) const {
  const auto& window = window_values.window();
  if (std::binary_search(window.begin(), window.end(), w)) return window_values.sign_at(w);
  if (default_sign != 1 && default_sign != -1) {
    throw std::logic_error("ConfigurationRule: default sign must be +/-1");
  }
  return default_sign;
}

Configuration ConfigurationRule::restrict_to(const std::vector<Site>& sites) const {
  std::vector<std::pair<Site, int>> values;
  values.reserve(sites.size());
  for (const Site& w : sites) values.emplace_back(w, sign_at(w));
  return Configuration(std::move(values));
}

ProjectorNetElement::ProjectorNetElement(Patch patch, const Configuration& f)
    : patch_(std::move(patch)),
      interior_(patch_.interior_sites()),
      config_(),
      group_(patch_) {
  if (!f.covers(interior_)) {
    throw std::invalid_argument("projector_net: configuration misses an interior site");
  }
  std::vector<std::pair<Site, int>> values;
  values.reserve(interior_.size());
  for (const Site& w : interior_) values.emplace_back(w, f.sign_at(w));
  config_ = Configuration(std::move(values));
  for (const Site& w : interior_) {
    PauliOperator s = site_operator(w);
    Phase ph = config_.sign_at(w) == -1 ? Phase::minus_one() : Phase::one();
    group_.add_generator(PauliOperator(s.x_support(), s.z_support(), ph));
  }
}

ProjectorNetElement projector_net(const Patch& patch, const Configuration& f) {
  return ProjectorNetElement(patch, f);
}

bool ff_monotone(const ProjectorNetElement& larger, const ProjectorNetElement& smaller) {
  if (!smaller.patch().subset_of(larger.patch())) {
    throw std::invalid_argument("ff_monotone: patches are not nested");
  }
  for (const Site& w : smaller.interior()) {
    if (larger.config().sign_at(w) != smaller.config().sign_at(w)) {
      throw std::invalid_argument("ff_monotone: configurations disagree on a shared site");
    }
  }
  for (std::size_t i = 0; i < smaller.group().generator_count(); ++i) {
    auto m = larger.group().membership(smaller.group().generator(i));
    if (!m || m->sign != 1) return false;
  }
  return true;
}

CompressionResult compress(const PauliOperator& p, const ProjectorNetElement& e) {
  if (!e.group().commutes_with_all(p)) return {CompressionKind::Zero, 0};
  if (auto m = e.group().membership(p)) return {CompressionKind::Scalar, m->sign};
  return {CompressionKind::Residual, 0};
}

namespace {

struct BoundingBox {
  int min_x = std::numeric_limits<int>::max();
  int max_x = std::numeric_limits<int>::min();
  int min_y = std::numeric_limits<int>::max();
  int max_y = std::numeric_limits<int>::min();

  void absorb(Vertex v) {
    min_x = std::min(min_x, v.x);
    max_x = std::max(max_x, v.x);
    min_y = std::min(min_y, v.y);
    max_y = std::max(max_y, v.y);
  }
  bool empty() const { return min_x > max_x; }
};

BoxSpec growth_seed(const std::vector<Edge>& support) {
  BoundingBox bb;
  for (const Edge& e : support) {
    for (const Vertex& v : endpoints(e)) bb.absorb(v);
  }
  if (bb.empty()) return BoxSpec{{0, 0}, 1};
  Vertex center{bb.min_x + (bb.max_x - bb.min_x) / 2, bb.min_y + (bb.max_y - bb.min_y) / 2};
  int radius = 1;
  radius = std::max(radius, bb.max_x - center.x);
  radius = std::max(radius, center.x - bb.min_x);
  radius = std::max(radius, bb.max_y - center.y);
  radius = std::max(radius, center.y - bb.min_y);
  return BoxSpec{center, radius};
}

}  // namespace

LtqoCertificate ltqo_radius(const PauliSum& x, const ConfigurationRule& f, int max_rings) {
  BoxSpec seed = growth_seed(x.support());
  for (int ring = 0; ring <= max_rings; ++ring) {
    BoxSpec spec{seed.center, seed.radius + ring};
    Patch delta = box_patch(spec.center, spec.radius);
    ProjectorNetElement net(delta, f.restrict_to(delta.interior_sites()));
    std::vector<CompressionResult> results;
    results.reserve(x.terms().size());
    bool settled = true;
    for (const auto& term : x.terms()) {
      CompressionResult r = compress(term.op, net);
      if (r.kind == CompressionKind::Residual) {
        settled = false;
        break;
      }
      results.push_back(r);
    }
    if (settled) return LtqoCertificate{spec, std::move(delta), ring, std::move(results)};
  }
  std::ostringstream msg;
  msg << "ltqo_radius: no certificate within " << max_rings
      << " growth rings around box radius " << seed.radius << " at (" << seed.center.x << ","
      << seed.center.y << ")";
  throw std::runtime_error(msg.str());
}

GaussianRational omega_f(const PauliOperator& p, const ConfigurationRule& f, int max_rings) {
  PauliSum x = PauliSum::term(Rational(1), p);
  if (x.is_zero()) return GaussianRational(Rational(0));
  LtqoCertificate cert = ltqo_radius(x, f, max_rings);
  const CompressionResult& r = cert.term_results[0];
  if (r.kind == CompressionKind::Zero) return GaussianRational(Rational(0));
  return x.terms()[0].coefficient * GaussianRational(Rational(r.scalar));
}

void StabilizerPolynomial::add(const GaussianRational& c, std::vector<Site> monomial) {
  if (c.is_zero()) return;
  std::sort(monomial.begin(), monomial.end());
  if (std::adjacent_find(monomial.begin(), monomial.end()) != monomial.end()) {
    throw std::invalid_argument("StabilizerPolynomial: repeated site in monomial");
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), monomial,
                             [](const auto& t, const std::vector<Site>& m) { return t.first < m; });
  if (it != terms_.end() && it->first == monomial) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {std::move(monomial), c});
  }
}

GaussianRational StabilizerPolynomial::evaluate(const ConfigurationRule& f) const {
  GaussianRational total;
  for (const auto& [monomial, c] : terms_) {
    int sign = 1;
    for (const Site& w : monomial) sign *= f.sign_at(w);
    total += c * GaussianRational(Rational(sign));
  }
  return total;
}

PauliSum StabilizerPolynomial::to_pauli_sum() const {
  PauliSum out;
  for (const auto& [monomial, c] : terms_) {
    PauliOperator prod;
    for (const Site& w : monomial) prod = multiply(prod, site_operator(w));
    out = out + PauliSum::term(c, prod);
  }
  return out;
}

StabilizerPolynomial StabilizerPolynomial::multiplied_by_monomial(
    const std::vector<Site>& monomial) const {
  std::vector<Site> m = monomial;
  std::sort(m.begin(), m.end());
  StabilizerPolynomial out;
  for (const auto& [sites, c] : terms_) {
    std::vector<Site> product;
    std::set_symmetric_difference(sites.begin(), sites.end(), m.begin(), m.end(),
                                  std::back_inserter(product));
    out.add(c, std::move(product));
  }
  return out;
}

StabilizerPolynomial conditional_expectation(const PauliSum& x, int max_rings) {
  StabilizerPolynomial out;
  for (const auto& term : x.terms()) {
    if (term.op.is_identity()) {
      out.add(term.coefficient, {});
      continue;
    }
    if (!full_syndrome(term.op).empty()) continue;  // compresses to zero in every state
    BoxSpec seed = growth_seed(term.op.support());
    bool placed = false;
    for (int ring = 0; ring <= max_rings && !placed; ++ring) {
      Patch delta = box_patch(seed.center, seed.radius + ring);
      std::vector<Site> interior = delta.interior_sites();
      ProjectorNetElement net(delta, Configuration::all_plus(interior));
      if (auto m = net.group().membership(term.op)) {
        std::vector<Site> monomial;
        monomial.reserve(m->witness.size());
        for (std::size_t i : m->witness) monomial.push_back(interior[i]);
        out.add(term.coefficient * GaussianRational(Rational(m->sign)), std::move(monomial));
        placed = true;
      }
    }
    if (!placed) {
      throw std::runtime_error(
          "conditional_expectation: syndrome-free term did not decompose within the growth cap");
    }
  }
  return out;
}

PauliOperator truncated_symmetry(Site w, int n, const PauliOperator& p) {
  LatticePath zeta = straight_path(w, n);
  PauliOperator ribbon = w.is_vertex() ? ribbon_z(zeta) : ribbon_x(zeta);
  return multiply(ribbon, multiply(p, ribbon));
}

PauliOperator excitation_operator(const std::vector<std::pair<Vertex, Vertex>>& v_pairs,
                                  const std::vector<std::pair<Face, Face>>& f_pairs) {
  std::set<Site> seen;
  auto claim = [&seen](Site s) {
    if (!seen.insert(s).second) {
      throw std::invalid_argument("excitation_operator: sites must be distinct");
    }
  };
  for (const auto& [a, b] : v_pairs) {
    claim(Site::vertex(a));
    claim(Site::vertex(b));
  }
  for (const auto& [a, b] : f_pairs) {
    claim(Site::face(a));
    claim(Site::face(b));
  }
  PauliOperator result;
  for (auto [a, b] : v_pairs) {
    if (std::tie(b.x, b.y) < std::tie(a.x, a.y)) std::swap(a, b);
    result = multiply(result, ribbon_z(l_path(a, b, true)));
  }
  for (auto [a, b] : f_pairs) {
    if (b < a) std::swap(a, b);
    result = multiply(result, ribbon_x(dual_l_path(a, b, true)));
  }
  return result;
}

NoLiftReport no_lift_certificate(int n, Vertex center) {
  if (n < 1) throw std::invalid_argument("no_lift_certificate: n must be >= 1");
  NoLiftReport report;
  report.n = n;
  report.center = center;

  Patch box = box_patch(center, n);
  LatticePath ring = boundary_dual_path(box);
  Patch closure = closure_patch(box);

  PauliOperator star_product;
  std::vector<Vertex> interior = closure.interior_vertices();
  for (const Vertex& v : interior) star_product = multiply(star_product, star(v));
  report.closure_interior_star_count = interior.size();
  report.boundary_ribbon_length = ring.length();
  report.star_product_equals_boundary_ribbon = star_product == ribbon_x(ring);

  // Grid of every vertex a box-supported Pauli can flip.
  std::vector<Vertex> grid;
  for (int x = center.x - n; x <= center.x + n; ++x) {
    for (int y = center.y - n; y <= center.y + n; ++y) grid.push_back(Vertex{x, y});
  }
  std::vector<std::pair<Site, bool>> single;
  single.reserve(grid.size());
  for (const Vertex& v : grid) single.emplace_back(Site::vertex(v), v == center);
  report.single_flip_infeasible = !solve_syndrome(single, box).has_value();

  std::vector<std::pair<Vertex, Vertex>> pairs = {
      {center, {center.x + 1, center.y}},
      {center, {center.x + n, center.y + n}},
      {{center.x - n, center.y}, {center.x + n, center.y}},
      {{center.x - n, center.y - n}, {center.x + n, center.y + n}},
  };
  bool all_feasible = true;
  for (const auto& [a, b] : pairs) {
    std::vector<std::pair<Site, bool>> target;
    target.reserve(grid.size());
    for (const Vertex& v : grid) target.emplace_back(Site::vertex(v), v == a || v == b);
    auto solved = solve_syndrome(target, box);
    bool good = solved.has_value();
    if (good) {
      auto bits = syndrome(*solved, [&grid] {
        std::vector<Site> sites;
        sites.reserve(grid.size());
        for (const Vertex& v : grid) sites.push_back(Site::vertex(v));
        return sites;
      }());
      for (std::size_t i = 0; i < grid.size() && good; ++i) {
        good = bits[i] == (grid[i] == a || grid[i] == b);
      }
      // Independent ribbon witness for the same excitation pair.
      PauliOperator r = excitation_operator({{a, b}}, {});
      auto flips = full_syndrome(r);
      good = good && flips == std::vector<Site>{Site::vertex(std::min(a, b)),
                                                Site::vertex(std::max(a, b))};
    }
    all_feasible = all_feasible && good;
  }
  report.pair_targets_checked = pairs.size();
  report.pair_targets_feasible = all_feasible;
  return report;
}

}  // namespace toricdiag
