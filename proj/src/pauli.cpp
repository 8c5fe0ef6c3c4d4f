#include "toricdiag/pauli.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace toricdiag {

namespace {

std::vector<Edge> sym_diff(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::vector<Edge> out;
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::size_t intersection_size(const std::vector<Edge>& a, const std::vector<Edge>& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

void require_sorted_unique(std::vector<Edge>& v, const char* what) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw std::invalid_argument(std::string(what) + ": duplicate edge in support");
  }
}

}  // namespace

PauliOperator::PauliOperator(std::vector<Edge> x_support, std::vector<Edge> z_support, Phase phase)
    : x_support_(std::move(x_support)), z_support_(std::move(z_support)), phase_(phase) {
  require_sorted_unique(x_support_, "PauliOperator x_support");
  require_sorted_unique(z_support_, "PauliOperator z_support");
}

bool PauliOperator::is_hermitian() const {
  // phase^2 * (-1)^{|x n z|} == 1, i.e. exponent parity matches overlap parity.
  return (phase_.exponent() % 2) == static_cast<int>(intersection_size(x_support_, z_support_) % 2);
}

PauliOperator PauliOperator::inverse() const {
  Phase ph = phase_.conjugated();
  if (intersection_size(x_support_, z_support_) % 2 == 1) ph = ph * Phase::minus_one();
  return PauliOperator(x_support_, z_support_, ph);
}

std::vector<Edge> PauliOperator::support() const {
  std::vector<Edge> out;
  out.reserve(x_support_.size() + z_support_.size());
  std::set_union(x_support_.begin(), x_support_.end(), z_support_.begin(), z_support_.end(),
                 std::back_inserter(out));
  return out;
}

PauliOperator sigma_x(Edge e) { return PauliOperator({e}, {}, Phase::one()); }
PauliOperator sigma_z(Edge e) { return PauliOperator({}, {e}, Phase::one()); }

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  // Z factors of p commute past X factors of q, one sign per crossing.
  Phase ph = p.phase() * q.phase();
  if (intersection_size(p.z_support(), q.x_support()) % 2 == 1) ph = ph * Phase::minus_one();
  return PauliOperator(sym_diff(p.x_support(), q.x_support()),
                       sym_diff(p.z_support(), q.z_support()), ph);
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  std::size_t crossings = intersection_size(p.x_support(), q.z_support()) +
                          intersection_size(p.z_support(), q.x_support());
  return crossings % 2 == 0;
}

PauliOperator ribbon_z(const LatticePath& rho) {
  if (rho.kind() != PathKind::Direct) {
    throw std::invalid_argument("ribbon_z: expected a direct path");
  }
  return PauliOperator({}, rho.edges(), Phase::one());
}

PauliOperator ribbon_x(const LatticePath& rho_dual) {
  if (rho_dual.kind() != PathKind::Dual) {
    throw std::invalid_argument("ribbon_x: expected a dual path");
  }
  return PauliOperator(rho_dual.edges(), {}, Phase::one());
}

std::vector<bool> syndrome(const PauliOperator& p, const std::vector<Site>& sites) {
  std::vector<bool> bits(sites.size());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    auto es = site_edges(sites[i]);
    std::vector<Edge> probe(es.begin(), es.end());
    std::sort(probe.begin(), probe.end());
    const std::vector<Edge>& against =
        sites[i].is_vertex() ? p.z_support() : p.x_support();
    bits[i] = intersection_size(probe, against) % 2 == 1;
  }
  return bits;
}

std::vector<Site> full_syndrome(const PauliOperator& p) {
  std::map<Site, int> parity;
  for (const Edge& e : p.z_support()) {
    for (const Vertex& v : endpoints(e)) parity[Site::vertex(v)] ^= 1;
  }
  for (const Edge& e : p.x_support()) {
    for (const Face& f : side_faces(e)) parity[Site::face(f)] ^= 1;
  }
  std::vector<Site> flipped;
  for (const auto& [site, odd] : parity) {
    if (odd) flipped.push_back(site);
  }
  return flipped;
}

SignedStabilizerGroup::SignedStabilizerGroup(Patch support) : support_(std::move(support)) {
  words_ = (support_.size() + 63) / 64;
  if (words_ == 0) words_ = 1;
}

std::optional<SignedStabilizerGroup::Row> SignedStabilizerGroup::pack(
    const PauliOperator& p) const {
  const auto& edges = support_.edges();
  Row row;
  row.bits.assign(2 * words_, 0);
  row.sign = p.phase() == Phase::minus_one() ? -1 : 1;
  for (const Edge& e : p.x_support()) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return std::nullopt;
    std::size_t j = static_cast<std::size_t>(it - edges.begin());
    row.bits[j / 64] |= 1ULL << (j % 64);
  }
  for (const Edge& e : p.z_support()) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) return std::nullopt;
    std::size_t j = static_cast<std::size_t>(it - edges.begin());
    row.bits[words_ + j / 64] |= 1ULL << (j % 64);
  }
  return row;
}

SignedStabilizerGroup::Row SignedStabilizerGroup::pack_clipped(const PauliOperator& p) const {
  const auto& edges = support_.edges();
  Row row;
  row.bits.assign(2 * words_, 0);
  for (const Edge& e : p.x_support()) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) continue;
    std::size_t j = static_cast<std::size_t>(it - edges.begin());
    row.bits[j / 64] |= 1ULL << (j % 64);
  }
  for (const Edge& e : p.z_support()) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) continue;
    std::size_t j = static_cast<std::size_t>(it - edges.begin());
    row.bits[words_ + j / 64] |= 1ULL << (j % 64);
  }
  return row;
}

bool SignedStabilizerGroup::symplectic_odd(const Row& a, const Row& b) const {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    acc ^= static_cast<std::uint64_t>(std::popcount(a.bits[w] & b.bits[words_ + w]));
    acc ^= static_cast<std::uint64_t>(std::popcount(a.bits[words_ + w] & b.bits[w]));
  }
  return (acc & 1) != 0;
}

void SignedStabilizerGroup::row_multiply(Row& a, const Row& b) const {
  // (s_a X_a Z_a)(s_b X_b Z_b) = s_a s_b (-1)^{|Z_a n X_b|} X_{a^b} Z_{a^b}
  std::uint64_t crossings = 0;
  for (std::size_t w = 0; w < words_; ++w) {
    crossings ^= static_cast<std::uint64_t>(std::popcount(a.bits[words_ + w] & b.bits[w]));
  }
  if (crossings & 1) a.sign = -a.sign;
  a.sign *= b.sign;
  for (std::size_t w = 0; w < 2 * words_; ++w) a.bits[w] ^= b.bits[w];
  std::size_t need = std::max(a.combo.size(), b.combo.size());
  a.combo.resize(need, 0);
  for (std::size_t w = 0; w < b.combo.size(); ++w) a.combo[w] ^= b.combo[w];
}

namespace {

std::size_t first_set_bit(const std::vector<std::uint64_t>& bits) {
  for (std::size_t w = 0; w < bits.size(); ++w) {
    if (bits[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits[w]));
  }
  return static_cast<std::size_t>(-1);
}

bool bit_at(const std::vector<std::uint64_t>& bits, std::size_t j) {
  return (bits[j / 64] >> (j % 64)) & 1;
}

bool all_zero(const std::vector<std::uint64_t>& bits) {
  for (std::uint64_t w : bits) {
    if (w != 0) return false;
  }
  return true;
}

}  // namespace

void SignedStabilizerGroup::add_generator(const PauliOperator& g) {
  if (!g.phase().is_real()) {
    throw std::invalid_argument("add_generator: generator phase must be +/-1");
  }
  if (!g.is_hermitian()) {
    throw std::invalid_argument("add_generator: generator must square to identity");
  }
  auto packed = pack(g);
  if (!packed) {
    throw std::invalid_argument("add_generator: support outside the group patch");
  }
  for (const Row& r : rows_) {
    if (symplectic_odd(*packed, r)) {
      throw std::invalid_argument("add_generator: anticommutes with an existing generator");
    }
  }
  Row candidate = *packed;
  std::size_t index = generators_.size();
  candidate.combo.assign(index / 64 + 1, 0);
  candidate.combo[index / 64] |= 1ULL << (index % 64);
  for (const Row& r : rows_) {
    if (bit_at(candidate.bits, r.pivot)) row_multiply(candidate, r);
  }
  if (all_zero(candidate.bits)) {
    throw std::invalid_argument("add_generator: dependent on existing generators");
  }
  candidate.pivot = first_set_bit(candidate.bits);
  for (Row& r : rows_) {
    if (bit_at(r.bits, candidate.pivot)) row_multiply(r, candidate);
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), candidate.pivot,
                              [](const Row& r, std::size_t p) { return r.pivot < p; });
  rows_.insert(pos, std::move(candidate));
  generators_.push_back(g);
}

bool SignedStabilizerGroup::commutes_with_all(const PauliOperator& p) const {
  Row probe = pack_clipped(p);
  for (const Row& r : rows_) {
    if (symplectic_odd(probe, r)) return false;
  }
  return true;
}

std::optional<SignedStabilizerGroup::Membership> SignedStabilizerGroup::membership(
    const PauliOperator& p) const {
  if (!p.phase().is_real()) return std::nullopt;
  auto packed = pack(p);
  if (!packed) return std::nullopt;
  Row residual = *packed;
  Row acc;  // identity
  acc.bits.assign(2 * words_, 0);
  acc.sign = 1;
  while (!all_zero(residual.bits)) {
    std::size_t pivot = first_set_bit(residual.bits);
    auto it = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                               [](const Row& r, std::size_t pv) { return r.pivot < pv; });
    if (it == rows_.end() || it->pivot != pivot) return std::nullopt;
    for (std::size_t w = 0; w < 2 * words_; ++w) residual.bits[w] ^= it->bits[w];
    row_multiply(acc, *it);
  }
  Membership m;
  m.sign = acc.sign * (p.phase() == Phase::minus_one() ? -1 : 1);
  for (std::size_t w = 0; w < acc.combo.size(); ++w) {
    std::uint64_t word = acc.combo[w];
    while (word != 0) {
      m.witness.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  std::sort(m.witness.begin(), m.witness.end());
  return m;
}

std::vector<SignedStabilizerGroup::EchelonRow> SignedStabilizerGroup::echelon() const {
  std::vector<EchelonRow> out;
  out.reserve(rows_.size());
  for (const Row& r : rows_) {
    EchelonRow e;
    e.bits = r.bits;
    e.sign = r.sign;
    for (std::size_t w = 0; w < r.combo.size(); ++w) {
      std::uint64_t word = r.combo[w];
      while (word != 0) {
        e.combination.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
    std::sort(e.combination.begin(), e.combination.end());
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<PauliOperator> solve_syndrome(const std::vector<std::pair<Site, bool>>& target,
                                            const Patch& support) {
  const auto& edges = support.edges();
  const std::size_t n = edges.size();
  // Unknowns: z bits (columns [0, n)) for vertex equations, x bits
  // (columns [n, 2n)) for face equations.
  const std::size_t cols = 2 * n;
  const std::size_t words = cols / 64 + 1;

  struct Eq {
    std::vector<std::uint64_t> bits;
    bool rhs;
  };
  std::vector<Eq> eqs;
  eqs.reserve(target.size());
  for (const auto& [site, wanted] : target) {
    Eq eq{std::vector<std::uint64_t>(words, 0), wanted};
    std::size_t offset = site.is_vertex() ? 0 : n;
    for (const Edge& e : site_edges(site)) {
      auto it = std::lower_bound(edges.begin(), edges.end(), e);
      if (it == edges.end() || *it != e) continue;
      std::size_t j = offset + static_cast<std::size_t>(it - edges.begin());
      eq.bits[j / 64] ^= 1ULL << (j % 64);
    }
    eqs.push_back(std::move(eq));
  }

  std::vector<std::size_t> pivot_of_row;
  std::vector<Eq> reduced;
  for (Eq eq : eqs) {
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if (bit_at(eq.bits, pivot_of_row[r])) {
        for (std::size_t w = 0; w < words; ++w) eq.bits[w] ^= reduced[r].bits[w];
        eq.rhs = eq.rhs != reduced[r].rhs;
      }
    }
    if (all_zero(eq.bits)) {
      if (eq.rhs) return std::nullopt;  // 0 = 1
      continue;
    }
    std::size_t pivot = first_set_bit(eq.bits);
    for (std::size_t r = 0; r < reduced.size(); ++r) {
      if (bit_at(reduced[r].bits, pivot)) {
        for (std::size_t w = 0; w < words; ++w) reduced[r].bits[w] ^= eq.bits[w];
        reduced[r].rhs = reduced[r].rhs != eq.rhs;
      }
    }
    reduced.push_back(std::move(eq));
    pivot_of_row.push_back(pivot);
  }

  // Particular solution: pivot variables take the reduced right-hand sides,
  // free variables are zero.
  std::vector<Edge> x_edges, z_edges;
  for (std::size_t r = 0; r < reduced.size(); ++r) {
    if (!reduced[r].rhs) continue;
    std::size_t j = pivot_of_row[r];
    if (j < n) {
      z_edges.push_back(edges[j]);
    } else {
      x_edges.push_back(edges[j - n]);
    }
  }
  return PauliOperator(std::move(x_edges), std::move(z_edges), Phase::one());
}

PauliSum::PauliSum(std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) {
    if (a.op.x_support() != b.op.x_support()) return a.op.x_support() < b.op.x_support();
    return a.op.z_support() < b.op.z_support();
  });
  for (Term& t : raw) {
    if (!terms_.empty() && terms_.back().op == t.op) {
      terms_.back().coefficient += t.coefficient;
      if (terms_.back().coefficient.is_zero()) terms_.pop_back();
    } else if (!t.coefficient.is_zero()) {
      terms_.push_back(std::move(t));
    }
  }
}

PauliSum PauliSum::term(const GaussianRational& c, const PauliOperator& p) {
  GaussianRational folded = c * p.phase().value();
  PauliOperator bare(p.x_support(), p.z_support(), Phase::one());
  return PauliSum(std::vector<Term>{Term{folded, std::move(bare)}});
}

std::vector<Edge> PauliSum::support() const {
  std::vector<Edge> out;
  for (const Term& t : terms_) {
    auto s = t.op.support();
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  std::vector<PauliSum::Term> raw = a.terms_;
  raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
  return PauliSum(std::move(raw));
}

PauliSum operator-(const PauliSum& a, const PauliSum& b) { return a + b.scaled(Rational(-1)); }

PauliSum PauliSum::scaled(const GaussianRational& c) const {
  std::vector<Term> raw = terms_;
  for (Term& t : raw) t.coefficient = t.coefficient * c;
  return PauliSum(std::move(raw));
}

PauliSum multiply(const PauliSum& a, const PauliSum& b) {
  std::vector<PauliSum::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      PauliOperator prod = multiply(ta.op, tb.op);
      GaussianRational c = ta.coefficient * tb.coefficient * prod.phase().value();
      raw.push_back({c, PauliOperator(prod.x_support(), prod.z_support(), Phase::one())});
    }
  }
  return PauliSum(std::move(raw));
}

}  // namespace toricdiag
