#include "toricdiag/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace toricdiag {
namespace oracle {

SparseRationalMatrix::SparseRationalMatrix(std::size_t dim) : dim_(dim), cols_(dim) {}

SparseRationalMatrix SparseRationalMatrix::identity(std::size_t dim) {
  SparseRationalMatrix m(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    m.cols_[j].emplace_back(static_cast<std::uint32_t>(j), GaussianRational(Rational(1)));
  }
  return m;
}

void SparseRationalMatrix::set(std::size_t row, std::size_t col, const GaussianRational& v) {
  Column& c = cols_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == row) {
    if (v.is_zero()) {
      c.erase(it);
    } else {
      it->second = v;
    }
  } else if (!v.is_zero()) {
    c.insert(it, {static_cast<std::uint32_t>(row), v});
  }
}

GaussianRational SparseRationalMatrix::entry(std::size_t row, std::size_t col) const {
  const Column& c = cols_.at(col);
  auto it = std::lower_bound(c.begin(), c.end(), row,
                             [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == row) return it->second;
  return GaussianRational();
}

std::size_t SparseRationalMatrix::nonzero_count() const {
  std::size_t total = 0;
  for (const Column& c : cols_) total += c.size();
  return total;
}

SparseRationalMatrix operator*(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  SparseRationalMatrix out(a.dim_);
  std::vector<GaussianRational> accum(a.dim_);
  std::vector<std::uint32_t> touched;
  for (std::size_t j = 0; j < b.dim_; ++j) {
    touched.clear();
    for (const auto& [k, bkj] : b.cols_[j]) {
      for (const auto& [i, aik] : a.cols_[k]) {
        if (accum[i].is_zero()) touched.push_back(i);
        accum[i] += aik * bkj;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (std::uint32_t i : touched) {
      if (!accum[i].is_zero()) out.cols_[j].emplace_back(i, accum[i]);
      accum[i] = GaussianRational();
    }
  }
  return out;
}

SparseRationalMatrix operator+(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  SparseRationalMatrix out(a.dim_);
  for (std::size_t j = 0; j < a.dim_; ++j) {
    auto ia = a.cols_[j].begin(), ib = b.cols_[j].begin();
    while (ia != a.cols_[j].end() || ib != b.cols_[j].end()) {
      if (ib == b.cols_[j].end() || (ia != a.cols_[j].end() && ia->first < ib->first)) {
        out.cols_[j].push_back(*ia++);
      } else if (ia == a.cols_[j].end() || ib->first < ia->first) {
        out.cols_[j].push_back(*ib++);
      } else {
        GaussianRational v = ia->second + ib->second;
        if (!v.is_zero()) out.cols_[j].emplace_back(ia->first, v);
        ++ia;
        ++ib;
      }
    }
  }
  return out;
}

SparseRationalMatrix operator-(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  return a + b.scaled(GaussianRational(Rational(-1)));
}

SparseRationalMatrix SparseRationalMatrix::scaled(const GaussianRational& c) const {
  SparseRationalMatrix out(dim_);
  if (c.is_zero()) return out;
  out.cols_ = cols_;
  for (Column& col : out.cols_) {
    for (auto& [row, v] : col) v = v * c;
  }
  return out;
}

SparseRationalMatrix SparseRationalMatrix::adjoint() const {
  SparseRationalMatrix out(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (const auto& [i, v] : cols_[j]) {
      out.cols_[i].emplace_back(static_cast<std::uint32_t>(j), v.conjugated());
    }
  }
  for (Column& col : out.cols_) {
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return out;
}

GaussianRational SparseRationalMatrix::trace() const {
  GaussianRational t;
  for (std::size_t j = 0; j < dim_; ++j) t += entry(j, j);
  return t;
}

bool SparseRationalMatrix::is_zero() const {
  for (const Column& c : cols_) {
    if (!c.empty()) return false;
  }
  return true;
}

SparseRationalMatrix kron(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  SparseRationalMatrix out(a.dim_ * b.dim_);
  for (std::size_t ja = 0; ja < a.dim_; ++ja) {
    for (const auto& [ia, va] : a.cols_[ja]) {
      for (std::size_t jb = 0; jb < b.dim_; ++jb) {
        for (const auto& [ib, vb] : b.cols_[jb]) {
          out.cols_[ja * b.dim_ + jb].emplace_back(
              static_cast<std::uint32_t>(ia * b.dim_ + ib), va * vb);
        }
      }
    }
  }
  for (auto& col : out.cols_) {
    std::sort(col.begin(), col.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  return out;
}

namespace {

SparseRationalMatrix pauli_2x2(char which) {
  SparseRationalMatrix m(2);
  switch (which) {
    case 'i':
      m.set(0, 0, Rational(1));
      m.set(1, 1, Rational(1));
      break;
    case 'x':
      m.set(0, 1, Rational(1));
      m.set(1, 0, Rational(1));
      break;
    case 'z':
      m.set(0, 0, Rational(1));
      m.set(1, 1, Rational(-1));
      break;
    default:
      throw std::logic_error("unknown single-edge matrix");
  }
  return m;
}

std::size_t edge_position(const Patch& patch, const Edge& e) {
  const auto& edges = patch.edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) {
    throw std::invalid_argument("oracle: operator support outside the patch");
  }
  return static_cast<std::size_t>(it - edges.begin());
}

SparseRationalMatrix single_edge_operator(const Patch& patch, std::size_t position, char which) {
  SparseRationalMatrix m = SparseRationalMatrix::identity(1);
  for (std::size_t k = 0; k < patch.size(); ++k) {
    m = kron(m, pauli_2x2(k == position ? which : 'i'));
  }
  return m;
}

void check_patch(const Patch& patch) {
  if (patch.size() > kMaxOracleEdges) {
    throw std::invalid_argument("oracle: patch exceeds the 12-edge cap");
  }
}

}  // namespace

SparseRationalMatrix dense(const PauliOperator& p, const Patch& patch) {
  check_patch(patch);
  const std::size_t dim = std::size_t{1} << patch.size();
  SparseRationalMatrix m = SparseRationalMatrix::identity(dim).scaled(p.phase().value());
  for (const Edge& e : p.x_support()) {
    m = m * single_edge_operator(patch, edge_position(patch, e), 'x');
  }
  for (const Edge& e : p.z_support()) {
    m = m * single_edge_operator(patch, edge_position(patch, e), 'z');
  }
  return m;
}

SparseRationalMatrix dense_sum(const PauliSum& x, const Patch& patch) {
  check_patch(patch);
  SparseRationalMatrix total(std::size_t{1} << patch.size());
  for (const auto& term : x.terms()) {
    total = total + dense(term.op, patch).scaled(term.coefficient);
  }
  return total;
}

SparseRationalMatrix dense_projector(const ProjectorNetElement& e) {
  check_patch(e.patch());
  const std::size_t dim = std::size_t{1} << e.patch().size();
  SparseRationalMatrix p = SparseRationalMatrix::identity(dim);
  const GaussianRational half(Rational(1, 2));
  for (const Site& w : e.interior()) {
    SparseRationalMatrix sw = dense(site_operator(w), e.patch());
    int sign = e.config().sign_at(w);
    SparseRationalMatrix factor =
        (SparseRationalMatrix::identity(dim) + sw.scaled(Rational(sign))).scaled(half);
    p = p * factor;
  }
  return p;
}

HamiltonianSpectrum dense_hamiltonian(const Patch& patch, const Configuration& f) {
  check_patch(patch);
  const std::size_t dim = std::size_t{1} << patch.size();
  std::vector<Site> interior = patch.interior_sites();
  if (!f.covers(interior)) {
    throw std::invalid_argument("dense_hamiltonian: configuration misses an interior site");
  }
  const std::size_t m = interior.size();
  if (m > 20) throw std::invalid_argument("dense_hamiltonian: too many interior sites");

  const GaussianRational half(Rational(1, 2));
  SparseRationalMatrix h(dim);
  std::vector<SparseRationalMatrix> signed_ops;
  signed_ops.reserve(m);
  for (const Site& w : interior) {
    SparseRationalMatrix sw = dense(site_operator(w), patch).scaled(Rational(f.sign_at(w)));
    h = h + (SparseRationalMatrix::identity(dim) - sw).scaled(half);
    signed_ops.push_back(std::move(sw));
  }

  // Joint eigenspaces of the commuting involutions: one sector projector per
  // sign pattern, each verified to be H-invariant with the expected integer
  // eigenvalue and the expected rank.
  const long long sector_rank = static_cast<long long>(dim >> m);
  std::vector<long long> multiplicity(m + 1, 0);
  SparseRationalMatrix sector_sum(dim);
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << m); ++pattern) {
    SparseRationalMatrix projector = SparseRationalMatrix::identity(dim);
    int violations = 0;
    for (std::size_t i = 0; i < m; ++i) {
      int s = ((pattern >> i) & 1) ? -1 : 1;
      if (s == -1) ++violations;
      projector =
          projector *
          (SparseRationalMatrix::identity(dim) + signed_ops[i].scaled(Rational(s))).scaled(half);
    }
    if (projector.trace() != GaussianRational(Rational(sector_rank))) {
      throw std::logic_error("dense_hamiltonian: sector rank mismatch");
    }
    if (h * projector != projector.scaled(Rational(violations))) {
      throw std::logic_error("dense_hamiltonian: sector is not an eigenspace");
    }
    multiplicity[static_cast<std::size_t>(violations)] += sector_rank;
    sector_sum = sector_sum + projector;
  }
  if (sector_sum != SparseRationalMatrix::identity(dim)) {
    throw std::logic_error("dense_hamiltonian: sectors do not resolve the identity");
  }

  HamiltonianSpectrum out{std::move(h), {}, sector_rank};
  for (std::size_t k = 0; k <= m; ++k) {
    out.spectrum.emplace_back(static_cast<int>(k), multiplicity[k]);
  }
  return out;
}

DenseCompressionResult dense_compress(const PauliOperator& p, const ProjectorNetElement& e) {
  return dense_compress_sum(PauliSum::term(Rational(1), p), e);
}

DenseCompressionResult dense_compress_sum(const PauliSum& x, const ProjectorNetElement& e) {
  SparseRationalMatrix projector = dense_projector(e);
  SparseRationalMatrix op = dense_sum(x, e.patch());
  SparseRationalMatrix compressed = projector * op * projector;
  GaussianRational omega = compressed.trace().divided_by(projector.trace().re);
  DenseCompressionResult result;
  result.scalar = omega;
  if (compressed.is_zero()) {
    result.kind = DenseCompression::Zero;
  } else if (compressed == projector.scaled(omega)) {
    result.kind = DenseCompression::Scalar;
  } else {
    result.kind = DenseCompression::Residual;
  }
  return result;
}

}  // namespace oracle
}  // namespace toricdiag
