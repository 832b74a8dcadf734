#include "sta/representation.hpp"

#include <algorithm>

#include "sta/errors.hpp"

namespace sta {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const GaussianRational& c) { return c.is_zero(); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("matrix sum shape mismatch");
  Matrix m(a.rows_, a.cols_);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
  return m;
}

Matrix operator*(const GaussianRational& c, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.a_) x = c * x;
  return m;
}

Matrix GeneratorAssignment::mat_path(const Path& mu) const {
  if (mu.empty()) return p.at(mu.range_vertex());
  Matrix m = s.at(mu.edge_at(0));
  for (int i = 1; i < mu.length(); ++i) m = m * s.at(mu.edge_at(i));
  return m;
}

Matrix GeneratorAssignment::mat_path_star(const Path& nu) const {
  if (nu.empty()) return p.at(nu.range_vertex());
  Matrix m = sstar.at(nu.edge_at(nu.length() - 1));
  for (int i = nu.length() - 2; i >= 0; --i) m = m * sstar.at(nu.edge_at(i));
  return m;
}

Matrix GeneratorAssignment::t_basic(const BasicBisection& b) const {
  return mat_path(b.mu()) * mat_path_star(b.nu());
}

std::string AxiomReport::str() const {
  if (passed) return "verified to depth " + std::to_string(depth);
  return "violation at depth " + std::to_string(depth) + ": " + violation;
}

namespace {

std::vector<BasicBisection> basics_up_to(const Graph& g, int depth) {
  std::vector<BasicBisection> out;
  auto paths = all_paths_up_to(g, depth);
  for (const auto& mu : paths)
    for (const auto& nu : paths)
      if (mu.source_vertex() == nu.source_vertex()) out.emplace_back(mu, nu);
  return out;
}

}  // namespace

AxiomReport check_axioms(const GeneratorAssignment& a, int depth) {
  const Graph& g = *a.graph;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto it = a.p.find(v);
    if (it == a.p.end() || it->second.rows() != a.dim || it->second.cols() != a.dim)
      throw DimensionMismatch("missing or misshaped matrix for p_" + g.vertex_name(v));
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    for (const auto* m : {&a.s, &a.sstar}) {
      auto it = m->find(e);
      if (it == m->end() || it->second.rows() != a.dim || it->second.cols() != a.dim)
        throw DimensionMismatch("missing or misshaped matrix for edge " + g.edge(e).id);
    }
  }

  AxiomReport rep;
  rep.depth = depth;
  auto basics = basics_up_to(g, depth);

  // R2 (and R1 through the empty products): t_U t_V = t_{UV}, with t of the
  // empty set read as 0.
  for (const auto& u : basics)
    for (const auto& v : basics) {
      Matrix lhs = a.t_basic(u) * a.t_basic(v);
      auto uv = mul_basic(u, v);
      Matrix rhs = uv ? a.t_basic(*uv) : Matrix::zero(a.dim);
      if (!(lhs == rhs)) {
        rep.violation = std::string(uv ? "R2" : "R1/R2") + ": t" + u.str() + " t" + v.str() +
                        " != t(" + (uv ? uv->str() : std::string("empty)")) + ")";
        return rep;
      }
    }

  // R3 via disjoint unions that stay basic: every complete sibling family
  // partitions its parent.
  for (const auto& u : basics) {
    if (u.mu().length() >= depth || u.nu().length() >= depth) continue;
    Matrix sum = Matrix::zero(a.dim);
    for (const auto& child : expand_siblings(u)) sum = sum + a.t_basic(child);
    if (!(sum == a.t_basic(u))) {
      rep.violation = "R3: sibling family of " + u.str() + " does not sum to its parent";
      return rep;
    }
  }

  rep.passed = true;
  return rep;
}

Matrix extend_pi(const GeneratorAssignment& a, const AlgebraElement& f, int verified_depth) {
  int needed = 0;
  for (const auto& [b, c] : f.terms())
    needed = std::max({needed, b.mu().length(), b.nu().length()});
  if (verified_depth < needed)
    throw DepthInsufficient("axioms verified to depth " + std::to_string(verified_depth) +
                            " but keys reach length " + std::to_string(needed));
  Matrix m = Matrix::zero(a.dim);
  for (const auto& [b, c] : f.terms()) m = m + c * a.t_basic(b);
  return m;
}

Matrix extend_pi_raw(const GeneratorAssignment& a, const std::vector<Term>& raw) {
  Matrix m = Matrix::zero(a.dim);
  for (const auto& [b, c] : raw) m = m + c * a.t_basic(b);
  return m;
}

FiberVector FiberVector::delta(const Point& u) {
  return delta_at(u, GroupoidElement(u, 0, u, 0, 0));
}

FiberVector FiberVector::delta_at(const Point& u, const GroupoidElement& beta) {
  FiberVector v;
  v.base = u;
  v.entries.emplace(beta, GaussianRational(1));
  return v;
}

FiberVector regular_rep_apply(const AlgebraElement& f, const FiberVector& vec) {
  FiberVector out;
  out.base = vec.base;
  for (const auto& [beta, cb] : vec.entries) {
    const Point& rb = beta.range_point();
    for (const auto& [key, ck] : f.terms()) {
      // The unique alpha in the key with s(alpha) = r(beta), if any.
      if (!key.nu().is_prefix_of(rb.prefix(key.nu().length()))) continue;
      Point tail = rb.shift(key.nu().length());
      GroupoidElement alpha(tail.prepend(key.mu()), key.degree(), rb, key.mu().length(),
                            key.nu().length());
      GroupoidElement ab = alpha.compose(beta);
      auto& acc = out.entries[ab];
      acc += ck * cb;
      if (acc.is_zero()) out.entries.erase(ab);
    }
  }
  return out;
}

GaussianRational inner_product(const FiberVector& a, const FiberVector& b) {
  if (a.base != b.base) throw BaseMismatch();
  GaussianRational v;
  for (const auto& [beta, ca] : a.entries) {
    auto it = b.entries.find(beta);
    if (it != b.entries.end()) v += ca.conj() * it->second;
  }
  return v;
}

}  // namespace sta
