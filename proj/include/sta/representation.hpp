#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sta/algebra.hpp"

namespace sta {

/// Dense matrix over the Gaussian rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(int n);
  static Matrix zero(int n) { return Matrix(n, n); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  GaussianRational& at(int i, int j) { return a_[i * cols_ + j]; }
  const GaussianRational& at(int i, int j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const GaussianRational& c, const Matrix& a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_, cols_;
  std::vector<GaussianRational> a_;
};

enum class CocycleMode { CanonicalZ, Trivial };

/// A candidate representation given on generators: matrices for each p_v,
/// s_e, s_e*; values on basics derive as t_{Z(mu,nu)} = M(s_mu) M(s_nu*).
struct GeneratorAssignment {
  const Graph* graph = nullptr;
  int dim = 0;
  std::map<int, Matrix> p;      // vertex -> matrix
  std::map<int, Matrix> s;      // edge -> matrix
  std::map<int, Matrix> sstar;  // edge -> matrix
  CocycleMode mode = CocycleMode::CanonicalZ;

  /// M(s_mu): product of edge matrices along mu; P_v for an empty path.
  Matrix mat_path(const Path& mu) const;
  /// M(s_nu*): product of starred edge matrices in reverse order.
  Matrix mat_path_star(const Path& nu) const;
  Matrix t_basic(const BasicBisection& b) const;
};

/// Outcome of the finite axiom check at a given depth.
struct AxiomReport {
  bool passed = false;
  int depth = 0;
  std::string violation;  // empty when passed; names the first failing axiom

  std::string str() const;
};

/// Verifies R1 (empty products vanish), R2 (t_U t_V = t_{UV}) on all derived
/// basics with |mu|, |nu| <= depth, and R3 as the sibling-family additivity
/// t_{Z(mu,nu)} = sum_e t_{Z(mu e, nu e)} at that depth.  A pass certifies
/// the axioms to the stated depth only.  Throws DimensionMismatch.
AxiomReport check_axioms(const GeneratorAssignment& a, int depth);

/// pi(f) = sum a_U t_U over the normal form.  Requires a verified depth at
/// least the longest key path; throws DepthInsufficient.
Matrix extend_pi(const GeneratorAssignment& a, const AlgebraElement& f, int verified_depth);

/// Same sum over an unnormalized expression; well-definedness relative to
/// extend_pi is exactly the content of the universal property.
Matrix extend_pi_raw(const GeneratorAssignment& a, const std::vector<Term>& raw);

/// Finitely supported vector over the source fiber G u of a base unit.
struct FiberVector {
  Point base;  // the unit u; all index elements have source u
  std::map<GroupoidElement, GaussianRational> entries;

  static FiberVector delta(const Point& u);
  static FiberVector delta_at(const Point& u, const GroupoidElement& beta);
  friend bool operator==(const FiberVector&, const FiberVector&) = default;
};

/// Regular representation: rho(f) delta_beta = sum_{s(alpha)=r(beta)}
/// f(alpha) delta_{alpha beta}.
FiberVector regular_rep_apply(const AlgebraElement& f, const FiberVector& vec);

/// Standard sesquilinear form (f|g) = sum conj(f(beta)) g(beta); conjugate
/// linear in the first slot.  Throws BaseMismatch.
GaussianRational inner_product(const FiberVector& a, const FiberVector& b);

}  // namespace sta
