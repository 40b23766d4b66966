#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "liya/matrix.hpp"

namespace liya {

// Structure constants of an antisymmetric binary bracket:
//   [e_i, e_j] = sum_k c[i][j][k] e_k      (all indices 0-based)
// Antisymmetry is stored explicitly and validated, never induced silently.
class BinaryBracket {
 public:
  BinaryBracket(const Field& f, std::size_t dim);  // zero bracket

  std::size_t dim() const { return dim_; }
  const Field& field() const { return f_; }

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  // Sets [e_i,e_j] += v e_k and [e_j,e_i] -= v e_k.
  void add_antisym(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);

  Vec basis(std::size_t i, std::size_t j) const;       // [e_i, e_j]
  Vec eval(const Vec& x, const Vec& y) const;          // bilinear extension
  Vec eval_basis_vec(std::size_t i, const Vec& y) const;
  Vec eval_vec_basis(const Vec& x, std::size_t j) const;
  Mat ad(std::size_t i) const;  // y -> [e_i, y]

  // Throws math_error naming the first offending (i,j,k) if c is not
  // antisymmetric in (i,j).
  void validate_antisymmetry() const;

  bool operator==(const BinaryBracket& o) const { return c_ == o.c_ && dim_ == o.dim_; }

 private:
  Field f_;
  std::size_t dim_;
  std::vector<Scalar> c_;
};

// Structure constants of a ternary bracket antisymmetric in its first two
// slots: <<e_i, e_j, e_k>> = sum_l t[i][j][k][l] e_l.
class TernaryBracket {
 public:
  TernaryBracket(const Field& f, std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Field& field() const { return f_; }

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return t_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  Scalar& at(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return t_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  void add_antisym(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const Scalar& v);

  Vec basis(std::size_t i, std::size_t j, std::size_t k) const;
  Vec eval(const Vec& x, const Vec& y, const Vec& z) const;
  // <<e_i, e_j, z>> as a matrix in z.
  Mat op(std::size_t i, std::size_t j) const;

  void validate_antisymmetry() const;

  bool operator==(const TernaryBracket& o) const { return t_ == o.t_ && dim_ == o.dim_; }

 private:
  Field f_;
  std::size_t dim_;
  std::vector<Scalar> t_;
};

struct LieYamagutiAlgebra {
  Field field;
  std::size_t dim;
  BinaryBracket binary;
  TernaryBracket ternary;
  bool validated = false;  // set once check_ly_axioms has passed

  LieYamagutiAlgebra(const Field& f, std::size_t d)
      : field(f), dim(d), binary(f, d), ternary(f, d) {}
  LieYamagutiAlgebra(const Field& f, std::size_t d, BinaryBracket b, TernaryBracket t)
      : field(f), dim(d), binary(std::move(b)), ternary(std::move(t)) {}

  Vec bracket(const Vec& x, const Vec& y) const { return binary.eval(x, y); }
  Vec tri(const Vec& x, const Vec& y, const Vec& z) const { return ternary.eval(x, y, z); }
  void require_validated(const char* who) const;
};

// axiom numbers as in the report: 1..4 (defining identities), 0 = antisymmetry
struct AxiomViolation {
  int axiom;
  std::vector<std::size_t> tuple;  // basis indices, 0-based
  Vec residual;
};

struct AxiomReport {
  bool passed = true;
  std::vector<AxiomViolation> violations;
};

// Checks the four defining identities on all basis tuples. Antisymmetry of
// the stored tensors is validated first (throws on violation: that is a
// malformed input, not a mathematical failure).
AxiomReport check_ly_axioms(const LieYamagutiAlgebra& a);

// Runs check_ly_axioms; returns the algebra with validated = true or throws
// math_error carrying the first violation.
LieYamagutiAlgebra validate_ly(LieYamagutiAlgebra a);

enum class LieTernary { zero, iterated };

// Lie algebra -> LY algebra, with zero ternary or <<x,y,z>> = [[x,y],z].
// Throws math_error with the failing triple if Jacobi does not hold.
LieYamagutiAlgebra from_lie(const BinaryBracket& b, LieTernary mode);

// Left Leibniz product prod[i][j][k] (e_i o e_j = sum_k prod[i][j][k] e_k):
//   [x,y] = x o y - y o x,  <<x,y,z>> = -(x o y) o z.
// The left Leibniz identity is checked first.
LieYamagutiAlgebra from_leibniz(const Field& f, std::size_t dim,
                                const std::vector<Scalar>& prod);

// Lie triple system (cyclic identity + the ternary derivation identity),
// embedded with zero binary bracket. Checked.
LieYamagutiAlgebra from_lts_ternary(const TernaryBracket& t);

// Is the span of the given vectors closed under both brackets?
bool is_subalgebra(const LieYamagutiAlgebra& a, const std::vector<Vec>& span);

// Does phi (dim b x dim a) intertwine both brackets?
bool check_homomorphism(const LieYamagutiAlgebra& a, const LieYamagutiAlgebra& b,
                        const Mat& phi);

LieYamagutiAlgebra direct_sum(const LieYamagutiAlgebra& a, const LieYamagutiAlgebra& b);

}  // namespace liya
