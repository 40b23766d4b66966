#pragma once

#include "liya/algebra.hpp"

namespace liya {

// A representation (V; rho, mu) of a Lie-Yamaguti algebra:
//   rho[i]        : action of e_i on V
//   mu[i*n + j]   : action of the pair (e_i, e_j) on V  (no symmetry in i,j)
struct Representation {
  LieYamagutiAlgebra alg;
  std::size_t repdim;
  std::vector<Mat> rho;
  std::vector<Mat> mu;
  bool validated = false;

  const Mat& mu_at(std::size_t i, std::size_t j) const { return mu[i * alg.dim + j]; }
  Mat rho_vec(const Vec& x) const;              // rho_x for a general x
  Mat mu_vec(const Vec& x, const Vec& y) const; // mu(x,y), bilinear
};

Representation zero_representation(const LieYamagutiAlgebra& a, std::size_t repdim);

// D(x,y) = rho_x rho_y - rho_y rho_x - rho_[x,y] - mu(x,y) + mu(y,x),
// indexed like mu. Antisymmetric in (x,y).
std::vector<Mat> derived_D(const Representation& r);
Mat derived_D_vec(const Representation& r, const Vec& x, const Vec& y);

struct RepViolation {
  int condition;  // 1..5
  std::vector<std::size_t> tuple;
  Mat residual;
};

struct RepReport {
  bool passed = true;
  std::vector<RepViolation> violations;
};

// The five defining conditions, checked as operator identities on basis tuples.
RepReport check_representation(const Representation& r);

// Runs check_representation and either marks the representation validated or
// throws math_error with the first violation.
Representation validate_representation(Representation r);

// Adjoint representation: rho_x = [x,-], mu(x,y) = <<-,x,y>>.
Representation adjoint(const LieYamagutiAlgebra& a);

// Semidirect product g x| V with V carried as an abelian algebra.
LieYamagutiAlgebra semidirect(const Representation& r);

}  // namespace liya
