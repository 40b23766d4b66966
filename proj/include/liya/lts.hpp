#pragma once

#include "liya/deformation.hpp"

namespace liya {

// A Lie triple system: a single ternary bracket, antisymmetric in its first
// two slots, satisfying the cyclic sum identity and the five-variable
// derivation law.  Equivalently, a Lie-Yamaguti algebra with zero binary
// bracket -- and that embedding is how most operations here are implemented.
struct LieTripleSystem {
  Field field;
  std::size_t dim = 0;
  TernaryBracket ternary;
  bool validated = false;

  LieTripleSystem(const Field& f, std::size_t d) : field(f), dim(d), ternary(f, d) {}
  LieTripleSystem(const Field& f, std::size_t d, TernaryBracket t)
      : field(f), dim(d), ternary(std::move(t)) {}

  Vec tri(const Vec& x, const Vec& y, const Vec& z) const { return ternary.eval(x, y, z); }
};

// The zero-binary Lie-Yamaguti algebra carried by a validated system.
LieYamagutiAlgebra as_ly(const LieTripleSystem& s);

// Axiom check through the embedding.  Violations keep the ambient numbering:
// 1 for the cyclic identity, 4 for the five-variable law; 2 and 3 cannot
// fire once the binary bracket is zero.
AxiomReport check_lts(const LieTripleSystem& s);
LieTripleSystem validate_lts(LieTripleSystem s);

// A representation (V; mu) of a Lie triple system; mu[i*dim+j] acts on V.
struct LtsRepresentation {
  LieTripleSystem sys;
  std::size_t repdim = 0;
  std::vector<Mat> mu;
  bool validated = false;

  const Mat& mu_at(std::size_t i, std::size_t j) const { return mu[i * sys.dim + j]; }
};

// D(x,y) = mu(y,x) - mu(x,y), indexed like mu.
std::vector<Mat> lts_derived_D(const LtsRepresentation& r);

// The two defining conditions, reported as conditions 1 and 2.
RepReport check_lts_representation(const LtsRepresentation& r);
LtsRepresentation validate_lts_representation(LtsRepresentation r);

// mu(x,y) = <<-,x,y>> on the system itself.
LtsRepresentation lts_regular(const LieTripleSystem& s);

// Two triple systems acting on each other through mu and nu alone.
struct LtsMatchedPair {
  LieTripleSystem g;
  LieTripleSystem h;
  std::vector<Mat> mu;  // g.dim^2 matrices, h.dim x h.dim
  std::vector<Mat> nu;  // h.dim^2 matrices, g.dim x g.dim
  bool validated = false;

  const Mat& mu_at(std::size_t i, std::size_t j) const { return mu[i * g.dim + j]; }
  const Mat& nu_at(std::size_t a, std::size_t b) const { return nu[a * h.dim + b]; }
};

// The same data as a Lie-Yamaguti matched pair with zero rho and psi.
MatchedPair as_ly_pair(const LtsMatchedPair& mp);

// Both representation checks plus the six compatibility conditions.  The
// numbering is native to triple systems: conditions 1..3 have residuals in h
// with g_idx = (x,y) and h_idx = (alpha,beta,gamma); conditions 4..6 are
// their role-swapped mirrors, residuals in g with g_idx = (x,y,z) and
// h_idx = (alpha,beta).
MpReport check_lts_matched_pair(const LtsMatchedPair& mp);
LtsMatchedPair validate_lts_matched_pair(LtsMatchedPair mp);

// g acting on a module carried as an abelian system, nu = 0.
LtsMatchedPair lts_semidirect_pair(const LtsRepresentation& rep);

LieTripleSystem lts_bicrossed(const LtsMatchedPair& mp);

// The single deformation identity, checked through the embedding; a failure
// therefore carries condition 2 and h indices, like the ambient checker.
DmReport check_lts_deformation_map(const LtsMatchedPair& mp, const Mat& r);

// Twisted structures of a valid map r: the deformed bracket on h, and the
// representation of that new system induced on g.
LieTripleSystem lts_induced_system(const LtsMatchedPair& mp, const Mat& r);
LtsRepresentation lts_induced_representation(const LtsMatchedPair& mp, const Mat& r);

// Complement classification inside a triple system, delegated to the ambient
// census through the embedding.
ComplementCensus classify_lts_complements(const LieTripleSystem& E,
                                          const std::vector<Vec>& g_span,
                                          const std::vector<Vec>& h_span,
                                          unsigned long budget = kEnumerationBudget);

}  // namespace liya
