#pragma once

#include "liya/representation.hpp"

namespace liya {

// Two algebras acting on each other: rho/mu make h a module over g, psi/nu
// make g a module over h, and eighteen compatibility conditions tie the four
// tensors together.  Layout mirrors Representation: rho[i] and psi[a] are per
// basis element, mu[i*g.dim+j] and nu[a*h.dim+b] per ordered pair.
struct MatchedPair {
  LieYamagutiAlgebra g;
  LieYamagutiAlgebra h;
  std::vector<Mat> rho;  // g.dim matrices, h.dim x h.dim
  std::vector<Mat> mu;   // g.dim^2 matrices, h.dim x h.dim
  std::vector<Mat> psi;  // h.dim matrices, g.dim x g.dim
  std::vector<Mat> nu;   // h.dim^2 matrices, g.dim x g.dim
  bool validated = false;

  const Mat& mu_at(std::size_t i, std::size_t j) const { return mu[i * g.dim + j]; }
  Mat& mu_at(std::size_t i, std::size_t j) { return mu[i * g.dim + j]; }
  const Mat& nu_at(std::size_t a, std::size_t b) const { return nu[a * h.dim + b]; }
  Mat& nu_at(std::size_t a, std::size_t b) { return nu[a * h.dim + b]; }

  Representation rep_on_h() const;  // (h; rho, mu) over g
  Representation rep_on_g() const;  // (g; psi, nu) over h
};

// linear / bilinear combination of an operator family
Mat weight(const std::vector<Mat>& fam, const Vec& x);
Mat weight2(const std::vector<Mat>& fam, std::size_t n, const Vec& x, const Vec& y);

// One failed compatibility condition.  g_idx / h_idx hold the 0-based basis
// indices substituted for (x, y, z) and (alpha, beta, gamma); the residual is
// left side minus right side, a vector of h for conditions 1..9 and of g for
// 10..18.  Consequence reports use condition numbers 1..6 (residual in h for
// 1..3, in g for 4..6); the extra trailing index for conditions 3 and 6 is
// the column where the operator identity first fails.
struct MpViolation {
  int condition;
  std::vector<std::size_t> g_idx;
  std::vector<std::size_t> h_idx;
  Vec residual;
};

struct MpReport {
  bool passed = false;
  RepReport rep_h;  // (h; rho, mu) as a representation of g
  RepReport rep_g;  // (g; psi, nu) as a representation of h
  std::vector<MpViolation> violations;
};

MpReport check_matched_pair(const MatchedPair& mp);
MatchedPair validate_matched_pair(MatchedPair mp);

// The six derived identities: both D operators act as derivations of the
// opposite algebra's brackets, and D is killed by composing with the cross
// action in either slot.  Holds automatically on validated pairs.
MpReport check_consequences(const MatchedPair& mp);

LieYamagutiAlgebra bicrossed(const MatchedPair& mp);

MatchedPair zero_matched_pair(const LieYamagutiAlgebra& g, const LieYamagutiAlgebra& h);
MatchedPair semidirect_pair(const Representation& rep);
MatchedPair swapped(const MatchedPair& mp);

// rho/mu must form a representation and satisfy the seven action conditions;
// the result carries psi = nu = 0.  Throws math_error with a witness tuple.
MatchedPair make_action_pair(const LieYamagutiAlgebra& g, const LieYamagutiAlgebra& h,
                             std::vector<Mat> rho, std::vector<Mat> mu);

struct Inclusion {
  LieYamagutiAlgebra E;
  std::vector<Vec> g_span;
  std::vector<Vec> h_span;
};

bool check_factorization(const LieYamagutiAlgebra& E, const std::vector<Vec>& g_span,
                         const std::vector<Vec>& h_span, bool strong);

// Adapted-basis extraction of the four action tensors from an ambient algebra
// that strongly factorizes through the two spans.  change has the span
// vectors as columns (g first), so change conjugates the returned pair's
// bicrossed product back onto E.
struct CanonicalPair {
  MatchedPair pair;
  Mat change;
};

CanonicalPair canonical_matched_pair(const Inclusion& inc);

// u : g -> g and v : h -> h must be invertible homomorphisms; returns whether
// they intertwine the two action quadruples.
bool check_mp_equivalence(const MatchedPair& a, const MatchedPair& b, const Mat& u,
                          const Mat& v);

}  // namespace liya
