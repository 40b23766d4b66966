#pragma once

#include "liya/matched_pair.hpp"

namespace liya {

// A linear map r : h -> g (g.dim x h.dim) living inside a matched pair.
struct DeformationMap {
  MatchedPair mp;
  Mat r;
  bool validated = false;  // set once both defining identities have passed
};

// One failed defining identity. condition 1 is the binary identity, 2 the
// ternary one; idx holds the 0-based h basis indices substituted; residual is
// left side minus right side, a vector of g.
struct DmViolation {
  int condition;
  std::vector<std::size_t> idx;
  Vec residual;
};

struct DmReport {
  bool passed = false;
  std::vector<DmViolation> violations;
};

DmReport check_deformation_map(const MatchedPair& mp, const Mat& r);
DeformationMap validate_deformation_map(MatchedPair mp, Mat r);

// Basis {(r(eps_j), eps_j)} of the graph of r inside bicrossed(mp). The map
// is a deformation map exactly when this span is a subalgebra there.
std::vector<Vec> graph_span(const MatchedPair& mp, const Mat& r);

// The twisted brackets on the underlying space of h. Validated before return.
LieYamagutiAlgebra induced_algebra(const DeformationMap& dm);

// (g; psi_r, nu_r) as a representation of induced_algebra(dm). The derived
// operator of the result is cross-checked against its closed formula before
// returning; the representation comes back validated.
Representation induced_representation(const DeformationMap& dm);

// sigma : h -> h must be invertible. Evaluates the two defining identities of
// the equivalence on all basis tuples, then cross-checks the answer against
// the graph reformulation: sigma is an isomorphism of the induced algebras.
bool check_dm_equivalence(const DeformationMap& a, const DeformationMap& b,
                          const Mat& sigma);

inline constexpr unsigned long kEnumerationBudget = 1ul << 20;

// Every deformation map over a finite field, scanned in lexicographic order
// of the row-major entry string (so r = 0 always comes first).
std::vector<DeformationMap> enumerate_deformation_maps(
    const MatchedPair& mp, unsigned long budget = kEnumerationBudget);

// All invertible m x m matrices over a finite field, same scan order.
std::vector<Mat> all_invertible(const Field& f, std::size_t m,
                                unsigned long budget = kEnumerationBudget);

struct ComplementCensus {
  Inclusion inclusion;
  CanonicalPair canonical;
  std::vector<DeformationMap> maps;
  std::vector<std::vector<std::size_t>> classes;  // indices into maps
  std::size_t factorization_index = 0;            // = classes.size()
};

// h_span must be a strong complement of g_span in E. Extracts the canonical
// matched pair, enumerates deformation maps, verifies every graph is a
// complement, and partitions the maps by exhaustive sigma search. The search
// relation is asserted to be a genuine equivalence before classes are formed.
ComplementCensus classify_complements(const Inclusion& inc,
                                      unsigned long budget = kEnumerationBudget);

// Matched pairs whose deformation maps are exactly the named operators.
// A deformation map always goes from the pair's h to its g.
MatchedPair homomorphism_pair(const LieYamagutiAlgebra& from,
                              const LieYamagutiAlgebra& to);
MatchedPair derivation_pair(const Representation& rep);
MatchedPair rota_baxter_weight0_pair(const Representation& rep);
// rho/mu must be an action of g on h (same contract as make_action_pair).
MatchedPair crossed_homomorphism_pair(const LieYamagutiAlgebra& g,
                                      const LieYamagutiAlgebra& h,
                                      std::vector<Mat> rho, std::vector<Mat> mu);
MatchedPair rota_baxter_weight1_pair(const LieYamagutiAlgebra& g,
                                     const LieYamagutiAlgebra& h,
                                     std::vector<Mat> rho, std::vector<Mat> mu);

// Two Lie algebras acting on each other, carried with zero ternary brackets
// and mu = nu = 0. Validated as a matched pair; the binary identity of its
// deformation maps is then the Lie-algebra one and the ternary identity only
// constrains the representation defects of rho and psi.
MatchedPair lie_matched_pair(const BinaryBracket& gb, const BinaryBracket& hb,
                             std::vector<Mat> rho, std::vector<Mat> psi);

}  // namespace liya
