#pragma once

#include "liya/cohomology.hpp"
#include "liya/deformation.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace liya {

// Graded cochains on a space V are the cohomology cochains with coefficients
// in V itself: a Cochain of degree n and repdim == dim.  Its graded degree is
// n - 1, so linear maps sit in degree 0 and the structure tensors of an
// algebra sit in degree 1.
using GradedCochain = Cochain;

Cochain add_cochains(const Cochain& a, const Cochain& b);
Cochain scale_cochain(const Scalar& c, const Cochain& a);
bool cochain_is_zero(const Cochain& a);

// the element of degree 1 packaging an algebra's two brackets: fI column
// (i,j) holds [e_i,e_j], fII holds the ternary values
GradedCochain pi_of(const LieYamagutiAlgebra& a);

// circle product of square cochains (both on the same space, values in it)
GradedCochain diamond(const GradedCochain& P, const GradedCochain& Q);

// [P,Q] = P<>Q - (-1)^{pq} Q<>P with p, q the graded degrees
GradedCochain graded_bracket(const GradedCochain& P, const GradedCochain& Q);

// Maurer-Cartan test for a candidate table: true iff pi<>pi == 0.  Works on
// unvalidated candidates; agrees with check_ly_axioms everywhere.
bool mc_check_pi(const LieYamagutiAlgebra& candidate);

// delta_pi(P) = (-1)^{n-1} [pi, P] on degree-n cochains; equals the
// coboundary with adjoint coefficients tensor for tensor
GradedCochain delta_pi(const LieYamagutiAlgebra& a, const GradedCochain& P);

// The bracket transported to a matched pair: the ambient graded Lie algebra
// on g + h, the abelian subalgebra of cochains with inputs from h and values
// in g, and the structure element Pi of the bicrossed product.
struct VData {
  MatchedPair mp;
  LieYamagutiAlgebra big;  // bicrossed product on g + h
  GradedCochain Pi;        // its degree-1 element
};

// Assembles the data and checks it: Pi<>Pi = 0, Pi projects to zero, and the
// subalgebra is abelian on a generating sample.
VData build_vdata(const MatchedPair& mp);

// a cochain with inputs from h and values in g, pushed into the big space
// (zero wherever a slot sees a g component) and cut back out again
GradedCochain vdata_embed(const VData& vd, const Cochain& a);
Cochain vdata_project(const VData& vd, const GradedCochain& e);

// Higher brackets l_k(a_1..a_k) = project [..[[Pi, a_1], a_2].., a_k] on the
// subalgebra; zero for k >= 4.  Twisting by a deformation map r folds r into
// l_1 and l_2 and kills nothing else.
struct LInftyStructure {
  VData vd;
  bool twisted = false;
  Mat r;  // g.dim x h.dim, meaningful when twisted
};

LInftyStructure derived_brackets(const VData& vd);
LInftyStructure twist(const LInftyStructure& ls, const DeformationMap& dm);

// one bracket evaluation; args live on (h, values in g), degree = arity - 1
Cochain linfty_l(const LInftyStructure& ls, const std::vector<Cochain>& args);

// l_1(r) + 1/2 l_2(r,r) + 1/6 l_3(r,r,r) as a degree-2 cochain on (h, g);
// zero exactly when r is a deformation map (r' extending ls.r when twisted).
// Needs 2 and 3 invertible, so characteristic 2 and 3 are refused.
Cochain mc_equation(const LInftyStructure& ls, const Mat& r);

// Betti numbers of l_1 (twisted or not) acting on C^n(h, g), n = 1..max_n.
// Checks l_1 . l_1 = 0 on the way.  From degree 2 up these match
// defmap_cohomology_dims of the twisting map.
std::vector<std::pair<int, std::size_t>> twisted_complex_dims(const LInftyStructure& ls,
                                                              std::size_t max_n = 3);

}  // namespace liya
