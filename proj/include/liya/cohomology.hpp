#pragma once

#include "liya/deformation.hpp"

namespace liya {

// wedge^2 of a d-dimensional space: ordered pairs (i<j), lexicographic
std::size_t wedge_dim(std::size_t d);
std::size_t wedge_index(std::size_t i, std::size_t j, std::size_t d);
std::pair<std::size_t, std::size_t> wedge_pair(std::size_t t, std::size_t d);

// x wedge y expanded on that basis
using WedgeElement = Vec;
WedgeElement wedge_of(const Vec& x, const Vec& y);

// A cochain on a d-dimensional algebra with values in an m-dimensional
// module.  Degree 1 is a single map f : g -> V.  Degree n >= 2 has two
// blocks: F_I on (n-1) wedge slots and F_II on (n-1) wedge slots plus one
// algebra slot.  Input tuples index columns big-endian, first slot most
// significant, the trailing algebra slot fastest.
struct Cochain {
  std::size_t degree = 1;
  Mat f;    // degree 1: m x d
  Mat fI;   // degree >= 2: m x w^(n-1)
  Mat fII;  // degree >= 2: m x (w^(n-1) * d)
};

std::size_t cochain_dim(std::size_t d, std::size_t m, std::size_t degree);
Cochain zero_cochain(const Field& f, std::size_t d, std::size_t m, std::size_t degree);

// flat coordinates: degree 1 the columns of f, otherwise the columns of fI
// followed by the columns of fII
Vec cochain_coords(const Cochain& c);
Cochain cochain_from_coords(const Field& f, std::size_t d, std::size_t m,
                            std::size_t degree, const Vec& coords);

// multilinear evaluation of the two blocks (degree >= 2)
Vec eval_I(const Cochain& c, const std::vector<WedgeElement>& xs);
Vec eval_II(const Cochain& c, const std::vector<WedgeElement>& xs, const Vec& x);

// the differential of the cochain complex of rep.alg with coefficients in rep
Cochain coboundary(const Representation& rep, const Cochain& c);

// delta on basis cochains of the given degree, one column each
Mat coboundary_matrix(const Representation& rep, std::size_t degree);

// (degree, dim H^degree) for degrees 1..max_n; rep must be validated
std::vector<std::pair<int, std::size_t>> cohomology_dims(const Representation& rep,
                                                         std::size_t max_n = 3);

// d(x wedge y) alpha = r(D(x,y) alpha) - <<x, y, r(alpha)>>, a map h -> g
Mat defmap_d(const DeformationMap& dm, const WedgeElement& X);

// the twisted differential: the coboundary of h_r with coefficients in
// (g; psi_r, nu_r)
Cochain defmap_delta(const DeformationMap& dm, const Cochain& c);

// The complex of a deformation map: wedge^2 g in degree 0 mapped by d, the
// twisted complex above it.  Returns (degree, dim) for degrees 0..max_n.
std::vector<std::pair<int, std::size_t>> defmap_cohomology_dims(const DeformationMap& dm,
                                                                std::size_t max_n = 3);

}  // namespace liya
