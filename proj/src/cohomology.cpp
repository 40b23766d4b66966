#include "liya/cohomology.hpp"

#include <stdexcept>

namespace liya {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

// Full multilinear contraction of a coefficient block against one vector per
// slot. Columns are indexed big-endian with the last slot fastest, matching
// the Cochain layout.
Vec contract_all(const Mat& coeffs, const std::vector<Vec>& slots) {
  const Field& f = coeffs.field();
  Vec out = zero_vec(f, coeffs.rows());
  std::size_t total = 1;
  for (const Vec& s : slots) total *= s.size();
  if (coeffs.cols() != total)
    throw math_error("cochain evaluation: slot sizes do not match the stored block");
  std::vector<std::size_t> ix(slots.size(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t k = slots.size(); k-- > 0;) {
      ix[k] = rest % slots[k].size();
      rest /= slots[k].size();
    }
    Scalar c = f.one();
    bool dead = false;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      const Scalar& v = slots[k][ix[k]];
      if (v.is_zero()) {
        dead = true;
        break;
      }
      c *= v;
    }
    if (dead) continue;
    for (std::size_t r = 0; r < coeffs.rows(); ++r) out[r] += c * coeffs.at(r, idx);
  }
  return out;
}

void set_column(Mat& m, std::size_t c, const Vec& v) {
  for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = v[r];
}

void check_shape(const Representation& rep, const Cochain& c) {
  const std::size_t d = rep.alg.dim, m = rep.repdim, w = wedge_dim(d);
  if (c.degree == 0) throw math_error("coboundary: degree must be at least 1");
  if (c.degree == 1) {
    if (c.f.rows() != m || c.f.cols() != d)
      throw math_error("coboundary: a degree-1 cochain must be repdim x dim");
    return;
  }
  const std::size_t wp = ipow(w, c.degree - 1);
  if (c.fI.rows() != m || c.fI.cols() != wp || c.fII.rows() != m || c.fII.cols() != wp * d)
    throw math_error("coboundary: cochain blocks do not match the representation's dimensions");
}

}  // namespace

std::size_t wedge_dim(std::size_t d) { return d * (d - 1) / 2; }

std::size_t wedge_index(std::size_t i, std::size_t j, std::size_t d) {
  if (i >= j || j >= d) throw math_error("wedge_index needs i < j < dim");
  return i * d - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> wedge_pair(std::size_t t, std::size_t d) {
  for (std::size_t i = 0; i + 1 < d; ++i) {
    std::size_t block = d - 1 - i;
    if (t < block) return {i, i + 1 + t};
    t -= block;
  }
  throw math_error("wedge_pair: index out of range");
}

WedgeElement wedge_of(const Vec& x, const Vec& y) {
  if (x.size() != y.size()) throw math_error("wedge_of needs vectors of one dimension");
  const std::size_t d = x.size();
  WedgeElement out;
  out.reserve(wedge_dim(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) out.push_back(x[i] * y[j] - x[j] * y[i]);
  return out;
}

std::size_t cochain_dim(std::size_t d, std::size_t m, std::size_t degree) {
  if (degree == 0) throw math_error("cochain_dim: degree must be at least 1");
  if (degree == 1) return m * d;
  const std::size_t wp = ipow(wedge_dim(d), degree - 1);
  return m * wp + m * wp * d;
}

Cochain zero_cochain(const Field& f, std::size_t d, std::size_t m, std::size_t degree) {
  if (degree == 0) throw math_error("zero_cochain: degree must be at least 1");
  if (degree == 1) return Cochain{degree, Mat(f, m, d), Mat(f, 0, 0), Mat(f, 0, 0)};
  const std::size_t wp = ipow(wedge_dim(d), degree - 1);
  return Cochain{degree, Mat(f, 0, 0), Mat(f, m, wp), Mat(f, m, wp * d)};
}

Vec cochain_coords(const Cochain& c) {
  Vec out;
  const Mat* blocks[2] = {&c.fI, &c.fII};
  if (c.degree == 1) {
    out.reserve(c.f.rows() * c.f.cols());
    for (std::size_t j = 0; j < c.f.cols(); ++j)
      for (std::size_t r = 0; r < c.f.rows(); ++r) out.push_back(c.f.at(r, j));
    return out;
  }
  for (const Mat* b : blocks)
    for (std::size_t j = 0; j < b->cols(); ++j)
      for (std::size_t r = 0; r < b->rows(); ++r) out.push_back(b->at(r, j));
  return out;
}

Cochain cochain_from_coords(const Field& f, std::size_t d, std::size_t m,
                            std::size_t degree, const Vec& coords) {
  if (coords.size() != cochain_dim(d, m, degree))
    throw math_error("cochain_from_coords: wrong coordinate count");
  Cochain c = zero_cochain(f, d, m, degree);
  std::size_t at = 0;
  if (degree == 1) {
    for (std::size_t j = 0; j < c.f.cols(); ++j)
      for (std::size_t r = 0; r < m; ++r) c.f.at(r, j) = coords[at++];
    return c;
  }
  for (Mat* b : {&c.fI, &c.fII})
    for (std::size_t j = 0; j < b->cols(); ++j)
      for (std::size_t r = 0; r < m; ++r) b->at(r, j) = coords[at++];
  return c;
}

Vec eval_I(const Cochain& c, const std::vector<WedgeElement>& xs) {
  if (c.degree < 2) throw math_error("eval_I needs degree at least 2");
  if (xs.size() != c.degree - 1) throw math_error("eval_I: wrong number of wedge slots");
  return contract_all(c.fI, xs);
}

Vec eval_II(const Cochain& c, const std::vector<WedgeElement>& xs, const Vec& x) {
  if (c.degree < 2) throw math_error("eval_II needs degree at least 2");
  if (xs.size() != c.degree - 1) throw math_error("eval_II: wrong number of wedge slots");
  std::vector<Vec> slots = xs;
  slots.push_back(x);
  return contract_all(c.fII, slots);
}

Cochain coboundary(const Representation& rep, const Cochain& c) {
  const LieYamagutiAlgebra& A = rep.alg;
  const Field& f = A.field;
  const std::size_t d = A.dim, m = rep.repdim, w = wedge_dim(d);
  check_shape(rep, c);
  const std::vector<Mat> D = derived_D(rep);
  const std::size_t n = c.degree;
  Cochain out = zero_cochain(f, d, m, n + 1);

  if (n == 1) {
    for (std::size_t t = 0; t < w; ++t) {
      auto [i, j] = wedge_pair(t, d);
      Vec colI = rep.rho[i].apply(c.f.column(j));
      sub_in_place(colI, rep.rho[j].apply(c.f.column(i)));
      sub_in_place(colI, c.f.apply(A.binary.basis(i, j)));
      set_column(out.fI, t, colI);
      for (std::size_t s = 0; s < d; ++s) {
        Vec colII = D[i * d + j].apply(c.f.column(s));
        add_in_place(colII, rep.mu_at(j, s).apply(c.f.column(i)));
        sub_in_place(colII, rep.mu_at(i, s).apply(c.f.column(j)));
        sub_in_place(colII, c.f.apply(A.ternary.basis(i, j, s)));
        set_column(out.fII, t * d + s, colII);
      }
    }
    return out;
  }

  // degree n >= 2: the output takes n wedge slots
  const Scalar top_sign = f.integer((n - 1) % 2 ? -1 : 1);
  const std::size_t tuples = ipow(w, n);
  std::vector<std::size_t> ts(n);
  for (std::size_t T = 0; T < tuples; ++T) {
    std::size_t rest = T;
    for (std::size_t k = n; k-- > 0;) {
      ts[k] = rest % w;
      rest /= w;
    }
    std::vector<std::size_t> a(n), b(n);
    std::vector<WedgeElement> slot(n);
    for (std::size_t k = 0; k < n; ++k) {
      auto [i, j] = wedge_pair(ts[k], d);
      a[k] = i;
      b[k] = j;
      slot[k] = unit_vec(f, w, ts[k]);
    }
    std::vector<WedgeElement> head(slot.begin(), slot.end() - 1);

    // drop 1-based slot k from the full list
    auto dropped = [&](std::size_t k) {
      std::vector<WedgeElement> v;
      v.reserve(n - 1);
      for (std::size_t l = 0; l < n; ++l)
        if (l != k - 1) v.push_back(slot[l]);
      return v;
    };
    // drop slot i and splice the bracket of pair i into the wedge at slot j
    auto spliced = [&](std::size_t i1, std::size_t j1) {
      std::vector<WedgeElement> v = dropped(i1);
      Vec mod = wedge_of(A.ternary.basis(a[i1 - 1], b[i1 - 1], a[j1 - 1]), unit_vec(f, d, b[j1 - 1]));
      add_in_place(mod, wedge_of(unit_vec(f, d, a[j1 - 1]), A.ternary.basis(a[i1 - 1], b[i1 - 1], b[j1 - 1])));
      v[j1 - 2] = mod;  // after the drop, slot j sits one place earlier
      return v;
    };

    Vec colI = rep.rho[a[n - 1]].apply(eval_II(c, head, unit_vec(f, d, b[n - 1])));
    sub_in_place(colI, rep.rho[b[n - 1]].apply(eval_II(c, head, unit_vec(f, d, a[n - 1]))));
    sub_in_place(colI, eval_II(c, head, A.binary.basis(a[n - 1], b[n - 1])));
    colI = scaled(top_sign, colI);
    for (std::size_t k = 1; k <= n - 1; ++k) {
      Vec term = D[a[k - 1] * d + b[k - 1]].apply(eval_I(c, dropped(k)));
      if (k % 2 == 1)
        add_in_place(colI, term);
      else
        sub_in_place(colI, term);
    }
    for (std::size_t i1 = 1; i1 <= n; ++i1)
      for (std::size_t j1 = i1 + 1; j1 <= n; ++j1) {
        Vec term = eval_I(c, spliced(i1, j1));
        if (i1 % 2 == 1)
          sub_in_place(colI, term);
        else
          add_in_place(colI, term);
      }
    set_column(out.fI, T, colI);

    for (std::size_t s = 0; s < d; ++s) {
      Vec es = unit_vec(f, d, s);
      Vec colII = rep.mu_at(b[n - 1], s).apply(eval_II(c, head, unit_vec(f, d, a[n - 1])));
      sub_in_place(colII, rep.mu_at(a[n - 1], s).apply(eval_II(c, head, unit_vec(f, d, b[n - 1]))));
      colII = scaled(top_sign, colII);
      for (std::size_t k = 1; k <= n; ++k) {
        Vec term = D[a[k - 1] * d + b[k - 1]].apply(eval_II(c, dropped(k), es));
        if (k % 2 == 1)
          add_in_place(colII, term);
        else
          sub_in_place(colII, term);
      }
      for (std::size_t i1 = 1; i1 <= n; ++i1)
        for (std::size_t j1 = i1 + 1; j1 <= n; ++j1) {
          Vec term = eval_II(c, spliced(i1, j1), es);
          if (i1 % 2 == 1)
            sub_in_place(colII, term);
          else
            add_in_place(colII, term);
        }
      for (std::size_t k = 1; k <= n; ++k) {
        Vec term = eval_II(c, dropped(k), A.ternary.basis(a[k - 1], b[k - 1], s));
        if (k % 2 == 1)
          sub_in_place(colII, term);
        else
          add_in_place(colII, term);
      }
      set_column(out.fII, T * d + s, colII);
    }
  }
  return out;
}

Mat coboundary_matrix(const Representation& rep, std::size_t degree) {
  const std::size_t d = rep.alg.dim, m = rep.repdim;
  const Field& f = rep.alg.field;
  const std::size_t nin = cochain_dim(d, m, degree);
  const std::size_t nout = cochain_dim(d, m, degree + 1);
  Mat out(f, nout, nin);
  Vec coords = zero_vec(f, nin);
  for (std::size_t c = 0; c < nin; ++c) {
    coords[c] = f.one();
    Vec img = cochain_coords(coboundary(rep, cochain_from_coords(f, d, m, degree, coords)));
    set_column(out, c, img);
    coords[c] = f.zero();
  }
  return out;
}

std::vector<std::pair<int, std::size_t>> cohomology_dims(const Representation& rep,
                                                         std::size_t max_n) {
  if (!rep.validated) throw math_error("cohomology_dims requires a validated representation");
  if (max_n == 0) throw math_error("cohomology_dims: max_n must be at least 1");
  const std::size_t d = rep.alg.dim, m = rep.repdim;
  std::vector<std::pair<int, std::size_t>> out;
  std::size_t prev_rank = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    Mat delta = coboundary_matrix(rep, n);
    std::size_t rk = rank(delta);
    std::size_t ker = cochain_dim(d, m, n) - rk;
    out.emplace_back(static_cast<int>(n), ker - prev_rank);
    prev_rank = rk;
  }
  return out;
}

Mat defmap_d(const DeformationMap& dm, const WedgeElement& X) {
  if (!dm.validated) throw math_error("defmap_d requires a validated deformation map");
  const LieYamagutiAlgebra& g = dm.mp.g;
  const LieYamagutiAlgebra& h = dm.mp.h;
  const Field& f = g.field;
  const std::size_t w = wedge_dim(g.dim);
  if (X.size() != w) throw math_error("defmap_d: the wedge element has the wrong dimension");
  const std::vector<Mat> D = derived_D(dm.mp.rep_on_h());
  Mat out(f, g.dim, h.dim);
  for (std::size_t t = 0; t < w; ++t) {
    if (X[t].is_zero()) continue;
    auto [i, j] = wedge_pair(t, g.dim);
    // d(e_i ^ e_j) alpha = r(D(e_i,e_j) alpha) - <<e_i, e_j, r(alpha)>>
    Mat piece = dm.r * D[i * g.dim + j] - g.ternary.op(i, j) * dm.r;
    for (std::size_t rr = 0; rr < out.rows(); ++rr)
      for (std::size_t cc = 0; cc < out.cols(); ++cc)
        out.at(rr, cc) += X[t] * piece.at(rr, cc);
  }
  return out;
}

Cochain defmap_delta(const DeformationMap& dm, const Cochain& c) {
  return coboundary(induced_representation(dm), c);
}

std::vector<std::pair<int, std::size_t>> defmap_cohomology_dims(const DeformationMap& dm,
                                                                std::size_t max_n) {
  if (!dm.validated)
    throw math_error("defmap_cohomology_dims requires a validated deformation map");
  const Field& f = dm.mp.g.field;
  const std::size_t wg = wedge_dim(dm.mp.g.dim);
  const std::size_t c1 = dm.mp.g.dim * dm.mp.h.dim;  // dim Hom(h, g)
  Representation rep_r = induced_representation(dm);

  // degree 0: wedge^2 g, mapped into Hom(h, g) by d
  Mat m0(f, c1, wg);
  for (std::size_t t = 0; t < wg; ++t) {
    Mat dX = defmap_d(dm, unit_vec(f, wg, t));
    std::size_t at = 0;
    for (std::size_t j = 0; j < dX.cols(); ++j)
      for (std::size_t r = 0; r < dX.rows(); ++r) m0.at(at++, t) = dX.at(r, j);
  }
  std::size_t prev_rank = rank(m0);
  std::vector<std::pair<int, std::size_t>> out;
  out.emplace_back(0, wg - prev_rank);
  for (std::size_t n = 1; n <= max_n; ++n) {
    Mat delta = coboundary_matrix(rep_r, n);
    std::size_t rk = rank(delta);
    std::size_t ker = cochain_dim(rep_r.alg.dim, rep_r.repdim, n) - rk;
    out.emplace_back(static_cast<int>(n), ker - prev_rank);
    prev_rank = rk;
  }
  return out;
}

}  // namespace liya
