#include "liya/graded.hpp"

#include <string>
#include <utility>

namespace liya {
namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Vec unit(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

const Field& cfield(const Cochain& c) { return c.degree == 1 ? c.f.field() : c.fI.field(); }

std::size_t value_dim(const Cochain& c) { return c.degree == 1 ? c.f.rows() : c.fI.rows(); }

// inputs and values on the same space, blocks sized accordingly
std::size_t square_dim(const Cochain& c, const char* who) {
  const std::size_t d = value_dim(c);
  if (c.degree == 1) {
    if (c.f.cols() != d)
      throw math_error(std::string(who) + ": expected a square degree-1 cochain");
    return d;
  }
  const std::size_t cols = ipow(wedge_dim(d), c.degree - 1);
  if (c.fI.cols() != cols || c.fII.cols() != cols * d || c.fII.rows() != d)
    throw math_error(std::string(who) + ": cochain blocks do not form a square cochain");
  return d;
}

std::size_t tuple_index(const std::vector<std::size_t>& ts, std::size_t w) {
  std::size_t idx = 0;
  for (std::size_t t : ts) idx = idx * w + t;
  return idx;
}

void decode_tuple(std::size_t idx, std::size_t w, std::vector<std::size_t>& ts) {
  for (std::size_t k = ts.size(); k-- > 0;) {
    ts[k] = idx % w;
    idx /= w;
  }
}

// A (p,q)-shuffle: pos lists the first block ascending, then the second block
// ascending; sign is the parity of that arrangement.
struct Shuffle {
  std::vector<std::size_t> pos;
  int sign = 1;
};

std::vector<Shuffle> shuffles(std::size_t p, std::size_t q) {
  const std::size_t n = p + q;
  std::vector<Shuffle> out;
  std::vector<std::size_t> comb(p);
  for (std::size_t i = 0; i < p; ++i) comb[i] = i;
  while (true) {
    Shuffle s;
    s.pos.reserve(n);
    std::vector<bool> first(n, false);
    for (std::size_t c : comb) {
      s.pos.push_back(c);
      first[c] = true;
    }
    std::size_t inversions = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (!first[j]) {
        s.pos.push_back(j);
        for (std::size_t c : comb)
          if (c > j) ++inversions;
      }
    s.sign = inversions % 2 ? -1 : 1;
    out.push_back(std::move(s));
    std::size_t i = p;
    while (i > 0 && comb[i - 1] == n - p + i - 1) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < p; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

// P_II on basis wedges with a general last argument
Vec pII_gen(const Cochain& P, const std::vector<std::size_t>& ts, std::size_t w,
            std::size_t d, const Vec& v) {
  const Field& f = cfield(P);
  Vec acc = zero_vec(f, value_dim(P));
  const std::size_t base = tuple_index(ts, w) * d;
  for (std::size_t s = 0; s < d; ++s)
    if (!v[s].is_zero()) axpy(acc, v[s], P.fII.column(base + s));
  return acc;
}

// P_I with wedge slot k replaced by a general wedge
Vec pI_mod(const Cochain& P, std::vector<std::size_t>& ts, std::size_t k, const Vec& W,
           std::size_t w) {
  const Field& f = cfield(P);
  Vec acc = zero_vec(f, value_dim(P));
  const std::size_t saved = ts[k];
  for (std::size_t t = 0; t < w; ++t)
    if (!W[t].is_zero()) {
      ts[k] = t;
      axpy(acc, W[t], P.fI.column(tuple_index(ts, w)));
    }
  ts[k] = saved;
  return acc;
}

// P_II with wedge slot k replaced by a general wedge, basis last argument
Vec pII_mod(const Cochain& P, std::vector<std::size_t>& ts, std::size_t k, const Vec& W,
            std::size_t w, std::size_t d, std::size_t s) {
  const Field& f = cfield(P);
  Vec acc = zero_vec(f, value_dim(P));
  const std::size_t saved = ts[k];
  for (std::size_t t = 0; t < w; ++t)
    if (!W[t].is_zero()) {
      ts[k] = t;
      axpy(acc, W[t], P.fII.column(tuple_index(ts, w) * d + s));
    }
  ts[k] = saved;
  return acc;
}

void set_col(Mat& m, std::size_t c, const Vec& v) {
  for (std::size_t r = 0; r < v.size(); ++r) m.at(r, c) = v[r];
}

}  // namespace

Cochain add_cochains(const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree) throw math_error("add_cochains: degrees differ");
  if (a.degree == 1) return Cochain{1, a.f + b.f, a.fI, a.fII};
  return Cochain{a.degree, a.f, a.fI + b.fI, a.fII + b.fII};
}

Cochain scale_cochain(const Scalar& c, const Cochain& a) {
  if (a.degree == 1) return Cochain{1, a.f.scaled_by(c), a.fI, a.fII};
  return Cochain{a.degree, a.f, a.fI.scaled_by(c), a.fII.scaled_by(c)};
}

bool cochain_is_zero(const Cochain& a) {
  return a.degree == 1 ? a.f.is_zero() : a.fI.is_zero() && a.fII.is_zero();
}

GradedCochain pi_of(const LieYamagutiAlgebra& a) {
  const std::size_t d = a.dim, w = wedge_dim(d);
  GradedCochain out = zero_cochain(a.field, d, d, 2);
  for (std::size_t t = 0; t < w; ++t) {
    const auto [i, j] = wedge_pair(t, d);
    set_col(out.fI, t, a.binary.basis(i, j));
    for (std::size_t s = 0; s < d; ++s) set_col(out.fII, t * d + s, a.ternary.basis(i, j, s));
  }
  return out;
}

GradedCochain diamond(const GradedCochain& P, const GradedCochain& Q) {
  const std::size_t d = square_dim(P, "diamond");
  if (square_dim(Q, "diamond") != d)
    throw math_error("diamond: the cochains live on different spaces");
  const Field& f = cfield(P);
  if (f.characteristic() != cfield(Q).characteristic())
    throw math_error("diamond: the cochains are over different fields");
  const std::size_t p = P.degree - 1, q = Q.degree - 1;

  if (p == 0 && q == 0) {
    GradedCochain out = zero_cochain(f, d, d, 1);
    out.f = P.f * Q.f;
    return out;
  }
  if (p == 0) {  // post-composition
    GradedCochain out = zero_cochain(f, d, d, Q.degree);
    out.fI = P.f * Q.fI;
    out.fII = P.f * Q.fII;
    return out;
  }

  const std::size_t w = wedge_dim(d);
  std::vector<std::size_t> ts(p + q);

  if (q == 0) {  // insert Q.f into each input of P
    GradedCochain out = zero_cochain(f, d, d, P.degree);
    std::vector<std::size_t> pts(p);
    const std::size_t total = ipow(w, p);
    for (std::size_t T = 0; T < total; ++T) {
      decode_tuple(T, w, pts);
      Vec accI = zero_vec(f, d);
      std::vector<Vec> accII(d, zero_vec(f, d));
      for (std::size_t k = 0; k < p; ++k) {
        const auto [a, b] = wedge_pair(pts[k], d);
        Vec W = wedge_of(Q.f.column(a), unit(f, d, b));
        add_in_place(W, wedge_of(unit(f, d, a), Q.f.column(b)));
        add_in_place(accI, pI_mod(P, pts, k, W, w));
        for (std::size_t s = 0; s < d; ++s)
          add_in_place(accII[s], pII_mod(P, pts, k, W, w, d, s));
      }
      for (std::size_t s = 0; s < d; ++s)
        add_in_place(accII[s], pII_gen(P, pts, w, d, Q.f.column(s)));
      set_col(out.fI, T, accI);
      for (std::size_t s = 0; s < d; ++s) set_col(out.fII, T * d + s, accII[s]);
    }
    return out;
  }

  // general case: both of higher arity
  GradedCochain out = zero_cochain(f, d, d, p + q + 1);
  const std::vector<Shuffle> top = shuffles(p, q);
  std::vector<std::vector<Shuffle>> inner(p);
  for (std::size_t k = 1; k <= p; ++k) inner[k - 1] = shuffles(k - 1, q);
  const int spq = (p * q) % 2 ? -1 : 1;
  const std::size_t total = ipow(w, p + q);
  std::vector<std::size_t> pslots(p), qts(q);
  for (std::size_t T = 0; T < total; ++T) {
    decode_tuple(T, w, ts);
    Vec accI = zero_vec(f, d);
    std::vector<Vec> accII(d, zero_vec(f, d));

    for (const Shuffle& sh : top) {
      for (std::size_t i = 0; i < p; ++i) pslots[i] = ts[sh.pos[i]];
      for (std::size_t j = 0; j < q; ++j) qts[j] = ts[sh.pos[p + j]];
      const Scalar c = f.integer(spq * sh.sign);
      if (sh.pos[p + q - 1] == p + q - 1)
        axpy(accI, c, pII_gen(P, pslots, w, d, Q.fI.column(tuple_index(qts, w))));
      const std::size_t qbase = tuple_index(qts, w) * d;
      for (std::size_t s = 0; s < d; ++s)
        axpy(accII[s], c, pII_gen(P, pslots, w, d, Q.fII.column(qbase + s)));
    }

    for (std::size_t k = 1; k <= p; ++k) {
      const int skq = ((k - 1) * q) % 2 ? -1 : 1;
      const auto [a, b] = wedge_pair(ts[k + q - 1], d);
      for (std::size_t i = k; i < p; ++i) pslots[i] = ts[q + i];  // fixed tail
      for (const Shuffle& sh : inner[k - 1]) {
        for (std::size_t i = 0; i + 1 < k; ++i) pslots[i] = ts[sh.pos[i]];
        for (std::size_t j = 0; j < q; ++j) qts[j] = ts[sh.pos[k - 1 + j]];
        const std::size_t qbase = tuple_index(qts, w) * d;
        Vec Wa = wedge_of(Q.fII.column(qbase + a), unit(f, d, b));
        add_in_place(Wa, wedge_of(unit(f, d, a), Q.fII.column(qbase + b)));
        const Scalar c = f.integer(skq * sh.sign);
        axpy(accI, c, pI_mod(P, pslots, k - 1, Wa, w));
        for (std::size_t s = 0; s < d; ++s)
          axpy(accII[s], c, pII_mod(P, pslots, k - 1, Wa, w, d, s));
      }
    }

    set_col(out.fI, T, accI);
    for (std::size_t s = 0; s < d; ++s) set_col(out.fII, T * d + s, accII[s]);
  }
  return out;
}

GradedCochain graded_bracket(const GradedCochain& P, const GradedCochain& Q) {
  const std::size_t p = P.degree - 1, q = Q.degree - 1;
  const int spq = (p * q) % 2 ? -1 : 1;
  const Field& f = cfield(P);
  return add_cochains(diamond(P, Q), scale_cochain(f.integer(-spq), diamond(Q, P)));
}

bool mc_check_pi(const LieYamagutiAlgebra& candidate) {
  GradedCochain pi = pi_of(candidate);
  return cochain_is_zero(diamond(pi, pi));
}

GradedCochain delta_pi(const LieYamagutiAlgebra& a, const GradedCochain& P) {
  a.require_validated("delta_pi");
  if (square_dim(P, "delta_pi") != a.dim)
    throw math_error("delta_pi: the cochain does not live on the algebra");
  GradedCochain b = graded_bracket(pi_of(a), P);
  if (P.degree % 2 == 0) return scale_cochain(-a.field.one(), b);  // (-1)^{n-1}
  return b;
}

namespace {

void check_complement_shapes(const VData& vd, const Cochain& a, const char* who) {
  const std::size_t m = vd.mp.g.dim, n = vd.mp.h.dim;
  if (value_dim(a) != m) throw math_error(std::string(who) + ": values must land in g");
  if (a.degree == 1) {
    if (a.f.cols() != n) throw math_error(std::string(who) + ": inputs must come from h");
    return;
  }
  const std::size_t cols = ipow(wedge_dim(n), a.degree - 1);
  if (a.fI.cols() != cols || a.fII.cols() != cols * n)
    throw math_error(std::string(who) + ": inputs must come from h");
}

}  // namespace

GradedCochain vdata_embed(const VData& vd, const Cochain& a) {
  check_complement_shapes(vd, a, "vdata_embed");
  const std::size_t m = vd.mp.g.dim, n = vd.mp.h.dim, D = m + n;
  const Field& f = vd.mp.g.field;
  if (a.degree == 1) {
    GradedCochain out = zero_cochain(f, D, D, 1);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) out.f.at(r, m + c) = a.f.at(r, c);
    return out;
  }
  const std::size_t p = a.degree - 1;
  const std::size_t W = wedge_dim(D), wh = wedge_dim(n);
  GradedCochain out = zero_cochain(f, D, D, a.degree);
  std::vector<std::size_t> to_h(W, W);  // W marks "touches g"
  for (std::size_t t = 0; t < W; ++t) {
    const auto [i, j] = wedge_pair(t, D);
    if (i >= m && j >= m) to_h[t] = wedge_index(i - m, j - m, n);
  }
  std::vector<std::size_t> ts(p), hts(p);
  const std::size_t total = ipow(W, p);
  for (std::size_t T = 0; T < total; ++T) {
    decode_tuple(T, W, ts);
    bool live = true;
    for (std::size_t k = 0; k < p && live; ++k) {
      hts[k] = to_h[ts[k]];
      live = hts[k] != W;
    }
    if (!live) continue;
    const std::size_t hcol = tuple_index(hts, wh);
    Vec vI = a.fI.column(hcol);
    for (std::size_t r = 0; r < m; ++r) out.fI.at(r, T) = vI[r];
    for (std::size_t s = m; s < D; ++s) {
      Vec vII = a.fII.column(hcol * n + (s - m));
      for (std::size_t r = 0; r < m; ++r) out.fII.at(r, T * D + s) = vII[r];
    }
  }
  return out;
}

Cochain vdata_project(const VData& vd, const GradedCochain& e) {
  const std::size_t m = vd.mp.g.dim, n = vd.mp.h.dim, D = m + n;
  if (square_dim(e, "vdata_project") != D)
    throw math_error("vdata_project: the cochain does not live on the big space");
  const Field& f = vd.mp.g.field;
  if (e.degree == 1) {
    Cochain out = zero_cochain(f, n, m, 1);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) out.f.at(r, c) = e.f.at(r, m + c);
    return out;
  }
  const std::size_t p = e.degree - 1;
  const std::size_t W = wedge_dim(D), wh = wedge_dim(n);
  Cochain out = zero_cochain(f, n, m, e.degree);
  std::vector<std::size_t> hts(p), bts(p);
  const std::size_t total = ipow(wh, p);
  for (std::size_t T = 0; T < total; ++T) {
    decode_tuple(T, wh, hts);
    for (std::size_t k = 0; k < p; ++k) {
      const auto [a, b] = wedge_pair(hts[k], n);
      bts[k] = wedge_index(m + a, m + b, D);
    }
    const std::size_t bigcol = tuple_index(bts, W);
    Vec vI = e.fI.column(bigcol);
    for (std::size_t r = 0; r < m; ++r) out.fI.at(r, T) = vI[r];
    for (std::size_t s = 0; s < n; ++s) {
      Vec vII = e.fII.column(bigcol * D + m + s);
      for (std::size_t r = 0; r < m; ++r) out.fII.at(r, T * n + s) = vII[r];
    }
  }
  return out;
}

VData build_vdata(const MatchedPair& mp) {
  if (!mp.validated) throw math_error("build_vdata requires a validated matched pair");
  LieYamagutiAlgebra big = bicrossed(mp);
  GradedCochain Pi = pi_of(big);
  VData vd{mp, std::move(big), std::move(Pi)};
  if (!cochain_is_zero(diamond(vd.Pi, vd.Pi)))
    throw math_error("vdata: the bicrossed element fails Maurer-Cartan");
  if (!cochain_is_zero(vdata_project(vd, vd.Pi)))
    throw math_error("vdata: the bicrossed element does not project to zero");
  // abelian on a generating sample: a couple of unit cochains in each arity
  const Field& f = mp.g.field;
  const std::size_t m = mp.g.dim, n = mp.h.dim, wh = wedge_dim(n);
  std::vector<Cochain> gens;
  {
    Cochain c = zero_cochain(f, n, m, 1);
    c.f.at(0, 0) = f.one();
    gens.push_back(c);
    Cochain c2 = zero_cochain(f, n, m, 1);
    c2.f.at(m - 1, n - 1) = f.one();
    gens.push_back(c2);
  }
  if (wh > 0) {
    Cochain c = zero_cochain(f, n, m, 2);
    c.fI.at(0, 0) = f.one();
    gens.push_back(c);
    Cochain c2 = zero_cochain(f, n, m, 2);
    c2.fII.at(m - 1, wh * n - 1) = f.one();
    gens.push_back(c2);
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j)
      if (!cochain_is_zero(
              graded_bracket(vdata_embed(vd, gens[i]), vdata_embed(vd, gens[j]))))
        throw math_error("vdata: the complement cochains fail to commute");
  return vd;
}

LInftyStructure derived_brackets(const VData& vd) {
  return LInftyStructure{vd, false, Mat(vd.mp.g.field, vd.mp.g.dim, vd.mp.h.dim)};
}

namespace {

Cochain base_l(const VData& vd, const std::vector<Cochain>& args) {
  GradedCochain acc = vd.Pi;
  for (const Cochain& a : args) acc = graded_bracket(acc, vdata_embed(vd, a));
  return vdata_project(vd, acc);
}

void refuse_small_characteristic(const Field& f, const char* who) {
  const unsigned long c = f.characteristic();
  if (c == 2 || c == 3)
    throw input_error(std::string(who) + " needs 2 and 3 invertible: characteristic " +
                      std::to_string(c) + " is refused");
}

bool same_pair(const MatchedPair& x, const MatchedPair& y) {
  return x.g.field.characteristic() == y.g.field.characteristic() &&
         x.g.binary == y.g.binary && x.g.ternary == y.g.ternary &&
         x.h.binary == y.h.binary && x.h.ternary == y.h.ternary && x.rho == y.rho &&
         x.mu == y.mu && x.psi == y.psi && x.nu == y.nu;
}

}  // namespace

Cochain linfty_l(const LInftyStructure& ls, const std::vector<Cochain>& args) {
  if (args.empty()) throw math_error("linfty_l needs at least one argument");
  for (const Cochain& a : args) check_complement_shapes(ls.vd, a, "linfty_l");
  Cochain total = base_l(ls.vd, args);
  if (!ls.twisted) return total;
  const Field& f = ls.vd.mp.g.field;
  Cochain rhat = zero_cochain(f, ls.vd.mp.h.dim, ls.vd.mp.g.dim, 1);
  rhat.f = ls.r;
  std::vector<Cochain> ext = args;
  Scalar fact = f.one();
  for (std::size_t j = 1; args.size() + j <= 3; ++j) {
    ext.insert(ext.begin(), rhat);
    fact = fact * f.integer(static_cast<long>(j));
    total = add_cochains(total, scale_cochain(f.one() / fact, base_l(ls.vd, ext)));
  }
  return total;
}

Cochain mc_equation(const LInftyStructure& ls, const Mat& r) {
  const Field& f = ls.vd.mp.g.field;
  refuse_small_characteristic(f, "mc_equation");
  if (r.rows() != ls.vd.mp.g.dim || r.cols() != ls.vd.mp.h.dim)
    throw math_error("mc_equation: the map must be g.dim x h.dim");
  Cochain rhat = zero_cochain(f, ls.vd.mp.h.dim, ls.vd.mp.g.dim, 1);
  rhat.f = r;
  Cochain res = linfty_l(ls, {rhat});
  res = add_cochains(res, scale_cochain(f.one() / f.integer(2), linfty_l(ls, {rhat, rhat})));
  res = add_cochains(
      res, scale_cochain(f.one() / f.integer(6), linfty_l(ls, {rhat, rhat, rhat})));
  return res;
}

LInftyStructure twist(const LInftyStructure& ls, const DeformationMap& dm) {
  refuse_small_characteristic(ls.vd.mp.g.field, "twist");
  if (ls.twisted) throw math_error("twist: the structure is already twisted");
  if (!dm.validated) throw math_error("twist requires a validated deformation map");
  if (!same_pair(ls.vd.mp, dm.mp))
    throw math_error("twist: the deformation map lives in a different matched pair");
  return LInftyStructure{ls.vd, true, dm.r};
}

std::vector<std::pair<int, std::size_t>> twisted_complex_dims(const LInftyStructure& ls,
                                                              std::size_t max_n) {
  if (max_n == 0) throw math_error("twisted_complex_dims needs max_n >= 1");
  const Field& f = ls.vd.mp.g.field;
  const std::size_t m = ls.vd.mp.g.dim, n = ls.vd.mp.h.dim;
  auto diff = [&](std::size_t k) {
    const std::size_t din = cochain_dim(n, m, k), dout = cochain_dim(n, m, k + 1);
    Mat M(f, dout, din);
    for (std::size_t j = 0; j < din; ++j) {
      Vec coords = zero_vec(f, din);
      coords[j] = f.one();
      Cochain c = cochain_from_coords(f, n, m, k, coords);
      Vec img = cochain_coords(linfty_l(ls, {c}));
      for (std::size_t r = 0; r < dout; ++r) M.at(r, j) = img[r];
    }
    return M;
  };
  std::vector<std::pair<int, std::size_t>> out;
  Mat prev = diff(1);
  std::size_t prev_rank = 0;
  for (std::size_t k = 1; k <= max_n; ++k) {
    const Mat cur = k == 1 ? prev : diff(k);
    if (k > 1) {
      if (!(cur * prev).is_zero())
        throw math_error("twisted complex: the differential does not square to zero");
      prev = cur;
    }
    const std::size_t rk = rank(cur);
    out.emplace_back(static_cast<int>(k), cochain_dim(n, m, k) - rk - prev_rank);
    prev_rank = rk;
  }
  return out;
}

}  // namespace liya
