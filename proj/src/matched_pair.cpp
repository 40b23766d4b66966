#include "liya/matched_pair.hpp"

#include <sstream>

namespace liya {

namespace {

constexpr std::size_t kMaxViolationsPerCondition = 8;

Vec unit(const Field& f, std::size_t dim, std::size_t i) {
  Vec v = zero_vec(f, dim);
  v[i] = f.one();
  return v;
}

std::vector<Mat> zero_family(const Field& f, std::size_t count, std::size_t dim) {
  return std::vector<Mat>(count, Mat(f, dim, dim));
}

std::string one_based(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  for (std::size_t k = 0; k < idx.size(); ++k) os << (k ? ", " : "") << idx[k] + 1;
  return os.str();
}

}  // namespace

Mat weight(const std::vector<Mat>& fam, const Vec& x) {
  Mat out = fam.empty() ? Mat(x.empty() ? Field::rationals() : x[0].field(), 0, 0)
                        : Mat(fam[0].field(), fam[0].rows(), fam[0].cols());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out = out + fam[i].scaled_by(x[i]);
  return out;
}

Mat weight2(const std::vector<Mat>& fam, std::size_t n, const Vec& x, const Vec& y) {
  Mat out = fam.empty() ? Mat(x.empty() ? Field::rationals() : x[0].field(), 0, 0)
                        : Mat(fam[0].field(), fam[0].rows(), fam[0].cols());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      Scalar c = x[i] * y[j];
      if (!c.is_zero()) out = out + fam[i * n + j].scaled_by(c);
    }
  return out;
}

Representation MatchedPair::rep_on_h() const { return Representation{g, h.dim, rho, mu, false}; }

Representation MatchedPair::rep_on_g() const { return Representation{h, g.dim, psi, nu, false}; }

namespace {

// One acting direction of a matched pair: A acts on B through rho/mu, while
// psi/nu give the reverse action that enters the compatibility terms.  DA and
// DB are the derived operators of the respective representations on basis
// pairs.  Conditions are numbered 1..9 here; the swapped call shifts by 9.
struct Side {
  const LieYamagutiAlgebra& A;
  const LieYamagutiAlgebra& B;
  const std::vector<Mat>& rho;
  const std::vector<Mat>& mu;
  const std::vector<Mat>& psi;
  const std::vector<Mat>& nu;
  const std::vector<Mat>& DA;
  const std::vector<Mat>& DB;
};

void check_side(const Side& s, bool swap, std::vector<MpViolation>& out) {
  const std::size_t n = s.A.dim, m = s.B.dim;
  const Field& f = s.A.field;
  std::vector<std::size_t> counts(9, 0);
  auto hit = [&](int cond, std::vector<std::size_t> a_idx, std::vector<std::size_t> b_idx,
                 Vec res) {
    if (is_zero_vec(res)) return;
    if (counts[static_cast<std::size_t>(cond) - 1]++ >= kMaxViolationsPerCondition) return;
    MpViolation v;
    v.condition = cond + (swap ? 9 : 0);
    v.g_idx = swap ? std::move(b_idx) : std::move(a_idx);
    v.h_idx = swap ? std::move(a_idx) : std::move(b_idx);
    v.residual = std::move(res);
    out.push_back(std::move(v));
  };
  auto eB = [&](std::size_t a) { return unit(f, m, a); };
  // mu with one vector slot
  auto mu_vb = [&](const Vec& w, std::size_t j) {
    Mat acc(f, m, m);
    for (std::size_t k = 0; k < n; ++k)
      if (!w[k].is_zero()) acc = acc + s.mu[k * n + j].scaled_by(w[k]);
    return acc;
  };
  auto mu_bv = [&](std::size_t i, const Vec& w) {
    Mat acc(f, m, m);
    for (std::size_t k = 0; k < n; ++k)
      if (!w[k].is_zero()) acc = acc + s.mu[i * n + k].scaled_by(w[k]);
    return acc;
  };
  auto DA_bv = [&](std::size_t j, const Vec& w) {
    Mat acc(f, m, m);
    for (std::size_t k = 0; k < n; ++k)
      if (!w[k].is_zero()) acc = acc + s.DA[j * n + k].scaled_by(w[k]);
    return acc;
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        {
          // rho_x [a,b]' = [rho_x a, b]' + [a, rho_x b]' + rho_{psi_b x} a - rho_{psi_a x} b
          Vec res = s.rho[i].apply(s.B.binary.basis(a, b));
          sub_in_place(res, s.B.bracket(s.rho[i].column(a), eB(b)));
          sub_in_place(res, s.B.bracket(eB(a), s.rho[i].column(b)));
          sub_in_place(res, weight(s.rho, s.psi[b].column(i)).column(a));
          add_in_place(res, weight(s.rho, s.psi[a].column(i)).column(b));
          hit(1, {i}, {a, b}, std::move(res));
        }
        for (std::size_t c = 0; c < m; ++c) {
          {
            // rho_x <<a,b,c>>' = <<a,b,rho_x c>>' - rho_{D_{psi,nu}(a,b) x} c
            Vec res = s.rho[i].apply(s.B.ternary.basis(a, b, c));
            sub_in_place(res, s.B.tri(eB(a), eB(b), s.rho[i].column(c)));
            add_in_place(res, weight(s.rho, s.DB[a * m + b].column(i)).column(c));
            hit(2, {i}, {a, b, c}, std::move(res));
          }
          {
            // <<rho_x a, b, c>>' + <<a, rho_x b, c>>' = 0
            Vec res = s.B.tri(s.rho[i].column(a), eB(b), eB(c));
            add_in_place(res, s.B.tri(eB(a), s.rho[i].column(b), eB(c)));
            hit(3, {i}, {a, b, c}, std::move(res));
          }
          {
            // rho_{nu(a,b) x} c = rho_{nu(a,c) x} b
            Vec res = weight(s.rho, s.nu[a * m + b].column(i)).column(c);
            sub_in_place(res, weight(s.rho, s.nu[a * m + c].column(i)).column(b));
            hit(4, {i}, {a, b, c}, std::move(res));
          }
        }
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          {
            // mu(x,y) [a,b]' = mu(psi_b x, y) a - mu(psi_a x, y) b
            Vec res = s.mu[i * n + j].apply(s.B.binary.basis(a, b));
            sub_in_place(res, mu_vb(s.psi[b].column(i), j).column(a));
            add_in_place(res, mu_vb(s.psi[a].column(i), j).column(b));
            hit(5, {i, j}, {a, b}, std::move(res));
          }
          {
            // mu(x, psi_a y) b = [a, mu(x,y) b]'
            Vec res = mu_bv(i, s.psi[a].column(j)).column(b);
            sub_in_place(res, s.B.bracket(eB(a), s.mu[i * n + j].column(b)));
            hit(7, {i, j}, {a, b}, std::move(res));
          }
          for (std::size_t c = 0; c < m; ++c) {
            {
              // mu(x,y) <<a,b,c>>' = <<a,b,mu(x,y) c>>' - mu(D(a,b)x, y) c - mu(x, D(a,b)y) c
              Vec res = s.mu[i * n + j].apply(s.B.ternary.basis(a, b, c));
              sub_in_place(res, s.B.tri(eB(a), eB(b), s.mu[i * n + j].column(c)));
              add_in_place(res, mu_vb(s.DB[a * m + b].column(i), j).column(c));
              add_in_place(res, mu_bv(i, s.DB[a * m + b].column(j)).column(c));
              hit(6, {i, j}, {a, b, c}, std::move(res));
            }
            {
              // mu(nu(a,b)x, y) c - mu(nu(a,c)x, y) b = mu(x, D(b,c)y) a - <<b,c,mu(x,y)a>>'
              Vec res = mu_vb(s.nu[a * m + b].column(i), j).column(c);
              sub_in_place(res, mu_vb(s.nu[a * m + c].column(i), j).column(b));
              sub_in_place(res, mu_bv(i, s.DB[b * m + c].column(j)).column(a));
              add_in_place(res, s.B.tri(eB(b), eB(c), s.mu[i * n + j].column(a)));
              hit(8, {i, j}, {a, b, c}, std::move(res));
            }
            {
              // mu(x, nu(a,b)y) c = <<mu(x,y)c, a, b>>' - D(y, nu(c,a)x) b + mu(y, nu(c,b)x) a
              Vec res = mu_bv(i, s.nu[a * m + b].column(j)).column(c);
              sub_in_place(res, s.B.tri(s.mu[i * n + j].column(c), eB(a), eB(b)));
              add_in_place(res, DA_bv(j, s.nu[c * m + a].column(i)).column(b));
              sub_in_place(res, mu_bv(j, s.nu[c * m + b].column(i)).column(a));
              hit(9, {i, j}, {a, b, c}, std::move(res));
            }
          }
        }
}

void check_shapes(const MatchedPair& mp) {
  const std::size_t n = mp.g.dim, m = mp.h.dim;
  auto square = [](const std::vector<Mat>& fam, std::size_t count, std::size_t dim) {
    if (fam.size() != count) return false;
    for (const Mat& a : fam)
      if (a.rows() != dim || a.cols() != dim) return false;
    return true;
  };
  if (mp.g.field.characteristic() != mp.h.field.characteristic())
    throw math_error("matched pair: the two algebras live over different fields");
  if (!square(mp.rho, n, m) || !square(mp.mu, n * n, m) || !square(mp.psi, m, n) ||
      !square(mp.nu, m * m, n))
    throw math_error("matched pair: action tensor shape mismatch");
}

}  // namespace

MpReport check_matched_pair(const MatchedPair& mp) {
  check_shapes(mp);
  MpReport rep;
  rep.rep_h = check_representation(mp.rep_on_h());
  rep.rep_g = check_representation(mp.rep_on_g());
  std::vector<Mat> DA = derived_D(mp.rep_on_h());
  std::vector<Mat> DB = derived_D(mp.rep_on_g());
  check_side({mp.g, mp.h, mp.rho, mp.mu, mp.psi, mp.nu, DA, DB}, false, rep.violations);
  check_side({mp.h, mp.g, mp.psi, mp.nu, mp.rho, mp.mu, DB, DA}, true, rep.violations);
  rep.passed = rep.rep_h.passed && rep.rep_g.passed && rep.violations.empty();
  return rep;
}

MatchedPair validate_matched_pair(MatchedPair mp) {
  MpReport rep = check_matched_pair(mp);
  if (!rep.rep_h.passed)
    throw math_error("matched pair: (h; rho, mu) is not a representation of g: condition (" +
                     std::to_string(rep.rep_h.violations[0].condition) + ") fails");
  if (!rep.rep_g.passed)
    throw math_error("matched pair: (g; psi, nu) is not a representation of h: condition (" +
                     std::to_string(rep.rep_g.violations[0].condition) + ") fails");
  if (!rep.violations.empty()) {
    const MpViolation& v = rep.violations[0];
    throw math_error("matched pair condition (mp" + std::to_string(v.condition) +
                     ") fails at g indices (" + one_based(v.g_idx) + "), h indices (" +
                     one_based(v.h_idx) + ")");
  }
  mp.validated = true;
  return mp;
}

namespace {

// the three derivation-style consequences for one acting direction
void consequence_side(const Side& s, bool swap, std::vector<MpViolation>& out) {
  const std::size_t n = s.A.dim, m = s.B.dim;
  const Field& f = s.A.field;
  std::vector<std::size_t> counts(3, 0);
  auto hit = [&](int cond, std::vector<std::size_t> a_idx, std::vector<std::size_t> b_idx,
                 Vec res) {
    if (is_zero_vec(res)) return;
    if (counts[static_cast<std::size_t>(cond) - 1]++ >= kMaxViolationsPerCondition) return;
    MpViolation v;
    v.condition = cond + (swap ? 3 : 0);
    v.g_idx = swap ? std::move(b_idx) : std::move(a_idx);
    v.h_idx = swap ? std::move(a_idx) : std::move(b_idx);
    v.residual = std::move(res);
    out.push_back(std::move(v));
  };
  auto eB = [&](std::size_t a) { return unit(f, m, a); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Mat& D = s.DA[i * n + j];
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          Vec res = D.apply(s.B.binary.basis(a, b));
          sub_in_place(res, s.B.bracket(D.column(a), eB(b)));
          sub_in_place(res, s.B.bracket(eB(a), D.column(b)));
          hit(1, {i, j}, {a, b}, std::move(res));
          for (std::size_t c = 0; c < m; ++c) {
            Vec r2 = D.apply(s.B.ternary.basis(a, b, c));
            sub_in_place(r2, s.B.tri(D.column(a), eB(b), eB(c)));
            sub_in_place(r2, s.B.tri(eB(a), D.column(b), eB(c)));
            sub_in_place(r2, s.B.tri(eB(a), eB(b), D.column(c)));
            hit(2, {i, j}, {a, b, c}, std::move(r2));
          }
        }
      // D(psi_a x, y) + D(x, psi_a y) = 0, witnessed column by column
      for (std::size_t a = 0; a < m; ++a) {
        Mat acc(f, m, m);
        const Vec wi = s.psi[a].column(i), wj = s.psi[a].column(j);
        for (std::size_t k = 0; k < n; ++k) {
          if (!wi[k].is_zero()) acc = acc + s.DA[k * n + j].scaled_by(wi[k]);
          if (!wj[k].is_zero()) acc = acc + s.DA[i * n + k].scaled_by(wj[k]);
        }
        if (!acc.is_zero())
          for (std::size_t col = 0; col < m; ++col)
            if (!is_zero_vec(acc.column(col))) {
              hit(3, {i, j}, {a, col}, acc.column(col));
              break;
            }
      }
    }
}

}  // namespace

MpReport check_consequences(const MatchedPair& mp) {
  check_shapes(mp);
  MpReport rep;
  rep.rep_h.passed = rep.rep_g.passed = true;
  std::vector<Mat> DA = derived_D(mp.rep_on_h());
  std::vector<Mat> DB = derived_D(mp.rep_on_g());
  consequence_side({mp.g, mp.h, mp.rho, mp.mu, mp.psi, mp.nu, DA, DB}, false, rep.violations);
  consequence_side({mp.h, mp.g, mp.psi, mp.nu, mp.rho, mp.mu, DB, DA}, true, rep.violations);
  rep.passed = rep.violations.empty();
  return rep;
}

LieYamagutiAlgebra bicrossed(const MatchedPair& mp) {
  if (!mp.validated) throw math_error("bicrossed product requires a validated matched pair");
  const std::size_t n = mp.g.dim, m = mp.h.dim, d = n + m;
  const Field& f = mp.g.field;
  std::vector<Mat> DA = derived_D(mp.rep_on_h());
  std::vector<Mat> DB = derived_D(mp.rep_on_g());

  auto gpart = [&](std::size_t p) {
    Vec v = zero_vec(f, n);
    if (p < n) v[p] = f.one();
    return v;
  };
  auto hpart = [&](std::size_t p) {
    Vec v = zero_vec(f, m);
    if (p >= n) v[p - n] = f.one();
    return v;
  };
  // coefficient-weighted action: sum_i c_i fam[i](arg), safe when c is empty
  auto lin = [&](const std::vector<Mat>& fam, const Vec& c, const Vec& arg, Vec& acc,
                 bool minus) {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) axpy(acc, minus ? -c[i] : c[i], fam[i].apply(arg));
  };
  auto bil = [&](const std::vector<Mat>& fam, std::size_t stride, const Vec& c1, const Vec& c2,
                 const Vec& arg, Vec& acc, bool minus) {
    for (std::size_t i = 0; i < c1.size(); ++i)
      for (std::size_t j = 0; j < c2.size(); ++j) {
        Scalar c = c1[i] * c2[j];
        if (!c.is_zero()) axpy(acc, minus ? -c : c, fam[i * stride + j].apply(arg));
      }
  };

  LieYamagutiAlgebra e(f, d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      const Vec xg = gpart(p), xh = hpart(p), yg = gpart(q), yh = hpart(q);
      Vec bg = mp.g.bracket(xg, yg);
      lin(mp.psi, xh, yg, bg, false);
      lin(mp.psi, yh, xg, bg, true);
      Vec bh = mp.h.bracket(xh, yh);
      lin(mp.rho, xg, yh, bh, false);
      lin(mp.rho, yg, xh, bh, true);
      for (std::size_t k = 0; k < n; ++k) e.binary.at(p, q, k) = bg[k];
      for (std::size_t c = 0; c < m; ++c) e.binary.at(p, q, n + c) = bh[c];
      for (std::size_t r = 0; r < d; ++r) {
        const Vec zg = gpart(r), zh = hpart(r);
        Vec tg = mp.g.tri(xg, yg, zg);
        bil(DB, m, xh, yh, zg, tg, false);
        bil(mp.nu, m, yh, zh, xg, tg, false);
        bil(mp.nu, m, xh, zh, yg, tg, true);
        Vec th = mp.h.tri(xh, yh, zh);
        bil(DA, n, xg, yg, zh, th, false);
        bil(mp.mu, n, yg, zg, xh, th, false);
        bil(mp.mu, n, xg, zg, yh, th, true);
        for (std::size_t k = 0; k < n; ++k) e.ternary.at(p, q, r, k) = tg[k];
        for (std::size_t c = 0; c < m; ++c) e.ternary.at(p, q, r, n + c) = th[c];
      }
    }
  return validate_ly(std::move(e));
}

MatchedPair zero_matched_pair(const LieYamagutiAlgebra& g, const LieYamagutiAlgebra& h) {
  g.require_validated("zero_matched_pair");
  h.require_validated("zero_matched_pair");
  MatchedPair mp{g,
                 h,
                 zero_family(g.field, g.dim, h.dim),
                 zero_family(g.field, g.dim * g.dim, h.dim),
                 zero_family(g.field, h.dim, g.dim),
                 zero_family(g.field, h.dim * h.dim, g.dim),
                 false};
  return validate_matched_pair(std::move(mp));
}

MatchedPair semidirect_pair(const Representation& rep) {
  if (!rep.validated) throw math_error("semidirect_pair requires a validated representation");
  const std::size_t m = rep.repdim;
  LieYamagutiAlgebra trivial(rep.alg.field, m);
  trivial.validated = true;
  MatchedPair mp{rep.alg,
                 trivial,
                 rep.rho,
                 rep.mu,
                 zero_family(rep.alg.field, m, rep.alg.dim),
                 zero_family(rep.alg.field, m * m, rep.alg.dim),
                 false};
  return validate_matched_pair(std::move(mp));
}

MatchedPair swapped(const MatchedPair& mp) {
  MatchedPair out{mp.h, mp.g, mp.psi, mp.nu, mp.rho, mp.mu, false};
  if (mp.validated) out = validate_matched_pair(std::move(out));
  return out;
}

MatchedPair make_action_pair(const LieYamagutiAlgebra& g, const LieYamagutiAlgebra& h,
                             std::vector<Mat> rho, std::vector<Mat> mu) {
  g.require_validated("make_action_pair");
  h.require_validated("make_action_pair");
  Representation rep{g, h.dim, rho, mu, false};
  validate_representation(rep);
  const std::size_t n = g.dim, m = h.dim;
  const Field& f = g.field;
  auto eh = [&](std::size_t a) { return unit(f, m, a); };
  auto fail = [&](const char* what, std::initializer_list<std::size_t> idx) {
    std::vector<std::size_t> v(idx);
    throw math_error(std::string("action condition fails: ") + what + " at (" + one_based(v) +
                     ")");
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        Vec r1 = rho[i].apply(h.binary.basis(a, b));
        sub_in_place(r1, h.bracket(rho[i].column(a), eh(b)));
        sub_in_place(r1, h.bracket(eh(a), rho[i].column(b)));
        if (!is_zero_vec(r1)) fail("rho_x [a,b]' = [rho_x a, b]' + [a, rho_x b]'", {i, a, b});
        for (std::size_t c = 0; c < m; ++c) {
          Vec r2 = rho[i].apply(h.ternary.basis(a, b, c));
          sub_in_place(r2, h.tri(eh(a), eh(b), rho[i].column(c)));
          if (!is_zero_vec(r2)) fail("rho_x <<a,b,c>>' = <<a,b,rho_x c>>'", {i, a, b, c});
          Vec r3 = h.tri(rho[i].column(a), eh(b), eh(c));
          add_in_place(r3, h.tri(eh(a), rho[i].column(b), eh(c)));
          if (!is_zero_vec(r3)) fail("<<rho_x a, b, c>>' + <<a, rho_x b, c>>' = 0", {i, a, b, c});
        }
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Mat& mij = mu[i * n + j];
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
          if (!is_zero_vec(mij.apply(h.binary.basis(a, b))))
            fail("mu(x,y) [a,b]' = 0", {i, j, a, b});
          if (!is_zero_vec(h.bracket(mij.column(a), eh(b))))
            fail("[mu(x,y) a, b]' = 0", {i, j, a, b});
          for (std::size_t c = 0; c < m; ++c) {
            if (!is_zero_vec(mij.apply(h.ternary.basis(a, b, c))))
              fail("mu(x,y) <<a,b,c>>' = 0", {i, j, a, b, c});
            if (!is_zero_vec(h.tri(mij.column(a), eh(b), eh(c))))
              fail("<<mu(x,y) a, b, c>>' = 0", {i, j, a, b, c});
            if (!is_zero_vec(h.tri(eh(a), eh(b), mij.column(c))))
              fail("<<a, b, mu(x,y) c>>' = 0", {i, j, a, b, c});
          }
        }
    }
  MatchedPair mp{g,
                 h,
                 std::move(rho),
                 std::move(mu),
                 zero_family(f, m, n),
                 zero_family(f, m * m, n),
                 false};
  return validate_matched_pair(std::move(mp));
}

namespace {

bool complementary(const LieYamagutiAlgebra& E, const std::vector<Vec>& g_span,
                   const std::vector<Vec>& h_span) {
  if (g_span.size() + h_span.size() != E.dim) return false;
  std::vector<Vec> all = g_span;
  all.insert(all.end(), h_span.begin(), h_span.end());
  for (const Vec& v : all)
    if (v.size() != E.dim) throw math_error("span vector has the wrong dimension");
  if (all.empty()) return E.dim == 0;
  return rank(Mat::from_columns(E.field, E.dim, all)) == E.dim;
}

}  // namespace

bool check_factorization(const LieYamagutiAlgebra& E, const std::vector<Vec>& g_span,
                         const std::vector<Vec>& h_span, bool strong) {
  if (!complementary(E, g_span, h_span)) return false;
  if (!is_subalgebra(E, g_span) || !is_subalgebra(E, h_span)) return false;
  if (!strong) return true;
  Mat gm = Mat::from_columns(E.field, E.dim, g_span);
  Mat hm = Mat::from_columns(E.field, E.dim, h_span);
  for (const Vec& x : g_span)
    for (const Vec& a : h_span) {
      for (const Vec& b : h_span)
        if (!in_column_span(gm, E.tri(x, a, b))) return false;
      for (const Vec& y : g_span)
        if (!in_column_span(hm, E.tri(a, x, y))) return false;
    }
  return true;
}

CanonicalPair canonical_matched_pair(const Inclusion& inc) {
  const LieYamagutiAlgebra& E = inc.E;
  E.require_validated("canonical_matched_pair");
  const std::size_t n = inc.g_span.size(), m = inc.h_span.size(), d = E.dim;
  const Field& f = E.field;
  if (!complementary(E, inc.g_span, inc.h_span))
    throw math_error("the two spans do not decompose the ambient algebra");
  if (!is_subalgebra(E, inc.g_span))
    throw math_error("g span is not a subalgebra of the ambient algebra");
  if (!is_subalgebra(E, inc.h_span))
    throw math_error("h span is not a subalgebra of the ambient algebra");

  std::vector<Vec> cols = inc.g_span;
  cols.insert(cols.end(), inc.h_span.begin(), inc.h_span.end());
  Mat change = Mat::from_columns(f, d, cols);
  Mat back = *inverse(change);  // full rank by the complement check

  // structure constants in the adapted basis (g first, then h)
  LieYamagutiAlgebra adapted(f, d);
  for (std::size_t p = 0; p < d; ++p)
    for (std::size_t q = 0; q < d; ++q) {
      Vec b = back.apply(E.bracket(change.column(p), change.column(q)));
      for (std::size_t k = 0; k < d; ++k) adapted.binary.at(p, q, k) = b[k];
      for (std::size_t r = 0; r < d; ++r) {
        Vec t = back.apply(E.tri(change.column(p), change.column(q), change.column(r)));
        for (std::size_t k = 0; k < d; ++k) adapted.ternary.at(p, q, r, k) = t[k];
      }
    }
  adapted = validate_ly(std::move(adapted));

  auto head = [&](const Vec& v) { return Vec(v.begin(), v.begin() + static_cast<long>(n)); };
  auto tail = [&](const Vec& v) { return Vec(v.begin() + static_cast<long>(n), v.end()); };

  LieYamagutiAlgebra sub_g(f, n), sub_h(f, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        sub_g.binary.at(i, j, k) = adapted.binary.at(i, j, k);
        for (std::size_t l = 0; l < n; ++l)
          sub_g.ternary.at(i, j, k, l) = adapted.ternary.at(i, j, k, l);
      }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        sub_h.binary.at(a, b, c) = adapted.binary.at(n + a, n + b, n + c);
        for (std::size_t e2 = 0; e2 < m; ++e2)
          sub_h.ternary.at(a, b, c, e2) = adapted.ternary.at(n + a, n + b, n + c, n + e2);
      }

  MatchedPair mp{validate_ly(std::move(sub_g)),
                 validate_ly(std::move(sub_h)),
                 zero_family(f, n, m),
                 zero_family(f, n * n, m),
                 zero_family(f, m, n),
                 zero_family(f, m * m, n),
                 false};
  // [ (x,0), (0,a) ] = (-psi_a x, rho_x a)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      Vec v = adapted.binary.basis(i, n + a);
      Vec gp = head(v), hp = tail(v);
      for (std::size_t k = 0; k < n; ++k) mp.psi[a].at(k, i) = -gp[k];
      for (std::size_t b = 0; b < m; ++b) mp.rho[i].at(b, a) = hp[b];
    }
  // << (0,a), (x,0), (y,0) >> = (0, mu(x,y) a)
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vec v = adapted.ternary.basis(n + a, i, j);
        if (!is_zero_vec(head(v)))
          throw math_error("ternary bracket of (h " + std::to_string(a + 1) + ", g " +
                           std::to_string(i + 1) + ", g " + std::to_string(j + 1) +
                           ") leaves the complement: strong factorization fails");
        Vec hp = tail(v);
        for (std::size_t b = 0; b < m; ++b) mp.mu_at(i, j).at(b, a) = hp[b];
      }
  // << (x,0), (0,a), (0,b) >> = (nu(a,b) x, 0)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        Vec v = adapted.ternary.basis(i, n + a, n + b);
        if (!is_zero_vec(tail(v)))
          throw math_error("ternary bracket of (g " + std::to_string(i + 1) + ", h " +
                           std::to_string(a + 1) + ", h " + std::to_string(b + 1) +
                           ") leaves the subalgebra: strong factorization fails");
        Vec gp = head(v);
        for (std::size_t k = 0; k < n; ++k) mp.nu_at(a, b).at(k, i) = gp[k];
      }

  MatchedPair out = validate_matched_pair(std::move(mp));
  LieYamagutiAlgebra rebuilt = bicrossed(out);
  if (!(rebuilt.binary == adapted.binary) || !(rebuilt.ternary == adapted.ternary))
    throw math_error("extracted matched pair does not reproduce the ambient algebra");
  return CanonicalPair{std::move(out), std::move(change)};
}

bool check_mp_equivalence(const MatchedPair& a, const MatchedPair& b, const Mat& u,
                          const Mat& v) {
  if (!(a.g.binary == b.g.binary) || !(a.g.ternary == b.g.ternary) ||
      !(a.h.binary == b.h.binary) || !(a.h.ternary == b.h.ternary))
    throw math_error("matched pair equivalence needs the same two underlying algebras");
  const std::size_t n = a.g.dim, m = a.h.dim;
  if (!inverse(u) || !check_homomorphism(a.g, a.g, u))
    throw math_error("u is not an automorphism of g");
  if (!inverse(v) || !check_homomorphism(a.h, a.h, v))
    throw math_error("v is not an automorphism of h");
  for (std::size_t i = 0; i < n; ++i) {
    if (!(v * a.rho[i] == weight(b.rho, u.column(i)) * v)) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (!(v * a.mu_at(i, j) == weight2(b.mu, n, u.column(i), u.column(j)) * v)) return false;
  }
  for (std::size_t p = 0; p < m; ++p) {
    if (!(u * a.psi[p] == weight(b.psi, v.column(p)) * u)) return false;
    for (std::size_t q = 0; q < m; ++q)
      if (!(u * a.nu_at(p, q) == weight2(b.nu, m, v.column(p), v.column(q)) * u)) return false;
  }
  return true;
}

}  // namespace liya
