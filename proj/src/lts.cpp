#include "liya/lts.hpp"

namespace liya {

namespace {

constexpr std::size_t kMaxViolations = 8;

std::string tuple_str(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i] + 1);
  }
  return s + ")";
}

LieYamagutiAlgebra embed_raw(const LieTripleSystem& s) {
  return LieYamagutiAlgebra(s.field, s.dim, BinaryBracket(s.field, s.dim), s.ternary);
}

// mu(v, e_k) and mu(e_i, v) for a family indexed over basis pairs of dim n
Mat mu_first(const std::vector<Mat>& mu, std::size_t n, std::size_t m, const Field& f,
             const Vec& v, std::size_t k) {
  Mat s(f, m, m);
  for (std::size_t i = 0; i < n; ++i)
    if (!v[i].is_zero()) s = s + mu[i * n + k].scaled_by(v[i]);
  return s;
}

Mat mu_second(const std::vector<Mat>& mu, std::size_t n, std::size_t m, const Field& f,
              std::size_t i, const Vec& v) {
  Mat s(f, m, m);
  for (std::size_t j = 0; j < n; ++j)
    if (!v[j].is_zero()) s = s + mu[i * n + j].scaled_by(v[j]);
  return s;
}

// The three compatibility conditions seen from one side; the other side is
// the same scan on the role-swapped pair.  base_cond is 1 or 4.
void scan_side(const LtsMatchedPair& mp, int base_cond, MpReport& rep) {
  const std::size_t n = mp.g.dim, m = mp.h.dim;
  const Field& f = mp.g.field;
  std::vector<Mat> Dnu;  // D_nu(alpha,beta), End(g)
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) Dnu.push_back(mp.nu_at(b, a) - mp.nu_at(a, b));

  auto record = [&](int cond, std::vector<std::size_t> gi, std::vector<std::size_t> hi,
                    Vec res, std::size_t& count) {
    rep.passed = false;
    if (count < kMaxViolations) {
      if (base_cond == 1)
        rep.violations.push_back({cond, std::move(gi), std::move(hi), std::move(res)});
      else  // swapped run: the scan's g indices are the original pair's h indices
        rep.violations.push_back({cond, std::move(hi), std::move(gi), std::move(res)});
    }
    ++count;
  };

  // mu(x,y)<<a,b,c>>' = <<a,b,mu(x,y)c>>' - mu(Dnu(a,b)x,y)c - mu(x,Dnu(a,b)y)c
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolations; ++i)
    for (std::size_t j = 0; j < n && hits < kMaxViolations; ++j)
      for (std::size_t a = 0; a < m && hits < kMaxViolations; ++a)
        for (std::size_t b = 0; b < m && hits < kMaxViolations; ++b)
          for (std::size_t c = 0; c < m && hits < kMaxViolations; ++c) {
            Vec res = mp.mu_at(i, j).apply(mp.h.ternary.basis(a, b, c));
            sub_in_place(res, mp.h.ternary.op(a, b).apply(mp.mu_at(i, j).column(c)));
            const Mat& D = Dnu[a * m + b];
            add_in_place(res, mu_first(mp.mu, n, m, f, D.column(i), j).column(c));
            add_in_place(res, mu_second(mp.mu, n, m, f, i, D.column(j)).column(c));
            if (!is_zero_vec(res)) record(base_cond, {i, j}, {a, b, c}, std::move(res), hits);
          }

  // mu(nu(a,b)x,y)c - mu(nu(a,c)x,y)b = mu(x,Dnu(b,c)y)a - <<b,c,mu(x,y)a>>'
  hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolations; ++i)
    for (std::size_t j = 0; j < n && hits < kMaxViolations; ++j)
      for (std::size_t a = 0; a < m && hits < kMaxViolations; ++a)
        for (std::size_t b = 0; b < m && hits < kMaxViolations; ++b)
          for (std::size_t c = 0; c < m && hits < kMaxViolations; ++c) {
            Vec res = mu_first(mp.mu, n, m, f, mp.nu_at(a, b).column(i), j).column(c);
            sub_in_place(res, mu_first(mp.mu, n, m, f, mp.nu_at(a, c).column(i), j).column(b));
            sub_in_place(res, mu_second(mp.mu, n, m, f, i, Dnu[b * m + c].column(j)).column(a));
            add_in_place(res, mp.h.ternary.op(b, c).apply(mp.mu_at(i, j).column(a)));
            if (!is_zero_vec(res))
              record(base_cond + 1, {i, j}, {a, b, c}, std::move(res), hits);
          }

  // mu(x,nu(a,b)y)c = <<mu(x,y)c,a,b>>' - Dmu(y,nu(c,a)x)b + mu(y,nu(c,b)x)a
  hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolations; ++i)
    for (std::size_t j = 0; j < n && hits < kMaxViolations; ++j)
      for (std::size_t a = 0; a < m && hits < kMaxViolations; ++a)
        for (std::size_t b = 0; b < m && hits < kMaxViolations; ++b)
          for (std::size_t c = 0; c < m && hits < kMaxViolations; ++c) {
            Vec res = mu_second(mp.mu, n, m, f, i, mp.nu_at(a, b).column(j)).column(c);
            Vec ua = zero_vec(f, m), ub = zero_vec(f, m);
            ua[a] = f.one();
            ub[b] = f.one();
            sub_in_place(res, mp.h.tri(mp.mu_at(i, j).column(c), ua, ub));
            Vec w = mp.nu_at(c, a).column(i);
            Mat Dm = mu_first(mp.mu, n, m, f, w, j) - mu_second(mp.mu, n, m, f, j, w);
            add_in_place(res, Dm.column(b));
            sub_in_place(res, mu_second(mp.mu, n, m, f, j, mp.nu_at(c, b).column(i)).column(a));
            if (!is_zero_vec(res))
              record(base_cond + 2, {i, j}, {a, b, c}, std::move(res), hits);
          }
}

}  // namespace

LieYamagutiAlgebra as_ly(const LieTripleSystem& s) {
  if (!s.validated) throw math_error("as_ly requires a validated triple system");
  return validate_ly(embed_raw(s));
}

AxiomReport check_lts(const LieTripleSystem& s) { return check_ly_axioms(embed_raw(s)); }

LieTripleSystem validate_lts(LieTripleSystem s) {
  validate_ly(embed_raw(s));
  s.validated = true;
  return s;
}

std::vector<Mat> lts_derived_D(const LtsRepresentation& r) {
  const std::size_t n = r.sys.dim;
  std::vector<Mat> d;
  d.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d.push_back(r.mu_at(j, i) - r.mu_at(i, j));
  return d;
}

RepReport check_lts_representation(const LtsRepresentation& r) {
  const std::size_t n = r.sys.dim, m = r.repdim;
  const Field& f = r.sys.field;
  if (r.mu.size() != n * n) throw math_error("representation tensor shape mismatch");
  for (const Mat& mat : r.mu)
    if (mat.rows() != m || mat.cols() != m) throw math_error("mu shape mismatch");

  const TernaryBracket& t = r.sys.ternary;
  std::vector<Mat> D = lts_derived_D(r);

  RepReport rep;
  auto record = [&](int cond, std::vector<std::size_t> tuple, Mat residual,
                    std::size_t& count) {
    rep.passed = false;
    if (count < kMaxViolations)
      rep.violations.push_back({cond, std::move(tuple), std::move(residual)});
    ++count;
  };

  // (1) mu(z,w) mu(x,y) - mu(y,w) mu(x,z) - mu(x,<<y,z,w>>) + D(y,z) mu(x,w) = 0
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolations; ++i)
    for (std::size_t j = 0; j < n && hits < kMaxViolations; ++j)
      for (std::size_t k = 0; k < n && hits < kMaxViolations; ++k)
        for (std::size_t l = 0; l < n && hits < kMaxViolations; ++l) {
          Mat res = r.mu_at(k, l) * r.mu_at(i, j) - r.mu_at(j, l) * r.mu_at(i, k) -
                    mu_second(r.mu, n, m, f, i, t.basis(j, k, l)) +
                    D[j * n + k] * r.mu_at(i, l);
          if (!res.is_zero()) record(1, {i, j, k, l}, std::move(res), hits);
        }

  // (2) mu(<<x,y,z>>,w) + mu(z,<<x,y,w>>) = D(x,y) mu(z,w) - mu(z,w) D(x,y)
  hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolations; ++i)
    for (std::size_t j = 0; j < n && hits < kMaxViolations; ++j)
      for (std::size_t k = 0; k < n && hits < kMaxViolations; ++k)
        for (std::size_t l = 0; l < n && hits < kMaxViolations; ++l) {
          Mat res = mu_first(r.mu, n, m, f, t.basis(i, j, k), l) +
                    mu_second(r.mu, n, m, f, k, t.basis(i, j, l)) -
                    commutator(D[i * n + j], r.mu_at(k, l));
          if (!res.is_zero()) record(2, {i, j, k, l}, std::move(res), hits);
        }

  return rep;
}

LtsRepresentation validate_lts_representation(LtsRepresentation r) {
  RepReport rep = check_lts_representation(r);
  if (!rep.passed) {
    const RepViolation& v = rep.violations.front();
    throw math_error("representation condition (" + std::to_string(v.condition) +
                     ") fails at " + tuple_str(v.tuple));
  }
  r.validated = true;
  return r;
}

LtsRepresentation lts_regular(const LieTripleSystem& s) {
  LtsRepresentation r{s, s.dim, {}, false};
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j) {
      Mat m(s.field, s.dim, s.dim);
      for (std::size_t k = 0; k < s.dim; ++k) {
        Vec col = s.ternary.basis(k, i, j);  // <<e_k, e_i, e_j>>
        for (std::size_t row = 0; row < s.dim; ++row) m.at(row, k) = col[row];
      }
      r.mu.push_back(std::move(m));
    }
  return r;
}

MatchedPair as_ly_pair(const LtsMatchedPair& mp) {
  if (!mp.validated) throw math_error("as_ly_pair requires a validated matched pair");
  const std::size_t n = mp.g.dim, m = mp.h.dim;
  MatchedPair out{as_ly(mp.g),
                  as_ly(mp.h),
                  std::vector<Mat>(n, Mat(mp.g.field, m, m)),
                  mp.mu,
                  std::vector<Mat>(m, Mat(mp.g.field, n, n)),
                  mp.nu,
                  false};
  return validate_matched_pair(std::move(out));
}

MpReport check_lts_matched_pair(const LtsMatchedPair& mp) {
  const std::size_t n = mp.g.dim, m = mp.h.dim;
  if (mp.g.field.characteristic() != mp.h.field.characteristic())
    throw math_error("matched pair components live over different fields");
  if (mp.mu.size() != n * n || mp.nu.size() != m * m)
    throw math_error("matched pair tensor shape mismatch");

  MpReport rep;
  rep.passed = true;
  rep.rep_h = check_lts_representation({mp.g, m, mp.mu, false});
  rep.rep_g = check_lts_representation({mp.h, n, mp.nu, false});
  if (!rep.rep_h.passed || !rep.rep_g.passed) rep.passed = false;

  scan_side(mp, 1, rep);
  LtsMatchedPair sw{mp.h, mp.g, mp.nu, mp.mu, false};
  scan_side(sw, 4, rep);
  return rep;
}

LtsMatchedPair validate_lts_matched_pair(LtsMatchedPair mp) {
  MpReport rep = check_lts_matched_pair(mp);
  if (!rep.passed) {
    if (!rep.rep_h.passed)
      throw math_error("mu is not a representation: condition (" +
                       std::to_string(rep.rep_h.violations.front().condition) +
                       ") fails at " + tuple_str(rep.rep_h.violations.front().tuple));
    if (!rep.rep_g.passed)
      throw math_error("nu is not a representation: condition (" +
                       std::to_string(rep.rep_g.violations.front().condition) +
                       ") fails at " + tuple_str(rep.rep_g.violations.front().tuple));
    const MpViolation& v = rep.violations.front();
    throw math_error("matched pair condition (" + std::to_string(v.condition) +
                     ") fails at g indices " + tuple_str(v.g_idx) + ", h indices " +
                     tuple_str(v.h_idx));
  }
  mp.validated = true;
  return mp;
}

LtsMatchedPair lts_semidirect_pair(const LtsRepresentation& rep) {
  if (!rep.validated) throw math_error("lts_semidirect_pair needs a validated representation");
  const std::size_t n = rep.sys.dim, m = rep.repdim;
  const Field& f = rep.sys.field;
  LieTripleSystem flat(f, m);
  flat.validated = true;  // zero ternary
  LtsMatchedPair mp{rep.sys, std::move(flat), rep.mu,
                    std::vector<Mat>(m * m, Mat(f, n, n)), false};
  return validate_lts_matched_pair(std::move(mp));
}

LieTripleSystem lts_bicrossed(const LtsMatchedPair& mp) {
  LieYamagutiAlgebra big = bicrossed(as_ly_pair(mp));
  return validate_lts(LieTripleSystem(big.field, big.dim, big.ternary));
}

DmReport check_lts_deformation_map(const LtsMatchedPair& mp, const Mat& r) {
  return check_deformation_map(as_ly_pair(mp), r);
}

LieTripleSystem lts_induced_system(const LtsMatchedPair& mp, const Mat& r) {
  DeformationMap dm = validate_deformation_map(as_ly_pair(mp), r);
  LieYamagutiAlgebra twisted = induced_algebra(dm);
  return validate_lts(LieTripleSystem(twisted.field, twisted.dim, twisted.ternary));
}

LtsRepresentation lts_induced_representation(const LtsMatchedPair& mp, const Mat& r) {
  DeformationMap dm = validate_deformation_map(as_ly_pair(mp), r);
  Representation rep = induced_representation(dm);
  for (const Mat& p : rep.rho)
    if (!p.is_zero())
      throw math_error("induced representation: the embedding produced a binary action");
  LieTripleSystem sys = validate_lts(
      LieTripleSystem(rep.alg.field, rep.alg.dim, rep.alg.ternary));
  return validate_lts_representation({std::move(sys), rep.repdim, rep.mu, false});
}

ComplementCensus classify_lts_complements(const LieTripleSystem& E,
                                          const std::vector<Vec>& g_span,
                                          const std::vector<Vec>& h_span,
                                          unsigned long budget) {
  return classify_complements(Inclusion{as_ly(E), g_span, h_span}, budget);
}

}  // namespace liya
