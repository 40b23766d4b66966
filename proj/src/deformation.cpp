#include "liya/deformation.hpp"

#include <string>

namespace liya {
namespace {

constexpr int kMaxViolationsPerCondition = 8;

Vec unit(const Field& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v[i] = f.one();
  return v;
}

std::string one_based(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(idx[i] + 1);
  }
  return s + ")";
}

void require_validated(const MatchedPair& mp, const char* who) {
  if (!mp.validated)
    throw math_error(std::string(who) + " requires a validated matched pair");
}

void check_map_shape(const MatchedPair& mp, const Mat& r, const char* who) {
  if (r.rows() != mp.g.dim || r.cols() != mp.h.dim)
    throw math_error(std::string(who) + ": the map must be " +
                     std::to_string(mp.g.dim) + " x " + std::to_string(mp.h.dim) +
                     ", got " + std::to_string(r.rows()) + " x " +
                     std::to_string(r.cols()));
  if (r.field().characteristic() != mp.g.field.characteristic())
    throw math_error(std::string(who) + ": the map is over a different field");
}

// left minus right of the binary identity at (eps_a, eps_b)
Vec binary_residual(const MatchedPair& mp, const Mat& r, std::size_t a, std::size_t b) {
  const std::size_t n = mp.g.dim;
  Vec ra = r.column(a), rb = r.column(b);
  Vec lhs = mp.g.bracket(ra, rb);
  add_in_place(lhs, mp.psi[a].apply(rb));
  sub_in_place(lhs, mp.psi[b].apply(ra));
  Vec inner = mp.h.binary.basis(a, b);
  if (n) {
    add_in_place(inner, weight(mp.rho, ra).column(b));
    sub_in_place(inner, weight(mp.rho, rb).column(a));
  }
  return sub(lhs, r.apply(inner));
}

// left minus right of the ternary identity at (eps_a, eps_b, eps_c); DA and
// DB are the derived operators of (h; rho, mu) and (g; psi, nu)
Vec ternary_residual(const MatchedPair& mp, const std::vector<Mat>& DA,
                     const std::vector<Mat>& DB, const Mat& r, std::size_t a,
                     std::size_t b, std::size_t c) {
  const std::size_t n = mp.g.dim, m = mp.h.dim;
  Vec ra = r.column(a), rb = r.column(b), rc = r.column(c);
  Vec lhs = mp.g.tri(ra, rb, rc);
  add_in_place(lhs, DB[a * m + b].apply(rc));
  add_in_place(lhs, mp.nu_at(b, c).apply(ra));
  sub_in_place(lhs, mp.nu_at(a, c).apply(rb));
  Vec inner = mp.h.ternary.basis(a, b, c);
  if (n) {
    add_in_place(inner, weight2(DA, n, ra, rb).column(c));
    add_in_place(inner, weight2(mp.mu, n, rb, rc).column(a));
    sub_in_place(inner, weight2(mp.mu, n, ra, rc).column(b));
  }
  return sub(lhs, r.apply(inner));
}

bool passes(const MatchedPair& mp, const std::vector<Mat>& DA,
            const std::vector<Mat>& DB, const Mat& r) {
  const std::size_t m = mp.h.dim;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (!is_zero_vec(binary_residual(mp, r, a, b))) return false;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (!is_zero_vec(ternary_residual(mp, DA, DB, r, a, b, c))) return false;
  return true;
}

bool same_pair(const MatchedPair& x, const MatchedPair& y) {
  return x.g.field.characteristic() == y.g.field.characteristic() &&
         x.g.binary == y.g.binary && x.g.ternary == y.g.ternary &&
         x.h.binary == y.h.binary && x.h.ternary == y.h.ternary && x.rho == y.rho &&
         x.mu == y.mu && x.psi == y.psi && x.nu == y.nu;
}

// the two identities of the equivalence relation, nothing else
bool equiv_identities(const MatchedPair& mp, const std::vector<Mat>& DA,
                      const Mat& r, const Mat& rp, const Mat& sigma) {
  const std::size_t n = mp.g.dim, m = mp.h.dim;
  const Field& f = mp.g.field;
  std::vector<Vec> rc, sc, rpsc;
  for (std::size_t a = 0; a < m; ++a) {
    rc.push_back(r.column(a));
    sc.push_back(sigma.column(a));
    rpsc.push_back(rp.apply(sc[a]));
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec lhs = sigma.apply(mp.h.binary.basis(a, b));
      sub_in_place(lhs, mp.h.binary.eval(sc[a], sc[b]));
      Vec rhs = zero_vec(f, m);
      if (n) {
        rhs = weight(mp.rho, rpsc[a]).apply(sc[b]);
        sub_in_place(rhs, weight(mp.rho, rpsc[b]).apply(sc[a]));
        Vec inner = weight(mp.rho, rc[a]).column(b);
        sub_in_place(inner, weight(mp.rho, rc[b]).column(a));
        sub_in_place(rhs, sigma.apply(inner));
      }
      if (!is_zero_vec(sub(lhs, rhs))) return false;
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Vec lhs = sigma.apply(mp.h.ternary.basis(a, b, c));
        sub_in_place(lhs, mp.h.ternary.eval(sc[a], sc[b], sc[c]));
        Vec rhs = zero_vec(f, m);
        if (n) {
          rhs = weight2(DA, n, rpsc[a], rpsc[b]).apply(sc[c]);
          add_in_place(rhs, weight2(mp.mu, n, rpsc[b], rpsc[c]).apply(sc[a]));
          sub_in_place(rhs, weight2(mp.mu, n, rpsc[a], rpsc[c]).apply(sc[b]));
          Vec inner = weight2(DA, n, rc[a], rc[b]).column(c);
          add_in_place(inner, weight2(mp.mu, n, rc[b], rc[c]).column(a));
          sub_in_place(inner, weight2(mp.mu, n, rc[a], rc[c]).column(b));
          sub_in_place(rhs, sigma.apply(inner));
        }
        if (!is_zero_vec(sub(lhs, rhs))) return false;
      }
  return true;
}

// counts how many candidates a base-p scan over `cells` digits produces,
// or throws once it would pass the budget
unsigned long scan_size(unsigned long p, std::size_t cells, unsigned long budget,
                        const char* who) {
  unsigned long total = 1;
  for (std::size_t c = 0; c < cells; ++c) {
    if (total > budget / p)
      throw input_error(std::string(who) + ": scan of " + std::to_string(cells) +
                        " entries over GF(" + std::to_string(p) +
                        ") exceeds the budget of " + std::to_string(budget));
    total *= p;
  }
  return total;
}

// candidate number k, digits written row-major with the first entry most
// significant
Mat scan_matrix(const Field& f, std::size_t rows, std::size_t cols, unsigned long k) {
  const unsigned long p = f.characteristic();
  Mat r(f, rows, cols);
  for (std::size_t pos = rows * cols; pos-- > 0;) {
    r.at(pos / cols, pos % cols) = f.integer(static_cast<long>(k % p));
    k /= p;
  }
  return r;
}

}  // namespace

DmReport check_deformation_map(const MatchedPair& mp, const Mat& r) {
  require_validated(mp, "check_deformation_map");
  check_map_shape(mp, r, "check_deformation_map");
  const std::size_t m = mp.h.dim;
  std::vector<Mat> DA = derived_D(mp.rep_on_h());
  std::vector<Mat> DB = derived_D(mp.rep_on_g());
  DmReport out;
  out.passed = true;
  int counts[2] = {0, 0};
  auto hit = [&](int cond, std::vector<std::size_t> idx, Vec res) {
    out.passed = false;
    if (counts[cond - 1]++ < kMaxViolationsPerCondition)
      out.violations.push_back(DmViolation{cond, std::move(idx), std::move(res)});
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec res = binary_residual(mp, r, a, b);
      if (!is_zero_vec(res)) hit(1, {a, b}, std::move(res));
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Vec res = ternary_residual(mp, DA, DB, r, a, b, c);
        if (!is_zero_vec(res)) hit(2, {a, b, c}, std::move(res));
      }
  return out;
}

DeformationMap validate_deformation_map(MatchedPair mp, Mat r) {
  DmReport rep = check_deformation_map(mp, r);
  if (!rep.passed) {
    const DmViolation& v = rep.violations.front();
    throw math_error(std::string("deformation map: the ") +
                     (v.condition == 1 ? "binary" : "ternary") +
                     " identity fails at h indices " + one_based(v.idx));
  }
  return DeformationMap{std::move(mp), std::move(r), true};
}

std::vector<Vec> graph_span(const MatchedPair& mp, const Mat& r) {
  check_map_shape(mp, r, "graph_span");
  const std::size_t n = mp.g.dim, m = mp.h.dim;
  std::vector<Vec> out;
  for (std::size_t j = 0; j < m; ++j) {
    Vec v = zero_vec(mp.g.field, n + m);
    Vec rj = r.column(j);
    for (std::size_t i = 0; i < n; ++i) v[i] = rj[i];
    v[n + j] = mp.g.field.one();
    out.push_back(std::move(v));
  }
  return out;
}

LieYamagutiAlgebra induced_algebra(const DeformationMap& dm) {
  if (!dm.validated)
    throw math_error("induced_algebra requires a validated deformation map");
  const MatchedPair& mp = dm.mp;
  const std::size_t n = mp.g.dim, m = mp.h.dim;
  const Field& f = mp.g.field;
  std::vector<Mat> DA = derived_D(mp.rep_on_h());
  std::vector<Vec> rc;
  for (std::size_t a = 0; a < m; ++a) rc.push_back(dm.r.column(a));
  BinaryBracket bin(f, m);
  TernaryBracket tern(f, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vec v = mp.h.binary.basis(a, b);
      if (n) {
        add_in_place(v, weight(mp.rho, rc[a]).column(b));
        sub_in_place(v, weight(mp.rho, rc[b]).column(a));
      }
      for (std::size_t k = 0; k < m; ++k) bin.at(a, b, k) = v[k];
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) {
        Vec v = mp.h.ternary.basis(a, b, c);
        if (n) {
          add_in_place(v, weight2(DA, n, rc[a], rc[b]).column(c));
          add_in_place(v, weight2(mp.mu, n, rc[b], rc[c]).column(a));
          sub_in_place(v, weight2(mp.mu, n, rc[a], rc[c]).column(b));
        }
        for (std::size_t k = 0; k < m; ++k) tern.at(a, b, c, k) = v[k];
      }
  return validate_ly(LieYamagutiAlgebra(f, m, std::move(bin), std::move(tern)));
}

Representation induced_representation(const DeformationMap& dm) {
  if (!dm.validated)
    throw math_error("induced_representation requires a validated deformation map");
  const MatchedPair& mp = dm.mp;
  const std::size_t n = mp.g.dim, m = mp.h.dim;
  const Field& f = mp.g.field;
  std::vector<Mat> DA = derived_D(mp.rep_on_h());
  std::vector<Mat> DB = derived_D(mp.rep_on_g());
  std::vector<Vec> rc;
  for (std::size_t a = 0; a < m; ++a) rc.push_back(dm.r.column(a));
  LieYamagutiAlgebra hr = induced_algebra(dm);
  std::vector<Mat> psir, nur;
  for (std::size_t a = 0; a < m; ++a) {
    Mat P = mp.psi[a];
    for (std::size_t k = 0; k < n; ++k) {
      Vec extra = mp.g.binary.eval_vec_basis(rc[a], k);
      add_in_place(extra, dm.r.apply(mp.rho[k].column(a)));
      for (std::size_t i = 0; i < n; ++i) P.at(i, k) += extra[i];
    }
    psir.push_back(std::move(P));
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Mat N = mp.nu_at(a, b);
      for (std::size_t k = 0; k < n; ++k) {
        Vec ek = unit(f, n, k);
        Vec extra = mp.g.ternary.eval(ek, rc[a], rc[b]);
        Vec inner = weight2(DA, n, ek, rc[a]).column(b);
        sub_in_place(inner, weight2(mp.mu, n, ek, rc[b]).column(a));
        sub_in_place(extra, dm.r.apply(inner));
        for (std::size_t i = 0; i < n; ++i) N.at(i, k) += extra[i];
      }
      nur.push_back(std::move(N));
    }
  Representation out =
      validate_representation(Representation{std::move(hr), n, std::move(psir),
                                             std::move(nur), false});
  std::vector<Mat> got = derived_D(out);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Mat want = DB[a * m + b];
      for (std::size_t k = 0; k < n; ++k) {
        Vec ek = unit(f, n, k);
        Vec extra = mp.g.ternary.eval(rc[a], rc[b], ek);
        Vec inner = weight2(mp.mu, n, rc[a], ek).column(b);
        sub_in_place(inner, weight2(mp.mu, n, rc[b], ek).column(a));
        add_in_place(extra, dm.r.apply(inner));
        for (std::size_t i = 0; i < n; ++i) want.at(i, k) += extra[i];
      }
      if (got[a * m + b] != want)
        throw math_error(
            "induced representation: derived operator disagrees with its closed "
            "formula at h indices " + one_based({a, b}));
    }
  return out;
}

bool check_dm_equivalence(const DeformationMap& a, const DeformationMap& b,
                          const Mat& sigma) {
  if (!a.validated || !b.validated)
    throw math_error("check_dm_equivalence requires validated deformation maps");
  if (!same_pair(a.mp, b.mp))
    throw math_error("check_dm_equivalence: the maps live in different matched pairs");
  const std::size_t m = a.mp.h.dim;
  if (sigma.rows() != m || sigma.cols() != m ||
      sigma.field().characteristic() != a.mp.g.field.characteristic())
    throw math_error("check_dm_equivalence: sigma must be " + std::to_string(m) +
                     " x " + std::to_string(m) + " over the pair's field");
  if (!inverse(sigma))
    throw math_error("check_dm_equivalence: sigma is not invertible");
  std::vector<Mat> DA = derived_D(a.mp.rep_on_h());
  bool direct = equiv_identities(a.mp, DA, a.r, b.r, sigma);
  bool via_graph = check_homomorphism(induced_algebra(a), induced_algebra(b), sigma);
  if (direct != via_graph)
    throw math_error(
        "check_dm_equivalence: identity evaluation disagrees with the graph "
        "reformulation");
  return direct;
}

std::vector<DeformationMap> enumerate_deformation_maps(const MatchedPair& mp,
                                                       unsigned long budget) {
  require_validated(mp, "enumerate_deformation_maps");
  const unsigned long p = mp.g.field.characteristic();
  if (p == 0)
    throw input_error("enumerate_deformation_maps needs a finite field");
  const std::size_t n = mp.g.dim, m = mp.h.dim;
  const unsigned long total =
      scan_size(p, n * m, budget, "enumerate_deformation_maps");
  std::vector<Mat> DA = derived_D(mp.rep_on_h());
  std::vector<Mat> DB = derived_D(mp.rep_on_g());
  std::vector<DeformationMap> out;
  for (unsigned long k = 0; k < total; ++k) {
    Mat r = scan_matrix(mp.g.field, n, m, k);
    if (passes(mp, DA, DB, r))
      out.push_back(DeformationMap{mp, std::move(r), true});
  }
  return out;
}

std::vector<Mat> all_invertible(const Field& f, std::size_t m, unsigned long budget) {
  const unsigned long p = f.characteristic();
  if (p == 0) throw input_error("all_invertible needs a finite field");
  const unsigned long total = scan_size(p, m * m, budget, "all_invertible");
  std::vector<Mat> out;
  for (unsigned long k = 0; k < total; ++k) {
    Mat s = scan_matrix(f, m, m, k);
    if (rank(s) == m) out.push_back(std::move(s));
  }
  return out;
}

ComplementCensus classify_complements(const Inclusion& inc, unsigned long budget) {
  if (!check_factorization(inc.E, inc.g_span, inc.h_span, true))
    throw math_error(
        "classify_complements: the h span is not a strong complement of the g "
        "span");
  CanonicalPair can = canonical_matched_pair(inc);
  const MatchedPair& mp = can.pair;
  const std::size_t n = mp.g.dim, m = mp.h.dim;
  const Field& f = mp.g.field;
  std::vector<DeformationMap> maps = enumerate_deformation_maps(mp, budget);
  LieYamagutiAlgebra big = bicrossed(mp);
  for (const DeformationMap& dm : maps) {
    std::vector<Vec> span = graph_span(mp, dm.r);
    if (!is_subalgebra(big, span))
      throw math_error("classify_complements: a graph is not a subalgebra");
    std::vector<Vec> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(unit(f, n + m, i));
    for (Vec& v : span) cols.push_back(std::move(v));
    if (rank(Mat::from_columns(f, n + m, cols)) != n + m)
      throw math_error("classify_complements: a graph is not a complement");
  }
  std::vector<Mat> sigmas = all_invertible(f, m, budget);
  std::vector<Mat> DA = derived_D(mp.rep_on_h());
  const std::size_t N = maps.size();
  std::vector<std::vector<char>> rel(N, std::vector<char>(N, 0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (const Mat& s : sigmas)
        if (equiv_identities(mp, DA, maps[i].r, maps[j].r, s)) {
          rel[i][j] = 1;
          break;
        }
  for (std::size_t i = 0; i < N; ++i)
    if (!rel[i][i])
      throw math_error("classify_complements: sigma search is not reflexive");
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (rel[i][j] != rel[j][i])
        throw math_error("classify_complements: sigma search is not symmetric");
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k)
        if (rel[i][j] && rel[j][k] && !rel[i][k])
          throw math_error("classify_complements: sigma search is not transitive");
  std::vector<std::vector<std::size_t>> classes;
  std::vector<char> used(N, 0);
  for (std::size_t i = 0; i < N; ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < N; ++j)
      if (rel[i][j]) {
        cls.push_back(j);
        used[j] = 1;
      }
    classes.push_back(std::move(cls));
  }
  ComplementCensus census{inc, std::move(can), std::move(maps),
                          std::move(classes), 0};
  census.factorization_index = census.classes.size();
  return census;
}

MatchedPair homomorphism_pair(const LieYamagutiAlgebra& from,
                              const LieYamagutiAlgebra& to) {
  return zero_matched_pair(to, from);
}

MatchedPair derivation_pair(const Representation& rep) {
  return swapped(semidirect_pair(rep));
}

MatchedPair rota_baxter_weight0_pair(const Representation& rep) {
  return semidirect_pair(rep);
}

MatchedPair crossed_homomorphism_pair(const LieYamagutiAlgebra& g,
                                      const LieYamagutiAlgebra& h,
                                      std::vector<Mat> rho, std::vector<Mat> mu) {
  return swapped(make_action_pair(g, h, std::move(rho), std::move(mu)));
}

MatchedPair rota_baxter_weight1_pair(const LieYamagutiAlgebra& g,
                                     const LieYamagutiAlgebra& h,
                                     std::vector<Mat> rho, std::vector<Mat> mu) {
  return make_action_pair(g, h, std::move(rho), std::move(mu));
}

MatchedPair lie_matched_pair(const BinaryBracket& gb, const BinaryBracket& hb,
                             std::vector<Mat> rho, std::vector<Mat> psi) {
  LieYamagutiAlgebra g = from_lie(gb, LieTernary::zero);
  LieYamagutiAlgebra h = from_lie(hb, LieTernary::zero);
  const std::size_t n = g.dim, m = h.dim;
  const Field& f = g.field;
  std::vector<Mat> mu(n * n, Mat(f, m, m));
  std::vector<Mat> nu(m * m, Mat(f, n, n));
  return validate_matched_pair(MatchedPair{std::move(g), std::move(h),
                                           std::move(rho), std::move(mu),
                                           std::move(psi), std::move(nu), false});
}

}  // namespace liya
