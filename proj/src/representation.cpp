#include "liya/representation.hpp"

namespace liya {

namespace {

std::string tuple_str(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i] + 1);
  }
  return s + ")";
}

constexpr std::size_t kMaxViolations = 8;

}  // namespace

Mat Representation::rho_vec(const Vec& x) const {
  Mat m(alg.field, repdim, repdim);
  for (std::size_t i = 0; i < alg.dim; ++i)
    if (!x[i].is_zero()) m = m + rho[i].scaled_by(x[i]);
  return m;
}

Mat Representation::mu_vec(const Vec& x, const Vec& y) const {
  Mat m(alg.field, repdim, repdim);
  for (std::size_t i = 0; i < alg.dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < alg.dim; ++j)
      if (!y[j].is_zero()) m = m + mu_at(i, j).scaled_by(x[i] * y[j]);
  }
  return m;
}

Representation zero_representation(const LieYamagutiAlgebra& a, std::size_t repdim) {
  Representation r{a, repdim, {}, {}, false};
  r.rho.assign(a.dim, Mat(a.field, repdim, repdim));
  r.mu.assign(a.dim * a.dim, Mat(a.field, repdim, repdim));
  r.validated = true;  // all five conditions are trivially zero
  return r;
}

std::vector<Mat> derived_D(const Representation& r) {
  const std::size_t n = r.alg.dim;
  std::vector<Mat> d;
  d.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat m = commutator(r.rho[i], r.rho[j]);
      Vec br = r.alg.binary.basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!br[k].is_zero()) m = m - r.rho[k].scaled_by(br[k]);
      m = m - r.mu_at(i, j) + r.mu_at(j, i);
      d.push_back(std::move(m));
    }
  return d;
}

Mat derived_D_vec(const Representation& r, const Vec& x, const Vec& y) {
  Mat m = commutator(r.rho_vec(x), r.rho_vec(y));
  Vec br = r.alg.bracket(x, y);
  for (std::size_t k = 0; k < r.alg.dim; ++k)
    if (!br[k].is_zero()) m = m - r.rho[k].scaled_by(br[k]);
  return m - r.mu_vec(x, y) + r.mu_vec(y, x);
}

RepReport check_representation(const Representation& r) {
  const std::size_t n = r.alg.dim, m = r.repdim;
  const Field& f = r.alg.field;
  if (r.rho.size() != n || r.mu.size() != n * n)
    throw math_error("representation tensor shape mismatch");
  for (const Mat& mat : r.rho)
    if (mat.rows() != m || mat.cols() != m) throw math_error("rho shape mismatch");
  for (const Mat& mat : r.mu)
    if (mat.rows() != m || mat.cols() != m) throw math_error("mu shape mismatch");

  const BinaryBracket& b = r.alg.binary;
  const TernaryBracket& t = r.alg.ternary;
  std::vector<Mat> D = derived_D(r);

  RepReport rep;
  auto record = [&](int cond, std::vector<std::size_t> tuple, Mat residual,
                    std::size_t& count) {
    rep.passed = false;
    if (count < kMaxViolations)
      rep.violations.push_back({cond, std::move(tuple), std::move(residual)});
    ++count;
  };
  auto mu_first_vec = [&](const Vec& v, std::size_t k) {  // mu(v, e_k)
    Mat s(f, m, m);
    for (std::size_t i = 0; i < n; ++i)
      if (!v[i].is_zero()) s = s + r.mu_at(i, k).scaled_by(v[i]);
    return s;
  };
  auto mu_second_vec = [&](std::size_t i, const Vec& v) {  // mu(e_i, v)
    Mat s(f, m, m);
    for (std::size_t j = 0; j < n; ++j)
      if (!v[j].is_zero()) s = s + r.mu_at(i, j).scaled_by(v[j]);
    return s;
  };
  auto rho_vec_local = [&](const Vec& v) {
    Mat s(f, m, m);
    for (std::size_t i = 0; i < n; ++i)
      if (!v[i].is_zero()) s = s + r.rho[i].scaled_by(v[i]);
    return s;
  };

  // (1) mu([x,y],z) = mu(x,z) rho_y - mu(y,z) rho_x
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolations; ++i)
    for (std::size_t j = 0; j < n && hits < kMaxViolations; ++j)
      for (std::size_t k = 0; k < n && hits < kMaxViolations; ++k) {
        Mat res = mu_first_vec(b.basis(i, j), k) - r.mu_at(i, k) * r.rho[j] +
                  r.mu_at(j, k) * r.rho[i];
        if (!res.is_zero()) record(1, {i, j, k}, std::move(res), hits);
      }

  // (2) mu(x,[y,z]) = rho_y mu(x,z) - rho_z mu(x,y)
  hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolations; ++i)
    for (std::size_t j = 0; j < n && hits < kMaxViolations; ++j)
      for (std::size_t k = 0; k < n && hits < kMaxViolations; ++k) {
        Mat res = mu_second_vec(i, b.basis(j, k)) - r.rho[j] * r.mu_at(i, k) +
                  r.rho[k] * r.mu_at(i, j);
        if (!res.is_zero()) record(2, {i, j, k}, std::move(res), hits);
      }

  // (3) rho_<<x,y,z>> = D(x,y) rho_z - rho_z D(x,y)
  hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolations; ++i)
    for (std::size_t j = 0; j < n && hits < kMaxViolations; ++j)
      for (std::size_t k = 0; k < n && hits < kMaxViolations; ++k) {
        Mat res = rho_vec_local(t.basis(i, j, k)) - commutator(D[i * n + j], r.rho[k]);
        if (!res.is_zero()) record(3, {i, j, k}, std::move(res), hits);
      }

  // (4) mu(z,w) mu(x,y) - mu(y,w) mu(x,z) - mu(x,<<y,z,w>>) + D(y,z) mu(x,w) = 0
  hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolations; ++i)
    for (std::size_t j = 0; j < n && hits < kMaxViolations; ++j)
      for (std::size_t k = 0; k < n && hits < kMaxViolations; ++k)
        for (std::size_t l = 0; l < n && hits < kMaxViolations; ++l) {
          Mat res = r.mu_at(k, l) * r.mu_at(i, j) - r.mu_at(j, l) * r.mu_at(i, k) -
                    mu_second_vec(i, t.basis(j, k, l)) + D[j * n + k] * r.mu_at(i, l);
          if (!res.is_zero()) record(4, {i, j, k, l}, std::move(res), hits);
        }

  // (5) mu(<<x,y,z>>,w) + mu(z,<<x,y,w>>) = D(x,y) mu(z,w) - mu(z,w) D(x,y)
  hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolations; ++i)
    for (std::size_t j = 0; j < n && hits < kMaxViolations; ++j)
      for (std::size_t k = 0; k < n && hits < kMaxViolations; ++k)
        for (std::size_t l = 0; l < n && hits < kMaxViolations; ++l) {
          Mat res = mu_first_vec(t.basis(i, j, k), l) + mu_second_vec(k, t.basis(i, j, l)) -
                    commutator(D[i * n + j], r.mu_at(k, l));
          if (!res.is_zero()) record(5, {i, j, k, l}, std::move(res), hits);
        }

  return rep;
}

Representation validate_representation(Representation r) {
  RepReport rep = check_representation(r);
  if (!rep.passed) {
    const RepViolation& v = rep.violations.front();
    throw math_error("representation condition (" + std::to_string(v.condition) +
                     ") fails at " + tuple_str(v.tuple));
  }
  r.validated = true;
  return r;
}

Representation adjoint(const LieYamagutiAlgebra& a) {
  Representation r{a, a.dim, {}, {}, false};
  for (std::size_t i = 0; i < a.dim; ++i) r.rho.push_back(a.binary.ad(i));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      // mu(x,y) z = <<z,x,y>>
      Mat m(a.field, a.dim, a.dim);
      for (std::size_t k = 0; k < a.dim; ++k)
        for (std::size_t l = 0; l < a.dim; ++l) m.at(l, k) = a.ternary.at(k, i, j, l);
      r.mu.push_back(std::move(m));
    }
  if (a.validated) r = validate_representation(std::move(r));
  return r;
}

LieYamagutiAlgebra semidirect(const Representation& r) {
  if (!r.validated) throw math_error("semidirect requires a validated representation");
  const std::size_t n = r.alg.dim, m = r.repdim;
  LieYamagutiAlgebra s(r.alg.field, n + m);
  std::vector<Mat> D = derived_D(r);
  // binary: [(x,u),(y,v)] = ([x,y], rho_x v - rho_y u)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.binary.at(i, j, k) = r.alg.binary.at(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        s.binary.at(i, n + a, n + b) = r.rho[i].at(b, a);
        s.binary.at(n + a, i, n + b) = -r.rho[i].at(b, a);
      }
  // ternary: <<(x,u),(y,v),(z,w)>> = (<<x,y,z>>, D(x,y)w + mu(y,z)u - mu(x,z)v)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          s.ternary.at(i, j, k, l) = r.alg.ternary.at(i, j, k, l);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = 0; d < m; ++d)
          s.ternary.at(i, j, n + c, n + d) = D[i * n + j].at(d, c);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t d = 0; d < m; ++d) {
          const Scalar& v = r.mu_at(j, k).at(d, a);
          s.ternary.at(n + a, j, k, n + d) = v;
          s.ternary.at(j, n + a, k, n + d) = -v;
        }
  return validate_ly(std::move(s));
}

}  // namespace liya
