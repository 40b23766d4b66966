#include "liya/algebra.hpp"

#include <stdexcept>
#include <string>

namespace liya {

namespace {

std::string tuple_str(const std::vector<std::size_t>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i] + 1);  // 1-based in messages
  }
  return s + ")";
}

}  // namespace

BinaryBracket::BinaryBracket(const Field& f, std::size_t dim)
    : f_(f), dim_(dim), c_(dim * dim * dim, f.zero()) {}

void BinaryBracket::add_antisym(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  at(i, j, k) += v;
  at(j, i, k) -= v;
}

Vec BinaryBracket::basis(std::size_t i, std::size_t j) const {
  Vec r = zero_vec(f_, dim_);
  for (std::size_t k = 0; k < dim_; ++k) r[k] = at(i, j, k);
  return r;
}

Vec BinaryBracket::eval(const Vec& x, const Vec& y) const {
  Vec r = zero_vec(f_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) r[k] += c * at(i, j, k);
    }
  }
  return r;
}

Vec BinaryBracket::eval_basis_vec(std::size_t i, const Vec& y) const {
  Vec r = zero_vec(f_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    if (y[j].is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k) r[k] += y[j] * at(i, j, k);
  }
  return r;
}

Vec BinaryBracket::eval_vec_basis(const Vec& x, std::size_t j) const {
  Vec r = zero_vec(f_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t k = 0; k < dim_; ++k) r[k] += x[i] * at(i, j, k);
  }
  return r;
}

Mat BinaryBracket::ad(std::size_t i) const {
  Mat m(f_, dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m.at(k, j) = at(i, j, k);
  return m;
}

void BinaryBracket::validate_antisymmetry() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!(at(i, j, k) + at(j, i, k)).is_zero())
          throw math_error("binary bracket not antisymmetric at " + tuple_str({i, j, k}));
}

TernaryBracket::TernaryBracket(const Field& f, std::size_t dim)
    : f_(f), dim_(dim), t_(dim * dim * dim * dim, f.zero()) {}

void TernaryBracket::add_antisym(std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                                 const Scalar& v) {
  at(i, j, k, l) += v;
  at(j, i, k, l) -= v;
}

Vec TernaryBracket::basis(std::size_t i, std::size_t j, std::size_t k) const {
  Vec r = zero_vec(f_, dim_);
  for (std::size_t l = 0; l < dim_; ++l) r[l] = at(i, j, k, l);
  return r;
}

Vec TernaryBracket::eval(const Vec& x, const Vec& y, const Vec& z) const {
  Vec r = zero_vec(f_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero()) continue;
      Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (z[k].is_zero()) continue;
        Scalar d = c * z[k];
        for (std::size_t l = 0; l < dim_; ++l) r[l] += d * at(i, j, k, l);
      }
    }
  }
  return r;
}

Mat TernaryBracket::op(std::size_t i, std::size_t j) const {
  Mat m(f_, dim_, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    for (std::size_t l = 0; l < dim_; ++l) m.at(l, k) = at(i, j, k, l);
  return m;
}

void TernaryBracket::validate_antisymmetry() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t l = 0; l < dim_; ++l)
          if (!(at(i, j, k, l) + at(j, i, k, l)).is_zero())
            throw math_error("ternary bracket not antisymmetric at " + tuple_str({i, j, k, l}));
}

void LieYamagutiAlgebra::require_validated(const char* who) const {
  if (!validated)
    throw math_error(std::string(who) + " requires a validated algebra");
}

// ---------------------------------------------------------------------------
// axiom checker
//
// The four defining identities, checked on basis tuples. (1) and (2) are
// alternating in their first three arguments, so distinct ordered triples
// suffice there; (3) and (4) are checked for all (k,l) with i<j in the
// antisymmetric slots. (4) is evaluated as an operator identity in its last
// argument; a nonzero column yields the witness tuple.

namespace {

constexpr std::size_t kMaxViolationsPerAxiom = 8;

struct AxiomScan {
  AxiomReport report;
  void record(int axiom, std::vector<std::size_t> tuple, Vec residual, std::size_t& count) {
    report.passed = false;
    if (count < kMaxViolationsPerAxiom)
      report.violations.push_back({axiom, std::move(tuple), std::move(residual)});
    ++count;
  }
};

}  // namespace

AxiomReport check_ly_axioms(const LieYamagutiAlgebra& a) {
  a.binary.validate_antisymmetry();
  a.ternary.validate_antisymmetry();
  const std::size_t n = a.dim;
  const BinaryBracket& b = a.binary;
  const TernaryBracket& t = a.ternary;

  std::vector<Mat> T;  // T[i*n+j]: z -> <<e_i, e_j, z>>
  T.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) T.push_back(t.op(i, j));

  AxiomScan scan;

  // (1)  sum_cyc [[x,y],z] + sum_cyc <<x,y,z>> = 0
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolationsPerAxiom; ++i)
    for (std::size_t j = i + 1; j < n && hits < kMaxViolationsPerAxiom; ++j)
      for (std::size_t k = j + 1; k < n && hits < kMaxViolationsPerAxiom; ++k) {
        Vec r = b.eval_vec_basis(b.basis(i, j), k);
        add_in_place(r, b.eval_vec_basis(b.basis(j, k), i));
        add_in_place(r, b.eval_vec_basis(b.basis(k, i), j));
        add_in_place(r, t.basis(i, j, k));
        add_in_place(r, t.basis(j, k, i));
        add_in_place(r, t.basis(k, i, j));
        if (!is_zero_vec(r)) scan.record(1, {i, j, k}, std::move(r), hits);
      }

  // (2)  <<[x,y],z,w>> + <<[y,z],x,w>> + <<[z,x],y,w>> = 0, as an operator in w
  hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolationsPerAxiom; ++i)
    for (std::size_t j = i + 1; j < n && hits < kMaxViolationsPerAxiom; ++j)
      for (std::size_t k = j + 1; k < n && hits < kMaxViolationsPerAxiom; ++k) {
        Mat m(a.field, n, n);
        auto acc = [&](const Vec& v, std::size_t second) {
          for (std::size_t mm = 0; mm < n; ++mm)
            if (!v[mm].is_zero()) m = m + T[mm * n + second].scaled_by(v[mm]);
        };
        acc(b.basis(i, j), k);
        acc(b.basis(j, k), i);
        acc(b.basis(k, i), j);
        for (std::size_t l = 0; l < n && hits < kMaxViolationsPerAxiom; ++l) {
          Vec col = m.column(l);
          if (!is_zero_vec(col)) scan.record(2, {i, j, k, l}, std::move(col), hits);
        }
      }

  // (3)  <<x,y,[z,w]>> = [<<x,y,z>>,w] + [z,<<x,y,w>>]
  hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolationsPerAxiom; ++i)
    for (std::size_t j = i + 1; j < n && hits < kMaxViolationsPerAxiom; ++j)
      for (std::size_t k = 0; k < n && hits < kMaxViolationsPerAxiom; ++k)
        for (std::size_t l = 0; l < n && hits < kMaxViolationsPerAxiom; ++l) {
          Vec r = T[i * n + j].apply(b.basis(k, l));
          sub_in_place(r, b.eval_vec_basis(t.basis(i, j, k), l));
          sub_in_place(r, b.eval_basis_vec(k, t.basis(i, j, l)));
          if (!is_zero_vec(r)) scan.record(3, {i, j, k, l}, std::move(r), hits);
        }

  // (4)  <<x,y,<<z,w,v>>>> = <<<<x,y,z>>,w,v>> + <<z,<<x,y,w>>,v>> + <<z,w,<<x,y,v>>>>
  // as an operator identity in v
  hits = 0;
  for (std::size_t i = 0; i < n && hits < kMaxViolationsPerAxiom; ++i)
    for (std::size_t j = i + 1; j < n && hits < kMaxViolationsPerAxiom; ++j)
      for (std::size_t k = 0; k < n && hits < kMaxViolationsPerAxiom; ++k)
        for (std::size_t l = 0; l < n && hits < kMaxViolationsPerAxiom; ++l) {
          Mat m = commutator(T[i * n + j], T[k * n + l]);
          Vec u = t.basis(i, j, k);  // first-slot replacement
          for (std::size_t mm = 0; mm < n; ++mm)
            if (!u[mm].is_zero()) m = m - T[mm * n + l].scaled_by(u[mm]);
          Vec w = t.basis(i, j, l);  // second-slot replacement
          for (std::size_t mm = 0; mm < n; ++mm)
            if (!w[mm].is_zero()) m = m - T[k * n + mm].scaled_by(w[mm]);
          for (std::size_t v = 0; v < n && hits < kMaxViolationsPerAxiom; ++v) {
            Vec col = m.column(v);
            if (!is_zero_vec(col)) scan.record(4, {i, j, k, l, v}, std::move(col), hits);
          }
        }

  return scan.report;
}

LieYamagutiAlgebra validate_ly(LieYamagutiAlgebra a) {
  AxiomReport rep = check_ly_axioms(a);
  if (!rep.passed) {
    const AxiomViolation& v = rep.violations.front();
    throw math_error("axiom (" + std::to_string(v.axiom) + ") fails at " + tuple_str(v.tuple));
  }
  a.validated = true;
  return a;
}

LieYamagutiAlgebra from_lie(const BinaryBracket& b, LieTernary mode) {
  b.validate_antisymmetry();
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec r = b.eval_vec_basis(b.basis(i, j), k);
        add_in_place(r, b.eval_vec_basis(b.basis(j, k), i));
        add_in_place(r, b.eval_vec_basis(b.basis(k, i), j));
        if (!is_zero_vec(r))
          throw math_error("Jacobi fails at " + tuple_str({i, j, k}));
      }
  LieYamagutiAlgebra a(b.field(), n);
  a.binary = b;
  if (mode == LieTernary::iterated) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vec v = b.eval_vec_basis(b.basis(i, j), k);
          for (std::size_t l = 0; l < n; ++l) a.ternary.at(i, j, k, l) = v[l];
        }
  }
  a = validate_ly(std::move(a));
  return a;
}

LieYamagutiAlgebra from_leibniz(const Field& f, std::size_t dim,
                                const std::vector<Scalar>& prod) {
  if (prod.size() != dim * dim * dim) throw input_error("leibniz tensor size mismatch");
  auto p = [&](std::size_t i, std::size_t j, std::size_t k) -> const Scalar& {
    return prod[(i * dim + j) * dim + k];
  };
  auto p_basis = [&](std::size_t i, std::size_t j) {
    Vec r = zero_vec(f, dim);
    for (std::size_t k = 0; k < dim; ++k) r[k] = p(i, j, k);
    return r;
  };
  auto p_basis_vec = [&](std::size_t i, const Vec& y) {
    Vec r = zero_vec(f, dim);
    for (std::size_t j = 0; j < dim; ++j)
      if (!y[j].is_zero())
        for (std::size_t k = 0; k < dim; ++k) r[k] += y[j] * p(i, j, k);
    return r;
  };
  auto p_vec_basis = [&](const Vec& x, std::size_t j) {
    Vec r = zero_vec(f, dim);
    for (std::size_t i = 0; i < dim; ++i)
      if (!x[i].is_zero())
        for (std::size_t k = 0; k < dim; ++k) r[k] += x[i] * p(i, j, k);
    return r;
  };
  // left Leibniz: x o (y o z) = (x o y) o z + y o (x o z)
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        Vec r = p_basis_vec(i, p_basis(j, k));
        sub_in_place(r, p_vec_basis(p_basis(i, j), k));
        sub_in_place(r, p_basis_vec(j, p_basis(i, k)));
        if (!is_zero_vec(r))
          throw math_error("left Leibniz identity fails at " + tuple_str({i, j, k}));
      }
  LieYamagutiAlgebra a(f, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k)
        a.binary.at(i, j, k) = p(i, j, k) - p(j, i, k);
      for (std::size_t k = 0; k < dim; ++k) {
        Vec w = p_vec_basis(p_basis(i, j), k);
        for (std::size_t l = 0; l < dim; ++l) a.ternary.at(i, j, k, l) = -w[l];
      }
    }
  a = validate_ly(std::move(a));
  return a;
}

LieYamagutiAlgebra from_lts_ternary(const TernaryBracket& t) {
  t.validate_antisymmetry();
  LieYamagutiAlgebra a(t.field(), t.dim());
  a.ternary = t;
  AxiomReport rep = check_ly_axioms(a);
  if (!rep.passed) {
    const AxiomViolation& v = rep.violations.front();
    const char* which = v.axiom == 1 ? "cyclic identity" : "ternary derivation identity";
    throw math_error(std::string(which) + " fails at " + tuple_str(v.tuple));
  }
  a.validated = true;
  return a;
}

bool is_subalgebra(const LieYamagutiAlgebra& a, const std::vector<Vec>& span) {
  Mat s = Mat::from_columns(a.field, a.dim, span);
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = 0; j < span.size(); ++j) {
      if (!in_column_span(s, a.bracket(span[i], span[j]))) return false;
      for (std::size_t k = 0; k < span.size(); ++k)
        if (!in_column_span(s, a.tri(span[i], span[j], span[k]))) return false;
    }
  return true;
}

bool check_homomorphism(const LieYamagutiAlgebra& a, const LieYamagutiAlgebra& b,
                        const Mat& phi) {
  if (phi.rows() != b.dim || phi.cols() != a.dim)
    throw math_error("homomorphism shape mismatch");
  if (a.field != b.field) throw math_error("homomorphism across different fields");
  std::vector<Vec> img;
  img.reserve(a.dim);
  for (std::size_t i = 0; i < a.dim; ++i) img.push_back(phi.column(i));
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      if (phi.apply(a.binary.basis(i, j)) != b.binary.eval(img[i], img[j])) return false;
      for (std::size_t k = 0; k < a.dim; ++k)
        if (phi.apply(a.ternary.basis(i, j, k)) != b.ternary.eval(img[i], img[j], img[k]))
          return false;
    }
  return true;
}

LieYamagutiAlgebra direct_sum(const LieYamagutiAlgebra& a, const LieYamagutiAlgebra& b) {
  if (a.field != b.field) throw math_error("direct sum across different fields");
  LieYamagutiAlgebra s(a.field, a.dim + b.dim);
  const std::size_t off = a.dim;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      for (std::size_t k = 0; k < a.dim; ++k) s.binary.at(i, j, k) = a.binary.at(i, j, k);
      for (std::size_t k = 0; k < a.dim; ++k)
        for (std::size_t l = 0; l < a.dim; ++l)
          s.ternary.at(i, j, k, l) = a.ternary.at(i, j, k, l);
    }
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) {
      for (std::size_t k = 0; k < b.dim; ++k)
        s.binary.at(off + i, off + j, off + k) = b.binary.at(i, j, k);
      for (std::size_t k = 0; k < b.dim; ++k)
        for (std::size_t l = 0; l < b.dim; ++l)
          s.ternary.at(off + i, off + j, off + k, off + l) = b.ternary.at(i, j, k, l);
    }
  s.validated = a.validated && b.validated;
  return s;
}

}  // namespace liya
