#include "liya/matrix.hpp"

namespace liya {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r = a;
  add_in_place(r, b);
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  sub_in_place(r, b);
  return r;
}

Vec scaled(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void add_in_place(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw math_error("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
}

void sub_in_place(Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw math_error("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
}

void axpy(Vec& a, const Scalar& c, const Vec& v) {
  if (a.size() != v.size()) throw math_error("vector size mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += c * v[i];
}

Mat::Mat(const Field& f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), e_(rows * cols, f.zero()) {}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Mat Mat::from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols) {
  Mat m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw math_error("column size mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Mat Mat::from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw math_error("row size mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::column(std::size_t c) const {
  Vec v = zero_vec(f_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Vec Mat::row(std::size_t r) const {
  Vec v = zero_vec(f_, cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("matrix shape mismatch");
  Mat m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw math_error("matrix shape mismatch");
  Mat m = *this;
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
  return m;
}

Mat Mat::operator-() const {
  Mat m = *this;
  for (auto& x : m.e_) x = -x;
  return m;
}

Mat Mat::scaled_by(const Scalar& c) const {
  Mat m = *this;
  for (auto& x : m.e_) x *= c;
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw math_error("matrix shape mismatch in product");
  Mat m(f_, rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) m.at(r, c) += a * o.at(k, c);
    }
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw math_error("matrix/vector size mismatch");
  Vec r = zero_vec(f_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t row = 0; row < rows_; ++row) r[row] += at(row, c) * v[c];
  }
  return r;
}

bool Mat::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Rref rref(const Mat& m) {
  Rref out{m, {}};
  Mat& a = out.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    // find pivot
    std::size_t piv = lead;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != lead)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(lead, c));
    Scalar inv = a.at(lead, col).inv();
    for (std::size_t c = col; c < a.cols(); ++c) a.at(lead, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a.at(r, col).is_zero()) continue;
      Scalar factor = a.at(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a.at(r, c) -= factor * a.at(lead, c);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

std::vector<Vec> kernel_basis(const Mat& m) {
  Rref r = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v = zero_vec(f, m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      v[r.pivots[i]] = -r.reduced.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
  if (b.size() != m.rows()) throw math_error("rhs size mismatch");
  Mat aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  Rref red = rref(aug);
  for (std::size_t p : red.pivots)
    if (p == m.cols()) return std::nullopt;  // pivot in the rhs column
  Vec x = zero_vec(m.field(), m.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i)
    x[red.pivots[i]] = red.reduced.at(i, m.cols());
  return x;
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  Mat aug = hstack(m, Mat::identity(m.field(), m.rows()));
  Rref red = rref(aug);
  if (red.pivots.size() != m.rows()) return std::nullopt;
  for (std::size_t i = 0; i < red.pivots.size(); ++i)
    if (red.pivots[i] != i) return std::nullopt;
  Mat inv(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) inv.at(r, c) = red.reduced.at(r, m.cols() + c);
  return inv;
}

bool in_column_span(const Mat& m, const Vec& v) { return solve(m, v).has_value(); }

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw math_error("hstack row mismatch");
  Mat m(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m.at(r, c) = a.at(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, a.cols() + c) = b.at(r, c);
  }
  return m;
}

}  // namespace liya
