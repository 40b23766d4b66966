#pragma once

#include <optional>
#include <vector>

#include "liya/field.hpp"

namespace liya {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scaled(const Scalar& c, const Vec& v);
void add_in_place(Vec& a, const Vec& b);
void sub_in_place(Vec& a, const Vec& b);
void axpy(Vec& a, const Scalar& c, const Vec& v);  // a += c*v

// Dense matrix over an exact field. Row-major storage.
class Mat {
 public:
  Mat(const Field& f, std::size_t rows, std::size_t cols);  // zero matrix
  static Mat identity(const Field& f, std::size_t n);
  static Mat from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);
  static Mat from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return f_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  Vec column(std::size_t c) const;
  Vec row(std::size_t r) const;

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  Mat scaled_by(const Scalar& c) const;
  Vec apply(const Vec& v) const;  // matrix * column vector

  bool is_zero() const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  // Commutator a*b - b*a.
  friend Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

 private:
  Field f_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct Rref {
  Mat reduced;
  std::vector<std::size_t> pivots;  // pivot column indices, ascending (0-based)
};

Rref rref(const Mat& m);
std::size_t rank(const Mat& m);

// Kernel basis from the rref: one vector per free column, that column's entry
// normalized to 1, ordered by free column index. Deterministic.
std::vector<Vec> kernel_basis(const Mat& m);

// One particular solution of m x = b, or nullopt if inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

std::optional<Mat> inverse(const Mat& m);

// Does v lie in the column span of m?
bool in_column_span(const Mat& m, const Vec& v);

// [a | b] side by side.
Mat hstack(const Mat& a, const Mat& b);

}  // namespace liya
