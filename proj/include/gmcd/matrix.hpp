#ifndef GMCD_MATRIX_HPP
#define GMCD_MATRIX_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

#include "gmcd/ratfunc.hpp"

namespace Eigen {

template <>
struct NumTraits<gmcd::Rat> : GenericNumTraits<gmcd::Rat> {
  typedef gmcd::Rat Real;
  typedef gmcd::Rat NonInteger;
  typedef gmcd::Rat Nested;
  typedef gmcd::Rat Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<gmcd::RatFunc> : GenericNumTraits<gmcd::RatFunc> {
  typedef gmcd::RatFunc Real;
  typedef gmcd::RatFunc NonInteger;
  typedef gmcd::RatFunc Nested;
  typedef gmcd::RatFunc Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 64,
    MulCost = 256
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace gmcd {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using RatMat = Mat<Rat>;
using RatVec = Vec<Rat>;
using SymMat = Mat<RatFunc>;
using SymVec = Vec<RatFunc>;

inline bool is_zero(const Rat& x) { return x.is_zero(); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

// Pivot cost: prefer short entries to keep intermediate expressions small.
inline std::size_t pivot_cost(const Rat&) { return 1; }
inline std::size_t pivot_cost(const RatFunc& x) { return x.num().size(); }

template <class T>
Mat<T> identity(int n) {
  Mat<T> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = T(i == j ? 1 : 0);
  return m;
}

template <class T>
Mat<T> zeros(int r, int c) {
  Mat<T> m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = T(0);
  return m;
}

template <class T>
bool all_zero(const Mat<T>& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Exact Gauss-Jordan solve of A X = B for square nonsingular A.
template <class T>
Mat<T> solve(Mat<T> a, Mat<T> b) {
  const int n = static_cast<int>(a.rows());
  if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    std::size_t best = 0;
    for (int r = col; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      std::size_t cost = pivot_cost(a(r, col));
      if (piv < 0 || cost < best) {
        piv = r;
        best = cost;
      }
    }
    if (piv < 0) throw SingularMatrix("solve: singular matrix");
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      b.row(piv).swap(b.row(col));
    }
    T inv = T(1) / a(col, col);
    for (int j = col; j < n; ++j) a(col, j) = a(col, j) * inv;
    for (int j = 0; j < b.cols(); ++j) b(col, j) = b(col, j) * inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      T f = a(r, col);
      for (int j = col; j < n; ++j)
        if (!is_zero(a(col, j))) a(r, j) = a(r, j) - f * a(col, j);
      for (int j = 0; j < b.cols(); ++j)
        if (!is_zero(b(col, j))) b(r, j) = b(r, j) - f * b(col, j);
    }
  }
  return b;
}

template <class T>
Mat<T> inverse(const Mat<T>& a) {
  return solve<T>(a, identity<T>(static_cast<int>(a.rows())));
}

// Exact product without Eigen's blocking kernels (keeps zero entries
// cheap for sparse symbolic matrices).
template <class T>
Mat<T> mul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mul: shape mismatch");
  Mat<T> c = zeros<T>(static_cast<int>(a.rows()), static_cast<int>(b.cols()));
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (is_zero(a(i, k))) continue;
      for (int j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

// Row echelon rank and nullspace basis over Q.
struct Nullspace {
  int rank = 0;
  std::vector<RatVec> basis;
};
Nullspace nullspace(const RatMat& a);

template <class T>
std::string to_string(const Mat<T>& m) {
  std::string s = "[";
  for (int i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (int j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).str();
    s += "]";
  }
  return s + "]";
}

}  // namespace gmcd

#endif  // GMCD_MATRIX_HPP
