#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace diracmf {

/// Exact rational scalar used wherever a contract demands exact arithmetic
/// (inner products on lattices, sheet potentials, kernel enumeration).
/// Always normalised: gcd(num, den) = 1, den > 0. Comparisons cross-multiply
/// in 128-bit, so desk-scale values stay far from overflow.
class Rat {
 public:
  constexpr Rat() = default;
  constexpr Rat(std::int64_t n) : num_(n), den_(1) {}   // NOLINT: implicit by design
  Rat(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rat& operator+=(const Rat& o) {
    const std::int64_t g = std::gcd(den_, o.den_);
    const std::int64_t scale = o.den_ / g;
    num_ = num_ * scale + o.num_ * (den_ / g);
    den_ *= scale;
    normalize();
    return *this;
  }
  Rat& operator-=(const Rat& o) { return *this += -o; }
  Rat& operator*=(const Rat& o) {
    // cross-reduce before multiplying to delay overflow
    const std::int64_t g1 = std::gcd(num_, o.den_);
    const std::int64_t g2 = std::gcd(o.num_, den_);
    num_ = (num_ / g1) * (o.num_ / g2);
    den_ = (den_ / g2) * (o.den_ / g1);
    normalize();
    return *this;
  }
  Rat& operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    Rat inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_ < 0) {
      inv.num_ = -inv.num_;
      inv.den_ = -inv.den_;
    }
    return *this *= inv;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline double to_double(const Rat& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

/// Canonical string form: "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string rat_str(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rat rat_parse(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse rational: \"" + s + "\"");
  }
}

using RatVec = std::vector<Rat>;

/// Minimal dense rational matrix, enough for rank <= 4 lattice work:
/// Gram matrices, exact solves, determinants.
class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const RatMat&) const = default;

  RatMat transposed() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  RatMat operator*(const RatMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("RatMat: dimension mismatch in product");
    RatMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rat& v = (*this)(i, k);
        if (v == Rat(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
      }
    return r;
  }

  RatVec operator*(const RatVec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("RatMat: vector size mismatch");
    RatVec y(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  RatMat scaled(const Rat& c) const {
    RatMat r = *this;
    for (auto& v : r.a_) v *= c;
    return r;
  }

  Rat det() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat: determinant of non-square matrix");
    RatMat m = *this;
    Rat d(1);
    for (int c = 0; c < cols_; ++c) {
      int pivot = -1;
      for (int r = c; r < rows_; ++r)
        if (m(r, c) != Rat(0)) { pivot = r; break; }
      if (pivot < 0) return Rat(0);
      if (pivot != c) {
        for (int j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(c, j));
        d = -d;
      }
      d *= m(c, c);
      for (int r = c + 1; r < rows_; ++r) {
        if (m(r, c) == Rat(0)) continue;
        const Rat f = m(r, c) / m(c, c);
        for (int j = c; j < cols_; ++j) m(r, j) -= f * m(c, j);
      }
    }
    return d;
  }

  /// Exact solve A x = b by Gauss-Jordan; throws on singular A.
  RatVec solve(const RatVec& b) const {
    if (rows_ != cols_ || static_cast<int>(b.size()) != rows_)
      throw std::invalid_argument("RatMat: solve dimension mismatch");
    RatMat m = *this;
    RatVec x = b;
    for (int c = 0; c < cols_; ++c) {
      int pivot = -1;
      for (int r = c; r < rows_; ++r)
        if (m(r, c) != Rat(0)) { pivot = r; break; }
      if (pivot < 0) throw std::runtime_error("RatMat: singular matrix in solve");
      if (pivot != c) {
        for (int j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(c, j));
        std::swap(x[pivot], x[c]);
      }
      const Rat inv = Rat(1) / m(c, c);
      for (int j = 0; j < cols_; ++j) m(c, j) *= inv;
      x[c] *= inv;
      for (int r = 0; r < rows_; ++r) {
        if (r == c || m(r, c) == Rat(0)) continue;
        const Rat f = m(r, c);
        for (int j = 0; j < cols_; ++j) m(r, j) -= f * m(c, j);
        x[r] -= f * x[c];
      }
    }
    return x;
  }

  RatMat inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("RatMat: inverse of non-square matrix");
    RatMat inv(rows_, cols_);
    for (int j = 0; j < cols_; ++j) {
      RatVec e(rows_, Rat(0));
      e[j] = 1;
      RatVec col = solve(e);
      for (int i = 0; i < rows_; ++i) inv(i, j) = col[i];
    }
    return inv;
  }

  bool symmetric() const {
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  /// Sylvester criterion; exact.
  bool positive_definite() const {
    if (rows_ != cols_ || !symmetric()) return false;
    for (int k = 1; k <= rows_; ++k) {
      RatMat minor(k, k);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) minor(i, j) = (*this)(i, j);
      if (minor.det() <= Rat(0)) return false;
    }
    return true;
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

inline Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rational dot: size mismatch");
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Quadratic/bilinear evaluation a^T G b, exact.
inline Rat form_value(const RatMat& g, const RatVec& a, const RatVec& b) {
  return dot(a, g * b);
}

}  // namespace diracmf
