#include "orbital/rational.hpp"

#include "orbital/error.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace orbital {
namespace {

using i128 = __int128;

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool fits(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  *this = from_wide(n, d);
}

Rational Rational::from_wide(i128 n, i128 d) {
  if (d == 0) throw InvalidArgument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (!fits(n) || !fits(d)) throw std::overflow_error("rational overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) return *this = from_wide(i128(num_) + o.num_, den_);
  return *this = from_wide(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  return *this = from_wide(i128(num_) * o.num_, i128(den_) * o.den_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw InvalidArgument("rational division by zero");
  return *this = from_wide(i128(num_) * o.den_, i128(den_) * o.num_);
}

bool operator<(const Rational& a, const Rational& b) {
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

Rational Rational::parse(const std::string& text) {
  auto bad = [&] { return InvalidArgument("not a rational number: '" + text + "'"); };
  if (text.empty()) throw bad();
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty()) throw bad();
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw bad();
    }
    if (pos != s.size()) throw bad();
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string::npos) {
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15 || frac.find_first_not_of("0123456789") != std::string::npos)
      throw bad();
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational f(parse_int(frac), scale);
    Rational w(parse_int(whole));
    return neg ? w - f : w + f;
  }
  return Rational(parse_int(text));
}

std::int64_t floor(const Rational& q) {
  std::int64_t f = q.num() / q.den();
  if (q.num() % q.den() != 0 && q.num() < 0) --f;
  return f;
}

std::int64_t ceil(const Rational& q) { return -floor(-q); }

VectorXq solve_exact(MatrixXq A, VectorXq b) {
  const Eigen::Index rows = A.rows(), cols = A.cols();
  if (b.size() != rows) throw InvalidArgument("solve_exact: dimension mismatch");
  Eigen::Index r = 0;
  std::vector<Eigen::Index> pivot_col;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && A(p, c) == Rational(0)) ++p;
    if (p == rows) continue;
    A.row(p).swap(A.row(r));
    std::swap(b(p), b(r));
    Rational inv = Rational(1) / A(r, c);
    A.row(r) *= inv;
    b(r) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || A(i, c) == Rational(0)) continue;
      Rational f = A(i, c);
      A.row(i) -= f * A.row(r);
      b(i) -= f * b(r);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (Eigen::Index i = r; i < rows; ++i)
    if (b(i) != Rational(0)) throw InvalidArgument("solve_exact: inconsistent system");
  if (r != cols) throw InvalidArgument("solve_exact: solution not unique");
  VectorXq x(cols);
  for (Eigen::Index i = 0; i < r; ++i) x(pivot_col[i]) = b(i);
  return x;
}

}  // namespace orbital
