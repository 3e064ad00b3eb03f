#include "degen/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace degen {

namespace {

std::vector<Int> trim_leading_zeros(std::vector<Int> c) {
  size_t i = 0;
  while (i < c.size() && c[i] == 0) ++i;
  c.erase(c.begin(), c.begin() + static_cast<long>(i));
  return c;
}

const Int kZero = 0;

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs_desc)
    : c_(trim_leading_zeros(std::move(coeffs_desc))) {}

IntPoly::IntPoly(std::initializer_list<long> coeffs_desc) {
  std::vector<Int> c;
  c.reserve(coeffs_desc.size());
  for (long v : coeffs_desc) c.emplace_back(v);
  c_ = trim_leading_zeros(std::move(c));
}

IntPoly IntPoly::constant(Int c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(Int c, int power) {
  if (power < 0) throw std::invalid_argument("monomial: negative power");
  IntPoly p;
  if (c != 0) {
    p.c_.resize(static_cast<size_t>(power) + 1, Int(0));
    p.c_[0] = std::move(c);
  }
  return p;
}

std::optional<int> IntPoly::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<int>(c_.size()) - 1;
}

int IntPoly::deg() const {
  if (c_.empty()) throw std::invalid_argument("deg: zero polynomial");
  return static_cast<int>(c_.size()) - 1;
}

const Int& IntPoly::leading() const {
  if (c_.empty()) throw std::invalid_argument("leading: zero polynomial");
  return c_.front();
}

const Int& IntPoly::constant_term() const {
  return c_.empty() ? kZero : c_.back();
}

const Int& IntPoly::coeff_of_power(int j) const {
  if (c_.empty() || j < 0 || j >= static_cast<int>(c_.size())) return kZero;
  return c_[c_.size() - 1 - static_cast<size_t>(j)];
}

Int IntPoly::height() const {
  Int h = 0;
  for (const Int& a : c_) {
    Int m = abs(a);
    if (m > h) h = m;
  }
  return h;
}

Int IntPoly::eval(const Int& t) const {
  Int acc = 0;
  for (const Int& a : c_) acc = acc * t + a;
  return acc;
}

IntPoly add(const IntPoly& f, const IntPoly& g) {
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  size_t n = std::max(a.size(), b.size());
  std::vector<Int> out(n, Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[n - a.size() + i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[n - b.size() + i] += b[i];
  return IntPoly(std::move(out));
}

IntPoly sub(const IntPoly& f, const IntPoly& g) { return add(f, negate(g)); }

IntPoly negate(const IntPoly& f) {
  std::vector<Int> out(f.coeffs().begin(), f.coeffs().end());
  for (Int& a : out) a = -a;
  return IntPoly(std::move(out));
}

IntPoly mul(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return IntPoly();
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return IntPoly(std::move(out));
}

IntPoly mul_scalar(const IntPoly& f, const Int& c) {
  if (c == 0) return IntPoly();
  std::vector<Int> out(f.coeffs().begin(), f.coeffs().end());
  for (Int& a : out) a *= c;
  return IntPoly(std::move(out));
}

IntPoly derivative(const IntPoly& f) {
  if (f.is_zero() || f.deg() == 0) return IntPoly();
  int d = f.deg();
  std::vector<Int> out(static_cast<size_t>(d), Int(0));
  for (int i = 0; i < d; ++i) out[static_cast<size_t>(i)] = f.coeffs()[static_cast<size_t>(i)] * (d - i);
  return IntPoly(std::move(out));
}

Int content(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("content: zero polynomial");
  Int g = 0;
  for (const Int& a : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  Int c = content(f);
  if (f.leading() < 0) c = -c;
  std::vector<Int> out(f.coeffs().begin(), f.coeffs().end());
  for (Int& a : out) a /= c;
  return IntPoly(std::move(out));
}

namespace {

// In-place pseudo-remainder: replaces u by prem(u, v), deg v >= 0, v nonzero.
// Coefficient vectors are descending.
std::vector<Int> pseudo_remainder(std::vector<Int> u, const std::vector<Int>& v) {
  const Int& lv = v.front();
  while (u.size() >= v.size()) {
    Int lu = u.front();
    for (Int& a : u) a *= lv;
    // subtract lu * v * X^(deg u - deg v)
    for (size_t i = 0; i < v.size(); ++i) u[i] -= lu * v[i];
    // leading entry is now exactly zero
    size_t i = 0;
    while (i < u.size() && u[i] == 0) ++i;
    u.erase(u.begin(), u.begin() + static_cast<long>(i));
    if (u.empty()) break;
  }
  return u;
}

}  // namespace

IntPoly gcd_z(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() && g.is_zero())
    throw std::invalid_argument("gcd_z: both polynomials are zero");
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);

  IntPoly u = primitive_part(f);
  IntPoly v = primitive_part(g);
  if (u.deg() < v.deg()) std::swap(u, v);

  std::vector<Int> a(u.coeffs().begin(), u.coeffs().end());
  std::vector<Int> b(v.coeffs().begin(), v.coeffs().end());
  while (true) {
    std::vector<Int> r = pseudo_remainder(a, b);
    if (r.empty()) return primitive_part(IntPoly(std::move(b)));
    IntPoly rp = primitive_part(IntPoly(std::move(r)));
    a = std::move(b);
    b.assign(rp.coeffs().begin(), rp.coeffs().end());
  }
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (f.deg() == 0) return IntPoly::constant(1);
  IntPoly g = gcd_z(f, derivative(f));
  return primitive_part(divide_exact(primitive_part(f), g));
}

StripResult strip_zero_roots(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("strip_zero_roots: zero polynomial");
  const auto& c = f.coeffs();
  size_t end = c.size();
  while (end > 0 && c[end - 1] == 0) --end;
  int v = static_cast<int>(c.size() - end);
  return {v, IntPoly(std::vector<Int>(c.begin(), c.begin() + static_cast<long>(end)))};
}

IntPoly compose_power(const IntPoly& g, int ell) {
  if (g.is_zero()) throw std::invalid_argument("compose_power: zero polynomial");
  if (ell < 1) throw std::invalid_argument("compose_power: ell must be >= 1");
  if (ell == 1 || g.deg() == 0) return g;
  int d = g.deg();
  std::vector<Int> out(static_cast<size_t>(d) * ell + 1, Int(0));
  for (int j = 0; j <= d; ++j)
    out[static_cast<size_t>(d - j) * ell] = g.coeff_of_power(j);
  return IntPoly(std::move(out));
}

PowerDecomposition decompose_power(const IntPoly& f) {
  if (f.is_zero() || f.deg() == 0)
    throw std::invalid_argument("decompose_power: need a nonconstant polynomial");
  int m = 0;
  for (int j = 1; j <= f.deg(); ++j)
    if (f.coeff_of_power(j) != 0) m = std::gcd(m, j);
  if (m == 0) m = 1;  // cannot happen for nonconstant f, kept for safety
  std::vector<Int> base;
  for (int j = f.deg(); j >= 0; j -= m) base.push_back(f.coeff_of_power(j));
  return {m, IntPoly(std::move(base))};
}

std::optional<IntPoly> try_divide_exact(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("divide: division by zero polynomial");
  if (f.is_zero()) return IntPoly();
  if (f.deg() < g.deg()) return std::nullopt;

  // Long division over Q, descending coefficients; exact iff the remainder
  // vanishes and every quotient coefficient is an integer.
  std::vector<Rat> rem(f.coeffs().begin(), f.coeffs().end());
  std::vector<Rat> quot(static_cast<size_t>(f.deg() - g.deg()) + 1);
  const auto& b = g.coeffs();
  for (size_t qi = 0; qi < quot.size(); ++qi) {
    Rat q = rem[qi] / Rat(b[0]);
    quot[qi] = q;
    if (q != 0)
      for (size_t j = 0; j < b.size(); ++j) rem[qi + j] -= q * Rat(b[j]);
  }
  for (size_t i = quot.size(); i < rem.size(); ++i)
    if (rem[i] != 0) return std::nullopt;
  std::vector<Int> out;
  out.reserve(quot.size());
  for (const Rat& q : quot) {
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  return IntPoly(std::move(out));
}

IntPoly divide_exact(const IntPoly& f, const IntPoly& g) {
  auto q = try_divide_exact(f, g);
  if (!q) throw std::domain_error("divide_exact: not an exact division");
  return *q;
}

int multiplicity_of_factor(const IntPoly& f, const IntPoly& p) {
  if (f.is_zero() || p.is_zero() || p.deg() < 1)
    throw std::invalid_argument("multiplicity_of_factor: bad arguments");
  int e = 0;
  IntPoly cur = f;
  while (true) {
    auto q = try_divide_exact(cur, p);
    if (!q) return e;
    cur = std::move(*q);
    ++e;
  }
}

IntPoly substitute_neg_x(const IntPoly& f) {
  if (f.is_zero()) return f;
  int d = f.deg();
  std::vector<Int> out(f.coeffs().begin(), f.coeffs().end());
  for (int i = 0; i <= d; ++i)
    if ((d - i) % 2 != 0) out[static_cast<size_t>(i)] = -out[static_cast<size_t>(i)];
  return IntPoly(std::move(out));
}

IntPoly scale_argument(const IntPoly& f, const Int& c) {
  if (c == 0) throw std::invalid_argument("scale_argument: c must be nonzero");
  if (f.is_zero()) return f;
  int d = f.deg();
  std::vector<Int> out(f.coeffs().begin(), f.coeffs().end());
  Int pw = 1;
  for (int j = 1; j <= d; ++j) {
    pw *= c;
    out[static_cast<size_t>(d - j)] *= pw;  // coefficient of X^j
  }
  return IntPoly(std::move(out));
}

IntPoly reverse_poly(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("reverse_poly: zero polynomial");
  if (f.constant_term() == 0)
    throw std::invalid_argument("reverse_poly: constant term must be nonzero");
  std::vector<Int> out(f.coeffs().rbegin(), f.coeffs().rend());
  return IntPoly(std::move(out));
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  int d = f.deg();
  for (int j = d; j >= 0; --j) {
    const Int& a = f.coeff_of_power(j);
    if (a == 0) continue;
    Int m = abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (j == 0) {
      os << m.get_str();
    } else {
      if (m != 1) os << m.get_str() << "*";
      os << "X";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) {
  return os << to_string(f);
}

}  // namespace degen
