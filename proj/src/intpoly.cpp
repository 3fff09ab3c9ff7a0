#include "matchkit/intpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace matchkit {

IntPoly poly_add(const IntPoly& a, const IntPoly& b) {
  IntPoly out(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  poly_trim(out);
  return out;
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly out(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

void poly_trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer poly_eval(const IntPoly& p, const Integer& x) {
  Integer acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly to_rational(const IntPoly& p) {
  RatPoly out;
  out.reserve(p.size());
  for (const auto& c : p) out.emplace_back(c);
  return out;
}

void poly_trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int poly_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly poly_derivative(const RatPoly& p) {
  if (p.size() <= 1) return {};
  RatPoly out(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * Rational(static_cast<int>(i));
  poly_trim(out);
  return out;
}

RatPoly poly_monic(const RatPoly& p) {
  if (p.empty()) return p;
  RatPoly out(p);
  const Rational lead = out.back();
  for (auto& c : out) c /= lead;
  return out;
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  poly_trim(out);
  return out;
}

namespace {

// Division with remainder; quotient returned, remainder left in a.
RatPoly divmod(RatPoly& a, const RatPoly& b) {
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  RatPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rational coeff = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    q[shift] = coeff;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= coeff * b[i];
    poly_trim(a);  // leading term cancels exactly, so the degree drops
  }
  poly_trim(q);
  return q;
}

}  // namespace

RatPoly poly_div_exact(const RatPoly& a, const RatPoly& b) {
  RatPoly rem(a);
  RatPoly q = divmod(rem, b);
  if (!rem.empty()) throw std::invalid_argument("polynomial division is not exact");
  return q;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    divmod(a, b);
    std::swap(a, b);
  }
  return a.empty() ? a : poly_monic(a);
}

std::vector<SquareFreeFactor> square_free_decomposition(const RatPoly& p) {
  RatPoly f = poly_monic(p);
  poly_trim(f);
  std::vector<SquareFreeFactor> out;
  if (poly_degree(f) < 1) return out;
  RatPoly fp = poly_derivative(f);
  RatPoly a = poly_gcd(f, fp);
  RatPoly b = poly_div_exact(f, a);
  RatPoly c = poly_div_exact(fp, a);
  RatPoly d = c;
  {
    RatPoly bp = poly_derivative(b);
    d.resize(std::max(d.size(), bp.size()), Rational(0));
    for (size_t i = 0; i < bp.size(); ++i) d[i] -= bp[i];
    poly_trim(d);
  }
  int mult = 1;
  while (poly_degree(b) > 0) {
    const RatPoly factor = poly_gcd(b, d);
    if (poly_degree(factor) > 0) out.push_back({factor, mult});
    b = poly_div_exact(b, factor);
    RatPoly next_d = poly_div_exact(d, factor);
    const RatPoly bp = poly_derivative(b);
    next_d.resize(std::max(next_d.size(), bp.size()), Rational(0));
    for (size_t i = 0; i < bp.size(); ++i) next_d[i] -= bp[i];
    poly_trim(next_d);
    d = std::move(next_d);
    ++mult;
  }
  return out;
}

double poly_eval(const RatPoly& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

long double poly_eval(const RatPoly& p, long double x) {
  long double acc = 0.0L;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + static_cast<long double>(to_double(*it));
  return acc;
}

}  // namespace matchkit
