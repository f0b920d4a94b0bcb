#include "pancake/quadval.hpp"

#include <cassert>
#include <cmath>

namespace pancake {

Quad::Quad(Rat a_, Rat b_, Rat d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
  assert(sgn(d) >= 0);
  if (sgn(b) == 0 || sgn(d) == 0) {
    b = 0;
    d = 0;
  }
}

double Quad::approx() const {
  if (is_rational()) return to_double(a);
  return to_double(a) + to_double(b) * std::sqrt(to_double(d));
}

Quad add_same_field(const Quad& x, const Quad& y) {
  if (x.is_rational()) return y + x.a;
  if (y.is_rational()) return x + y.a;
  assert(x.d == y.d);
  return {x.a + y.a, x.b + y.b, x.d};
}

Quad mul_same_field(const Quad& x, const Quad& y) {
  if (x.is_rational()) return x.a * y;
  if (y.is_rational()) return y.a * x;
  assert(x.d == y.d);
  // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) s
  return {x.a * y.a + x.b * y.b * x.d, x.a * y.b + y.a * x.b, x.d};
}

int sign(const Quad& x) {
  int sa = sgn(x.a);
  if (x.is_rational()) return sa;
  int sb = sgn(x.b);  // nonzero; d > 0
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b| sqrt(d) decides, compare squares.
  int t = sgn(x.a * x.a - x.b * x.b * x.d);
  if (t == 0) return 0;
  return t > 0 ? sa : sb;
}

int compare(const Quad& x, const Quad& y) {
  if (x.is_rational() && y.is_rational()) return cmp(x.a, y.a);
  if (y.is_rational()) return sign(x - y.a);
  if (x.is_rational()) return -sign(y - x.a);
  if (x.d == y.d) return sign(Quad{x.a - y.a, x.b - y.b, x.d});

  // sign( (x.a - y.a + x.b sqrt(x.d)) - y.b sqrt(y.d) ), two distinct radicals.
  Quad lhs{x.a - y.a, x.b, x.d};
  int sl = sign(lhs);
  int sr = sgn(y.b);
  if (sl != sr) {
    if (sl == 0) return -sr;
    if (sr == 0) return sl;
    return sl;  // signs differ and are nonzero: lhs - rhs takes lhs's sign
  }
  if (sl == 0) return 0;
  // Same nonzero sign: compare squares, lhs^2 - rhs^2 stays in lhs's field.
  Quad diff{lhs.a * lhs.a + lhs.b * lhs.b * lhs.d - y.b * y.b * y.d,
            2 * lhs.a * lhs.b, lhs.d};
  int t = sign(diff);
  return sl > 0 ? t : -t;
}

RatInterval enclose(const Quad& x, const Rat& eps) {
  assert(sgn(eps) > 0);
  if (x.is_rational()) return {x.a, x.a};

  // sqrt(d) = sqrt(num*den) / den; bracket sqrt(num*den) between consecutive
  // integers at scale 2^k with 1/(den*2^k) * |b| <= eps.
  const mpz_class num = x.d.get_num(), den = x.d.get_den();
  Rat need = rat_abs(x.b) / (eps * den);  // require 2^k >= need
  mpz_class ceil_need = need.get_num() / need.get_den() + 1;
  unsigned long k = mpz_sizeinbase(ceil_need.get_mpz_t(), 2);

  mpz_class m = num * den;
  mpz_class scaled = m << (2 * k);
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());

  mpz_class pow2k = mpz_class(1) << k;
  Rat lo_r(s, den * pow2k), hi_r(s + 1, den * pow2k);
  lo_r.canonicalize();
  hi_r.canonicalize();

  Rat lo, hi;
  if (sgn(x.b) > 0) {
    lo = x.a + x.b * lo_r;
    hi = x.a + x.b * hi_r;
  } else {
    lo = x.a + x.b * hi_r;
    hi = x.a + x.b * lo_r;
  }
  return {lo, hi};
}

int sign_linear_at(const Rat& ux, const Rat& uy, const Rat& w, const QPt& p) {
  Quad vx = ux * p.x, vy = uy * p.y;
  return sign(add_same_field(add_same_field(vx, vy), Quad(w)));
}

int sign_circle_at(const Pt& c, const Rat& r2, const QPt& p) {
  Quad dx = p.x - c.x, dy = p.y - c.y;
  Quad s = add_same_field(mul_same_field(dx, dx), mul_same_field(dy, dy));
  return sign(s - r2);
}

}  // namespace pancake
