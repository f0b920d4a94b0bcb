#pragma once

#include "pancake/point.hpp"
#include "pancake/scalar.hpp"

namespace pancake {

// A real number of the form a + b*sqrt(d) with rational a, b and rational
// d >= 0.  Every coordinate and curve parameter this engine produces lives in
// such a quadratic extension: linear-linear intersections are plain rationals
// (b = 0), and any intersection involving a circle is the root of a rational
// quadratic, so both its coordinates share one radicand.  Signs and
// comparisons are decided exactly by the classic repeated-squaring case
// analysis; no floating point is consulted.
struct Quad {
  Rat a, b, d;  // invariant: d >= 0, and b == 0 implies d == 0

  Quad() : a(0), b(0), d(0) {}
  explicit Quad(Rat r) : a(std::move(r)), b(0), d(0) {}
  Quad(Rat a_, Rat b_, Rat d_);  // normalizes b==0 or d==0 to the rational form

  bool is_rational() const { return sgn(b) == 0; }
  const Rat& rational_value() const { return a; }  // requires is_rational()
  double approx() const;

  Quad operator-() const { return {-a, -b, d}; }
  friend Quad operator+(const Quad& x, const Rat& r) { return {x.a + r, x.b, x.d}; }
  friend Quad operator-(const Quad& x, const Rat& r) { return {x.a - r, x.b, x.d}; }
  friend Quad operator*(const Rat& r, const Quad& x) { return {r * x.a, r * x.b, x.d}; }
};

// Sum of two values over the same radicand (or with either side rational).
// The general different-radicand case has no Quad representation; comparisons
// across fields go through compare() below instead.
Quad add_same_field(const Quad& x, const Quad& y);
Quad mul_same_field(const Quad& x, const Quad& y);

int sign(const Quad& x);

// Exact sign of x - y; the radicands may differ.
int compare(const Quad& x, const Quad& y);

inline bool equal(const Quad& x, const Quad& y) { return compare(x, y) == 0; }

struct RatInterval {
  Rat lo, hi;
};

// Encloses x in a rational interval of width <= eps (eps > 0).
RatInterval enclose(const Quad& x, const Rat& eps);

// A point whose coordinates live in one quadratic extension.
struct QPt {
  Quad x, y;

  QPt() = default;
  QPt(Quad x_, Quad y_) : x(std::move(x_)), y(std::move(y_)) {}
  explicit QPt(const Pt& p) : x(Quad(p.x)), y(Quad(p.y)) {}

  bool is_rational() const { return x.is_rational() && y.is_rational(); }
  Pt rational_pt() const { return {x.rational_value(), y.rational_value()}; }
};

inline bool same_point(const QPt& u, const QPt& v) {
  return equal(u.x, v.x) && equal(u.y, v.y);
}

// Exact sign of ux*p.x + uy*p.y + w at a quadratic point (both coordinates
// must share a radicand, which QPt guarantees by construction).
int sign_linear_at(const Rat& ux, const Rat& uy, const Rat& w, const QPt& p);

// Exact sign of |p - c|^2 - r2.
int sign_circle_at(const Pt& c, const Rat& r2, const QPt& p);

}  // namespace pancake
