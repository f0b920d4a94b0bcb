#pragma once

#include "pancake/scalar.hpp"

namespace pancake {

struct Pt {
  Rat x, y;

  Pt() : x(0), y(0) {}
  Pt(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

  friend Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
  friend Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
  friend Pt operator*(const Rat& s, const Pt& a) { return {s * a.x, s * a.y}; }
  Pt operator-() const { return {-x, -y}; }
  friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
};

inline Rat dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }
inline Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Rat norm2(const Pt& a) { return a.x * a.x + a.y * a.y; }
inline Rat dist2(const Pt& a, const Pt& b) { return norm2(a - b); }

// Counter-clockwise quarter turn.
inline Pt perp(const Pt& a) { return {-a.y, a.x}; }

inline bool is_zero(const Pt& a) { return sgn(a.x) == 0 && sgn(a.y) == 0; }

// Sign of the signed area of triangle pqr: +1 counter-clockwise, -1 clockwise,
// 0 collinear.
inline int orientation(const Pt& p, const Pt& q, const Pt& r) {
  return sgn(cross(q - p, r - p));
}

// Strict total order for use as a map key.
struct PtLess {
  bool operator()(const Pt& a, const Pt& b) const {
    int c = cmp(a.x, b.x);
    if (c != 0) return c < 0;
    return cmp(a.y, b.y) < 0;
  }
};

}  // namespace pancake
