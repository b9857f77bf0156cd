#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "smoothalg/rational.hpp"

namespace smoothalg {

/// Closed interval with outward-rounded machine endpoints. All arithmetic
/// widens by a few ulps instead of switching rounding modes; the enclosure
/// property is what matters, tightness is not.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains_zero() const { return lo <= 0.0 && hi >= 0.0; }
  bool excludes_zero() const { return lo > 0.0 || hi < 0.0; }
  bool strictly_positive() const { return lo > 0.0; }
  bool strictly_negative() const { return hi < 0.0; }
  bool is_exact_zero() const { return lo == 0.0 && hi == 0.0; }
  double width() const { return hi - lo; }
  double mag() const { return std::max(std::fabs(lo), std::fabs(hi)); }
};

namespace detail {

inline double step_down(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -std::numeric_limits<double>::infinity());
  return x;
}

inline double step_up(double x, int ulps = 1) {
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, std::numeric_limits<double>::infinity());
  return x;
}

}  // namespace detail

inline Interval ival(double lo, double hi) { return Interval{lo, hi}; }

inline Interval ival_widened(double lo, double hi, int ulps) {
  return Interval{detail::step_down(lo, ulps), detail::step_up(hi, ulps)};
}

inline Interval ival_point_outward(double x) { return ival_widened(x, x, 1); }

/// Smallest interval with double endpoints verified (exactly, in rational
/// arithmetic) to contain r.
inline Interval ival_from_rational(const Rational& r) {
  double d = rat_to_double(r);
  if (!std::isfinite(d)) {
    double huge = std::numeric_limits<double>::max();
    return d > 0 ? Interval{huge, std::numeric_limits<double>::infinity()}
                 : Interval{-std::numeric_limits<double>::infinity(), -huge};
  }
  Interval out{d, d};
  if (Rational(out.lo) == r && Rational(out.hi) == r) return out;
  out.lo = detail::step_down(out.lo);
  out.hi = detail::step_up(out.hi);
  while (Rational(out.lo) > r) out.lo = detail::step_down(out.lo);
  while (Rational(out.hi) < r) out.hi = detail::step_up(out.hi);
  return out;
}

inline Interval ival_from_rationals(const Rational& lo, const Rational& hi) {
  return Interval{ival_from_rational(lo).lo, ival_from_rational(hi).hi};
}

inline Interval operator+(const Interval& a, const Interval& b) {
  if ((a.lo == 0 && a.hi == 0)) return b;
  if ((b.lo == 0 && b.hi == 0)) return a;
  return ival_widened(a.lo + b.lo, a.hi + b.hi, 1);
}

inline Interval operator-(const Interval& a) { return Interval{-a.hi, -a.lo}; }

inline Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

inline Interval operator*(const Interval& a, const Interval& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return Interval{0.0, 0.0};
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  if (std::isnan(lo) || std::isnan(hi)) {  // 0 * inf
    return Interval{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
  }
  return ival_widened(lo, hi, 1);
}

inline Interval ival_pow(const Interval& a, unsigned k) {
  if (k == 0) return Interval{1.0, 1.0};
  if (k == 1) return a;
  if (k % 2 == 1) {
    Interval r = a;
    for (unsigned i = 1; i < k; ++i) r = r * a;
    return r;
  }
  // even power: range is [min|x|^k or 0, max|x|^k]
  double m = a.mag();
  double hi = 1.0;
  for (unsigned i = 0; i < k; ++i) hi *= m;
  double lo;
  if (a.contains_zero()) {
    lo = 0.0;
  } else {
    double n = std::min(std::fabs(a.lo), std::fabs(a.hi));
    lo = 1.0;
    for (unsigned i = 0; i < k; ++i) lo *= n;
    lo = detail::step_down(lo, static_cast<int>(k));
  }
  return Interval{lo, detail::step_up(hi, static_cast<int>(k))};
}

/// Reciprocal; requires 0 excluded.
inline Interval ival_recip(const Interval& a) {
  return ival_widened(1.0 / (a.hi == 0 ? -0.0 : a.hi), 1.0 / (a.lo == 0 ? 0.0 : a.lo), 1);
}

inline Interval ival_hull(const Interval& a, const Interval& b) {
  return Interval{std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// libm's exp/sin/cos are within ~1 ulp on this platform; widened by 4.
constexpr int kLibmSlackUlps = 4;

inline Interval ival_exp(const Interval& a) {
  double lo = a.lo == -std::numeric_limits<double>::infinity() ? 0.0
                                                               : detail::step_down(std::exp(a.lo), kLibmSlackUlps);
  double hi = detail::step_up(std::exp(a.hi), kLibmSlackUlps);
  return Interval{std::max(lo, 0.0), hi};
}

namespace detail {

// pi with certified double bounds (M_PI rounds down).
inline Interval pi_interval() {
  return Interval{3.141592653589793116, step_up(3.141592653589793116, 2)};
}

// True iff some multiple k*(pi/2)+offset may land inside [a.lo, a.hi].
inline bool may_contain_extremum(const Interval& a, double offset) {
  Interval half_pi = pi_interval() * Interval{0.5, 0.5};
  double k_lo = std::floor((a.lo - offset) / half_pi.hi) - 1;
  double k_hi = std::ceil((a.hi - offset) / half_pi.lo) + 1;
  for (double k = k_lo; k <= k_hi; ++k) {
    Interval cand = Interval{k, k} * half_pi + Interval{offset, offset};
    if (cand.hi >= a.lo && cand.lo <= a.hi) {
      // candidate is an extremum of sin only for the right parity; caller
      // filters, we stay conservative here
      return true;
    }
  }
  return false;
}

}  // namespace detail

inline Interval ival_sin(const Interval& a) {
  if (!std::isfinite(a.lo) || !std::isfinite(a.hi) || a.width() > 7.0 || a.mag() > 1e15) {
    return Interval{-1.0, 1.0};
  }
  double s_lo = std::sin(a.lo), s_hi = std::sin(a.hi);
  Interval r = ival_widened(std::min(s_lo, s_hi), std::max(s_lo, s_hi), kLibmSlackUlps);
  Interval half_pi = detail::pi_interval() * Interval{0.5, 0.5};
  // scan odd multiples of pi/2 (extrema of sin) possibly inside
  double k_lo = std::floor(a.lo / half_pi.hi) - 1;
  double k_hi = std::ceil(a.hi / half_pi.lo) + 1;
  for (double k = k_lo; k <= k_hi; ++k) {
    Interval cand = Interval{k, k} * half_pi;
    if (cand.hi < a.lo || cand.lo > a.hi) continue;
    long long ki = static_cast<long long>(k);
    if (((ki % 2) + 2) % 2 == 1) {
      long long m = ((ki % 4) + 4) % 4;
      if (m == 1) r.hi = 1.0;
      if (m == 3) r.lo = -1.0;
    }
  }
  r.lo = std::max(r.lo, -1.0);
  r.hi = std::min(r.hi, 1.0);
  return r;
}

inline Interval ival_cos(const Interval& a) {
  Interval half_pi = detail::pi_interval() * Interval{0.5, 0.5};
  return ival_sin(a + half_pi);  // cos x = sin(x + pi/2); slack absorbs the shift error
}

/// bump(t) = exp(-1/(1-t^2)) on |t| < 1, 0 elsewhere. Monotone in u = 1-t^2,
/// so the enclosure never divides by an interval containing zero.
inline Interval ival_bump(const Interval& t) {
  Interval t2 = ival_pow(t, 2);
  Interval u = Interval{1.0, 1.0} - t2;  // 1 - t^2
  bool reaches_outside = t.lo < -1.0 || t.hi > 1.0 || u.lo <= 0.0;
  if (u.hi <= 0.0) return Interval{0.0, 0.0};
  double hi;
  {
    double uh = std::min(u.hi, 1.0);
    hi = detail::step_up(std::exp(-1.0 / uh), kLibmSlackUlps);
  }
  double lo = 0.0;
  if (u.lo > 0.0) lo = std::max(0.0, detail::step_down(std::exp(-1.0 / u.lo), kLibmSlackUlps));
  if (reaches_outside) lo = 0.0;
  return Interval{lo, std::min(hi, detail::step_up(std::exp(-1.0), kLibmSlackUlps))};
}

// global bound: |bump'| = |2t/(1-t^2)^2| e^{-1/(1-t^2)} <= 8 e^{-2} < 1.0827
constexpr double kDBumpBound = 1.0827;

/// Derivative of bump. Exact 0 outside (-1,1); inside, formula when the
/// denominator is safely bounded away from zero, global bound otherwise.
inline Interval ival_dbump(const Interval& t) {
  if (t.lo >= 1.0 || t.hi <= -1.0) return Interval{0.0, 0.0};
  Interval clipped{std::max(t.lo, -1.0), std::min(t.hi, 1.0)};
  Interval u = Interval{1.0, 1.0} - ival_pow(clipped, 2);
  Interval r{-kDBumpBound, kDBumpBound};
  if (u.lo > 1e-6) {
    Interval minus_2t = Interval{-2.0, -2.0} * clipped;
    r = ival_bump(clipped) * minus_2t * ival_recip(ival_pow(u, 2));
  }
  // sign: dbump(t) has the sign of -t
  if (clipped.lo >= 0.0) r.lo = std::max(r.lo, -kDBumpBound), r.hi = std::min(r.hi, 0.0);
  if (clipped.hi <= 0.0) r.lo = std::max(r.lo, 0.0), r.hi = std::min(r.hi, kDBumpBound);
  if (t.lo < -1.0 || t.hi > 1.0) r = ival_hull(r, Interval{0.0, 0.0});
  r.lo = std::max(r.lo, -kDBumpBound);
  r.hi = std::min(r.hi, kDBumpBound);
  return r;
}

inline std::string ival_to_string(const Interval& a) {
  char buf[80];
  std::snprintf(buf, sizeof(buf), "[%.17g, %.17g]", a.lo, a.hi);
  return buf;
}

/// Per-variable closed rational interval; all certification is relative to one.
struct RatInterval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  Interval outward() const { return ival_from_rationals(lo, hi); }
};

struct Box {
  std::vector<RatInterval> dims;

  int dimension() const { return static_cast<int>(dims.size()); }

  static Box uniform(int n, const Rational& lo, const Rational& hi) {
    Box b;
    b.dims.assign(static_cast<size_t>(n), RatInterval{lo, hi});
    return b;
  }

  /// Index of the widest dimension (lowest index wins ties).
  int widest_dim() const {
    int best = 0;
    for (int i = 1; i < dimension(); ++i) {
      if (dims[static_cast<size_t>(i)].width() > dims[static_cast<size_t>(best)].width()) best = i;
    }
    return best;
  }

  std::pair<Box, Box> split(int dim) const {
    Box a = *this, b = *this;
    Rational mid = dims[static_cast<size_t>(dim)].midpoint();
    a.dims[static_cast<size_t>(dim)].hi = mid;
    b.dims[static_cast<size_t>(dim)].lo = mid;
    return {a, b};
  }

  std::vector<Interval> outward() const {
    std::vector<Interval> out;
    out.reserve(dims.size());
    for (const auto& d : dims) out.push_back(d.outward());
    return out;
  }

  bool contains(const std::vector<Rational>& x) const {
    if (static_cast<int>(x.size()) != dimension()) return false;
    for (size_t i = 0; i < x.size(); ++i) {
      if (x[i] < dims[i].lo || x[i] > dims[i].hi) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (size_t i = 0; i < dims.size(); ++i) {
      if (i) s += ";";
      s += rat_to_string(dims[i].lo) + "," + rat_to_string(dims[i].hi);
    }
    return s;
  }
};

}  // namespace smoothalg
