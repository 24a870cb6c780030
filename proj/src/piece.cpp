// Copyright 2026 The schottky-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "schottky/curve.hpp"
#include "schottky/errors.hpp"

namespace schottky {

namespace {

double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

// Signed angle from u to v in (-pi, pi].
double turn(Complex u, Complex v) { return std::atan2(cross(u, v), dot(u, v)); }

// Position of direction u along an arc, measured from its start in the
// direction of travel, in [0, 2pi).
double arc_param(const Piece& p, Complex u) {
  double phi = turn(p.start - p.center, u);
  if (p.sweep < 0.0) phi = -phi;
  if (phi < 0.0) phi += 2.0 * kPi;
  return phi;
}

bool arc_contains_direction(const Piece& p, Complex u, double slack) {
  const double t = arc_param(p, u);
  const double span = std::abs(p.sweep);
  return t <= span + slack || t >= 2.0 * kPi - slack;
}

double angular_slack(const Piece& p) { return 1e-9 * std::abs(p.sweep) + 1e-13; }

}  // namespace

Piece Piece::line(Complex a, Complex b) {
  Piece p;
  p.kind = PieceKind::Line;
  p.start = a;
  p.end = b;
  return p;
}

Piece Piece::arc(Complex center, double radius, Complex a, Complex b, bool ccw) {
  if (!(radius > 0.0)) throw std::invalid_argument("arc radius must be positive");
  Piece p;
  p.kind = PieceKind::Arc;
  p.start = a;
  p.end = b;
  p.center = center;
  p.radius = radius;
  double phi = turn(a - center, b - center);
  if (ccw && phi <= 0.0) phi += 2.0 * kPi;
  if (!ccw && phi >= 0.0) phi -= 2.0 * kPi;
  p.sweep = phi;
  return p;
}

Piece Piece::through(Complex a, Complex m, Complex b) {
  const Complex chord = b - a;
  const double len = std::abs(chord);
  if (len == 0.0) throw std::invalid_argument("piece endpoints coincide");
  const double sagitta = std::abs(cross(chord, m - a)) / len;
  if (sagitta < 1e-9 * len) return line(a, b);
  const auto circle = circle_through(a, m, b);
  if (!circle) return line(a, b);
  Piece p;
  p.kind = PieceKind::Arc;
  p.start = a;
  p.end = b;
  p.center = circle->center;
  p.radius = circle->radius;
  // Two half turns, each below pi, keep tiny arcs robust.
  p.sweep = turn(a - p.center, m - p.center) + turn(m - p.center, b - p.center);
  return p;
}

double Piece::length() const { return is_arc() ? radius * std::abs(sweep) : std::abs(end - start); }

Complex Piece::point_at(double t) const {
  if (t <= 0.0) return start;
  if (t >= 1.0) return end;
  if (!is_arc()) return start + t * (end - start);
  return center + (start - center) * std::polar(1.0, t * sweep);
}

Complex Piece::tangent_at(double t) const {
  if (!is_arc()) return (end - start) / std::abs(end - start);
  const Complex radial = (point_at(t) - center) / radius;
  return radial * Complex(0.0, sweep > 0.0 ? 1.0 : -1.0);
}

Piece Piece::reversed() const {
  Piece p = *this;
  std::swap(p.start, p.end);
  p.sweep = -sweep;
  return p;
}

double Piece::distance_to(Complex z) const {
  if (!is_arc()) {
    const Complex r = end - start;
    const double t = std::clamp(dot(z - start, r) / std::norm(r), 0.0, 1.0);
    return std::abs(z - (start + t * r));
  }
  const Complex u = z - center;
  if (std::abs(u) > 0.0 && arc_contains_direction(*this, u, 0.0)) return std::abs(std::abs(u) - radius);
  if (std::abs(u) == 0.0) return radius;
  return std::min(std::abs(z - start), std::abs(z - end));
}

bool Piece::contains(Complex z, double tol) const { return distance_to(z) <= tol; }

std::array<double, 4> Piece::bounds() const {
  std::array<double, 4> b{std::min(start.real(), end.real()), std::min(start.imag(), end.imag()),
                          std::max(start.real(), end.real()), std::max(start.imag(), end.imag())};
  if (!is_arc()) return b;
  for (int k = 0; k < 4; ++k) {
    const Complex dir = std::polar(1.0, k * kPi / 2.0);
    if (arc_contains_direction(*this, dir, 0.0)) {
      const Complex q = center + radius * dir;
      b[0] = std::min(b[0], q.real());
      b[1] = std::min(b[1], q.imag());
      b[2] = std::max(b[2], q.real());
      b[3] = std::max(b[3], q.imag());
    }
  }
  return b;
}

Piece map_piece(const MoebiusMap& f, const Piece& p) {
  const SpherePoint a = f(p.start), m = f(p.point_at(0.5)), b = f(p.end);
  if (a.is_infinite() || m.is_infinite() || b.is_infinite())
    throw DegenerateImage("piece passes through the pole");
  return Piece::through(a.value(), m.value(), b.value());
}

// ---------------------------------------------------------------------------
// Intersections

namespace {

bool on_arc(const Piece& arc, Complex z) {
  return arc_contains_direction(arc, z - arc.center, angular_slack(arc));
}

std::vector<Complex> line_line(const Piece& a, const Piece& b) {
  const Complex p = a.start, r = a.end - a.start;
  const Complex q = b.start, s = b.end - b.start;
  const double rs = cross(r, s);
  const double scale = std::abs(r) * std::abs(s);
  constexpr double eps = 1e-12;
  if (std::abs(rs) <= 1e-14 * scale) {
    // Parallel: only collinear overlaps matter.
    if (std::abs(cross(q - p, r)) > 1e-12 * std::abs(r) * std::max(std::abs(q - p), std::abs(r))) return {};
    const double rr = std::norm(r);
    double t0 = dot(q - p, r) / rr, t1 = dot(q + s - p, r) / rr;
    if (t0 > t1) std::swap(t0, t1);
    const double lo = std::max(0.0, t0), hi = std::min(1.0, t1);
    if (lo > hi + eps) return {};
    if (hi - lo <= eps) return {p + lo * r};
    return {p + lo * r, p + hi * r};
  }
  const double t = cross(q - p, s) / rs;
  const double u = cross(q - p, r) / rs;
  if (t < -eps || t > 1.0 + eps || u < -eps || u > 1.0 + eps) return {};
  return {p + std::clamp(t, 0.0, 1.0) * r};
}

std::vector<Complex> line_arc(const Piece& seg, const Piece& arc) {
  const Complex r = seg.end - seg.start;
  const double rr = std::norm(r);
  const Complex f = seg.start - arc.center;
  const double tstar = -dot(f, r) / rr;
  const Complex foot = f + tstar * r;
  const double R = arc.radius;
  double disc = R * R - std::norm(foot);
  if (disc < -1e-12 * R * R) return {};
  disc = std::max(disc, 0.0);
  const double dt = std::sqrt(disc / rr);
  std::vector<Complex> out;
  constexpr double eps = 1e-12;
  for (double t : {tstar - dt, tstar + dt}) {
    if (t < -eps || t > 1.0 + eps) continue;
    const Complex z = seg.start + std::clamp(t, 0.0, 1.0) * r;
    if (on_arc(arc, z)) out.push_back(z);
    if (dt == 0.0) break;
  }
  return out;
}

std::vector<Complex> arc_arc(const Piece& a, const Piece& b) {
  const double d = std::abs(b.center - a.center);
  const double scale = std::max(a.radius, b.radius);
  if (d <= 1e-12 * scale && std::abs(a.radius - b.radius) <= 1e-12 * scale) {
    std::vector<Complex> out;
    for (Complex z : {b.start, b.end})
      if (on_arc(a, z)) out.push_back(z);
    for (Complex z : {a.start, a.end})
      if (on_arc(b, z)) out.push_back(z);
    return out;
  }
  if (d == 0.0) return {};
  const double R1 = a.radius, R2 = b.radius;
  const double tol = 1e-12 * scale;
  if (d > R1 + R2 + tol || d < std::abs(R1 - R2) - tol) return {};
  const Complex u = (b.center - a.center) / d;
  const double along = (d * d + R1 * R1 - R2 * R2) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, R1 * R1 - along * along));
  std::vector<Complex> out;
  for (double sgn : {-1.0, 1.0}) {
    const Complex z = a.center + along * u + sgn * h * Complex(0.0, 1.0) * u;
    if (on_arc(a, z) && on_arc(b, z)) out.push_back(z);
    if (h == 0.0) break;
  }
  return out;
}

}  // namespace

std::vector<Complex> intersect(const Piece& a, const Piece& b) {
  if (!a.is_arc() && !b.is_arc()) return line_line(a, b);
  if (!a.is_arc()) return line_arc(a, b);
  if (!b.is_arc()) return line_arc(b, a);
  return arc_arc(a, b);
}

// ---------------------------------------------------------------------------
// PolyCurve

PolyCurve::PolyCurve(std::vector<Piece> pieces, double closure_tol) : pieces_(std::move(pieces)) {
  if (pieces_.size() < 3) throw std::invalid_argument("a closed curve needs at least three pieces");
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const auto& p : pieces_) {
    xmin = std::min(xmin, p.start.real());
    xmax = std::max(xmax, p.start.real());
    ymin = std::min(ymin, p.start.imag());
    ymax = std::max(ymax, p.start.imag());
  }
  const double scale = std::max({xmax - xmin, ymax - ymin, 1e-300});
  const std::size_t n = pieces_.size();
  for (std::size_t i = 0; i < n; ++i) {
    Piece& next = pieces_[(i + 1) % n];
    const Complex end = pieces_[i].end;
    if (std::abs(end - next.start) > closure_tol * scale)
      throw std::invalid_argument("piece " + std::to_string(i) + " does not end where piece " +
                                  std::to_string((i + 1) % n) + " starts");
    next.start = end;
  }
  bounds_.reserve(n);
  for (const auto& p : pieces_) {
    if (p.length() == 0.0) throw std::invalid_argument("zero-length piece");
    length_ += p.length();
    bounds_.push_back(p.bounds());
  }
}

PolyCurve PolyCurve::polygon(const std::vector<Complex>& vertices) {
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    pieces.push_back(Piece::line(vertices[i], vertices[(i + 1) % vertices.size()]));
  return PolyCurve(std::move(pieces));
}

PolyCurve PolyCurve::circle(Complex center, double radius, int arcs) {
  if (arcs < 3) throw std::invalid_argument("a circle needs at least three arcs");
  std::vector<Piece> pieces;
  for (int k = 0; k < arcs; ++k) {
    Piece p;
    p.kind = PieceKind::Arc;
    p.center = center;
    p.radius = radius;
    p.start = center + std::polar(radius, 2.0 * kPi * k / arcs);
    p.end = center + std::polar(radius, 2.0 * kPi * (k + 1) / arcs);
    p.sweep = 2.0 * kPi / arcs;
    pieces.push_back(p);
  }
  return PolyCurve(std::move(pieces));
}

std::vector<Complex> PolyCurve::vertices() const {
  std::vector<Complex> v;
  v.reserve(pieces_.size());
  for (const auto& p : pieces_) v.push_back(p.start);
  return v;
}

std::vector<Complex> PolyCurve::sample(double resolution) const {
  if (!(resolution > 0.0)) throw std::invalid_argument("sample resolution must be positive");
  std::vector<Complex> out;
  for (const auto& p : pieces_) {
    const int n = std::max(1, static_cast<int>(std::ceil(p.length() / resolution)));
    for (int k = 0; k < n; ++k) out.push_back(p.point_at(static_cast<double>(k) / n));
  }
  return out;
}

std::vector<Complex> PolyCurve::sample_uniform(int count) const {
  if (count < 1) throw std::invalid_argument("sample count must be positive");
  std::vector<double> cumulative(pieces_.size() + 1, 0.0);
  for (std::size_t i = 0; i < pieces_.size(); ++i) cumulative[i + 1] = cumulative[i] + pieces_[i].length();
  std::vector<Complex> out;
  out.reserve(count);
  std::size_t piece = 0;
  for (int k = 0; k < count; ++k) {
    const double s = length_ * k / count;
    while (piece + 1 < pieces_.size() && cumulative[piece + 1] <= s) ++piece;
    const double len = pieces_[piece].length();
    out.push_back(pieces_[piece].point_at((s - cumulative[piece]) / len));
  }
  return out;
}

double PolyCurve::distance_to(Complex z) const {
  double best = std::numeric_limits<double>::infinity();
  // A coarse pass first so that the box test prunes most pieces.
  for (std::size_t i = 0; i < pieces_.size(); i += 64) best = std::min(best, pieces_[i].distance_to(z));
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& b = bounds_[i];
    const double dx = std::max({b[0] - z.real(), 0.0, z.real() - b[2]});
    const double dy = std::max({b[1] - z.imag(), 0.0, z.imag() - b[3]});
    if (dx * dx + dy * dy >= best * best) continue;
    best = std::min(best, pieces_[i].distance_to(z));
  }
  return best;
}

PolyCurve PolyCurve::mapped(const MoebiusMap& f) const {
  std::vector<Piece> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) out.push_back(map_piece(f, p));
  PolyCurve c(std::move(out));
  c.approximated = approximated;
  return c;
}

PolyCurve PolyCurve::reversed() const {
  std::vector<Piece> out;
  out.reserve(pieces_.size());
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) out.push_back(it->reversed());
  PolyCurve c(std::move(out));
  c.approximated = approximated;
  return c;
}

CurveSpaceElement make_curve_space_element(PolyCurve curve, Complex witness) {
  if (curve.distance_to(witness) > 1e-9) throw std::invalid_argument("witness does not lie on the curve");
  return {std::move(curve), witness};
}

// ---------------------------------------------------------------------------
// Simplicity

bool is_simple(const PolyCurve& curve) {
  const auto& pieces = curve.pieces();
  const auto& boxes = curve.bounds();
  const std::size_t n = pieces.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return boxes[a][0] < boxes[b][0]; });

  auto adjacent = [&](std::size_t i, std::size_t j) { return (i + 1) % n == j || (j + 1) % n == i; };
  auto clash = [&](std::size_t i, std::size_t j) {
    const auto hits = intersect(pieces[i], pieces[j]);
    if (hits.empty()) return false;
    if (!adjacent(i, j)) return true;
    // Adjacent pieces may meet only at their shared vertex. With two pieces
    // (n = 2 is excluded) exactly one vertex is shared.
    const Complex shared = (i + 1) % n == j ? pieces[i].end : pieces[j].end;
    const double tol = 1e-4 * std::min(pieces[i].length(), pieces[j].length());
    for (Complex z : hits)
      if (std::abs(z - shared) > tol) return true;
    return false;
  };

  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = order[a];
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t j = order[b];
      if (boxes[j][0] > boxes[i][2]) break;
      if (boxes[j][1] > boxes[i][3] || boxes[i][1] > boxes[j][3]) continue;
      if (clash(i, j)) return false;
    }
  }
  return true;
}

}  // namespace schottky
