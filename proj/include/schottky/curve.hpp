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

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "schottky/circle.hpp"
#include "schottky/group.hpp"
#include "schottky/moebius.hpp"

namespace schottky {

enum class PieceKind { Line, Arc };

/// Straight segment or circular arc between two points. Arcs run from
/// `start` to `end` around `center` through the signed angle `sweep`.
struct Piece {
  PieceKind kind = PieceKind::Line;
  Complex start;
  Complex end;
  Complex center;
  double radius = 0.0;
  /// Positive for counterclockwise arcs; zero for segments.
  double sweep = 0.0;

  static Piece line(Complex a, Complex b);
  static Piece arc(Complex center, double radius, Complex a, Complex b, bool ccw);
  /// Arc from a through m to b; a segment when the three points are
  /// (nearly) collinear.
  static Piece through(Complex a, Complex m, Complex b);

  bool is_arc() const { return kind == PieceKind::Arc; }
  bool ccw() const { return sweep > 0.0; }
  /// True when z lies on the piece within `tol`.
  bool contains(Complex z, double tol) const;
  double length() const;
  /// Point at fraction t of the arc length.
  Complex point_at(double t) const;
  /// Unit tangent in the direction of travel at fraction t.
  Complex tangent_at(double t) const;
  Piece reversed() const;
  double distance_to(Complex z) const;
  /// Axis-aligned bounding box {xmin, ymin, xmax, ymax}.
  std::array<double, 4> bounds() const;
};

/// Moebius image of a piece, built from the images of its endpoints and
/// midpoint. The piece must avoid the pole of f.
Piece map_piece(const MoebiusMap& f, const Piece& p);

/// Intersection points of two pieces (none for disjoint pieces; the
/// overlap endpoints when they share a line or circle).
std::vector<Complex> intersect(const Piece& a, const Piece& b);

/// Closed chain of pieces; piece i ends where piece i+1 starts.
class PolyCurve {
 public:
  PolyCurve() = default;
  /// Throws std::invalid_argument unless the pieces close up within
  /// `closure_tol` (relative to the curve size) and give >= 3 vertices.
  explicit PolyCurve(std::vector<Piece> pieces, double closure_tol = 1e-9);

  static PolyCurve polygon(const std::vector<Complex>& vertices);
  static PolyCurve circle(Complex center, double radius, int arcs = 4);

  const std::vector<Piece>& pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  std::vector<Complex> vertices() const;
  double length() const { return length_; }
  /// Bounding boxes of the pieces, same order.
  const std::vector<std::array<double, 4>>& bounds() const { return bounds_; }

  /// Samples every piece at spacing <= resolution (piece endpoints
  /// included once); the result depends only on this curve.
  std::vector<Complex> sample(double resolution) const;
  /// `count` points equally spaced in arc length.
  std::vector<Complex> sample_uniform(int count) const;
  double distance_to(Complex z) const;
  PolyCurve mapped(const MoebiusMap& f) const;
  PolyCurve reversed() const;

  /// Set when a non-linear source curve was approximated by pieces.
  bool approximated = false;

 private:
  std::vector<Piece> pieces_;
  std::vector<std::array<double, 4>> bounds_;
  double length_ = 0.0;
};

/// Curve together with a point of the anchor set that it passes through.
struct CurveSpaceElement {
  PolyCurve curve;
  Complex witness;
};

/// Throws std::invalid_argument unless the witness lies on the curve to 1e-9.
CurveSpaceElement make_curve_space_element(PolyCurve curve, Complex witness);

// ---------------------------------------------------------------------------
// Generating curves and quasi-circles

/// Open arc outside every pairing disk joining a point of circle `from` to a
/// point of circle `to`.
struct Strand {
  int from = 0;
  int to = 0;
  std::vector<Piece> pieces;
  Complex start() const { return pieces.front().start; }
  Complex end() const { return pieces.back().end; }
};

/// Strands visiting each of the 2g pairing circles once in cyclic order:
/// strand k ends on the circle where strand k+1 starts. The two points used
/// on circle i + g are the images under generator i of those on circle i.
struct GeneratingCurve {
  std::vector<Strand> strands;
  CirclePairing pairing;

  double length() const;
  std::size_t piece_count() const;
};

/// Matched radial construction: each strand leaves its circle along a
/// radius, crosses the domain in a straight segment and enters the next
/// circle along a radius, so it meets both circles orthogonally. Throws
/// DisjointnessError when no admissible crossing points are found.
GeneratingCurve default_generating_curve(const SchottkyGroup& group);

/// Checks endpoint placement, matching, the cyclic visiting order, that the
/// strands stay outside the closed disks and are pairwise disjoint. Throws
/// std::invalid_argument or DisjointnessError.
void validate_generating_curve(const SchottkyGroup& group, const GeneratingCurve& zeta);

/// Truncated quasi-circle: the images w(zeta) for reduced words |w| <= k in
/// cyclic order, closed by straight chords through the depth-k disks.
/// Throws OrderingError when a refinement step cannot be oriented.
PolyCurve build_quasicircle(const SchottkyGroup& group, const GeneratingCurve& zeta, int depth);

/// Exact piece count of build_quasicircle.
std::uint64_t quasicircle_piece_count(const GeneratingCurve& zeta, int rank, int depth);

struct LengthEstimate {
  /// length(zeta) * (1 + partial Poincare sum at s = 1 to depth k); the 1
  /// accounts for the identity word.
  double estimate = 0.0;
  /// Measured length of the truncated quasi-circle.
  double direct = 0.0;
};

LengthEstimate quasicircle_length_estimate(const SchottkyGroup& group, const GeneratingCurve& zeta,
                                           int depth, double s = 1.0);

/// True iff no two non-adjacent pieces meet and adjacent pieces share only
/// their common endpoint.
bool is_simple(const PolyCurve& curve);

/// Images of 256 curve samples under every generator, and the depth-4
/// limit points, all lie within tol of the curve.
bool is_invariant(const SchottkyGroup& group, const PolyCurve& curve, double tol);

struct QuasicircleFlags {
  bool linear = false;
  bool right_angled = false;
  bool transverse = false;
  bool parallel = false;
};

QuasicircleFlags classify_quasicircle(const SchottkyGroup& group, const PolyCurve& curve,
                                      const CirclePairing& pairing);

// ---------------------------------------------------------------------------
// Frechet distance on closed curves

struct FrechetOptions {
  /// Sample spacing; 0 picks length / samples_per_curve for each curve.
  double resolution = 0.0;
  int samples_per_curve = 256;
  /// Adds |length(a) - length(b)|.
  bool length_term = true;
  /// Also match against the reversed second curve.
  bool allow_reversal = true;
};

/// Discrete Frechet distance over cyclic couplings of the sampled curves,
/// plus the length difference unless disabled.
double frechet_distance(const PolyCurve& a, const PolyCurve& b, const FrechetOptions& opts = {});

/// Discrete Frechet distance over cyclic couplings of two closed point
/// sequences (each closes back to its first point).
double cyclic_discrete_frechet(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// Classical discrete Frechet distance between open sequences.
double discrete_frechet(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace schottky
