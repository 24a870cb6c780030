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
#include <functional>
#include <stdexcept>

#include "schottky/curve.hpp"
#include "schottky/dimension.hpp"
#include "schottky/errors.hpp"
#include "schottky/parallel.hpp"

namespace schottky {

namespace {

double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }
double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }

Strand radial_strand(const CirclePairing& pairing, int from, Complex p, int to, Complex q,
                     const std::vector<double>& stub) {
  const Circle& a = pairing.circles[from];
  const Circle& b = pairing.circles[to];
  const Complex u = p + stub[from] * (p - a.center) / a.radius;
  const Complex v = q + stub[to] * (q - b.center) / b.radius;
  Strand s;
  s.from = from;
  s.to = to;
  s.pieces = {Piece::line(p, u), Piece::line(u, v), Piece::line(v, q)};
  return s;
}

double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  return a < 0.0 ? a + 2.0 * kPi : a;
}

// Route around the outside of a circle on a concentric ring. `dir` is +1
// for counterclockwise travel. Returns the ring travel from `gap` to `in`
// plus from `out` to `other_gap`, or a negative value when the two ring
// arcs would overlap.
double ring_cost(double gap, double in, double out, double other_gap, int dir) {
  const double a_in = wrap_angle(dir * (in - gap));
  const double a_out = wrap_angle(dir * (out - gap));
  const double a_next = wrap_angle(dir * (other_gap - gap));
  if (!(a_in < a_out && a_out <= a_next)) return -1.0;
  return a_in + (a_next - a_out);
}

struct Ring {
  double prev_gap = 0.0;
  double next_gap = 0.0;
  int dir = 1;
};

// Radial stub, travel along the ring of `from`, straight across the gap
// along the line of centers, travel along the ring of `to`, radial stub.
Strand ring_strand(const CirclePairing& pairing, int from, Complex p, int to, Complex q, const std::vector<double>& stub,
                   const std::vector<Ring>& rings) {
  const Circle& a = pairing.circles[from];
  const Circle& b = pairing.circles[to];
  const double ra = a.radius + stub[from], rb = b.radius + stub[to];
  const Complex u = a.center + ra * (p - a.center) / a.radius;
  const Complex v = b.center + rb * (q - b.center) / b.radius;
  const Complex ga = a.center + std::polar(ra, rings[from].next_gap);
  const Complex gb = b.center + std::polar(rb, rings[to].prev_gap);
  Strand s;
  s.from = from;
  s.to = to;
  auto add = [&](Piece piece) {
    if (piece.length() > 1e-12 * (1.0 + std::abs(piece.start))) s.pieces.push_back(piece);
  };
  add(Piece::line(p, u));
  if (std::abs(u - ga) > 1e-12 * ra) add(Piece::arc(a.center, ra, u, ga, rings[from].dir > 0));
  add(Piece::line(ga, gb));
  if (std::abs(gb - v) > 1e-12 * rb) add(Piece::arc(b.center, rb, gb, v, rings[to].dir > 0));
  add(Piece::line(v, q));
  for (std::size_t i = 0; i + 1 < s.pieces.size(); ++i) s.pieces[i + 1].start = s.pieces[i].end;
  return s;
}

// One element of the depth-0 cycle: a strand piece or the chord through a
// pairing disk.
struct Element {
  bool chord = false;
  int disk = -1;
  Piece piece;
};

std::vector<Element> base_cycle(const GeneratingCurve& zeta) {
  std::vector<Element> out;
  const std::size_t n = zeta.strands.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& p : zeta.strands[k].pieces) out.push_back({false, -1, p});
    const Strand& next = zeta.strands[(k + 1) % n];
    out.push_back({true, zeta.strands[k].to, Piece::line(zeta.strands[k].end(), next.start())});
  }
  return out;
}

PolyCurve depth_zero_curve(const GeneratingCurve& zeta) {
  std::vector<Piece> pieces;
  for (const auto& e : base_cycle(zeta)) pieces.push_back(e.piece);
  return PolyCurve(std::move(pieces));
}

}  // namespace

double GeneratingCurve::length() const {
  double total = 0.0;
  for (const auto& s : strands)
    for (const auto& p : s.pieces) total += p.length();
  return total;
}

std::size_t GeneratingCurve::piece_count() const {
  std::size_t total = 0;
  for (const auto& s : strands) total += s.pieces.size();
  return total;
}

void validate_generating_curve(const SchottkyGroup& group, const GeneratingCurve& zeta) {
  const CirclePairing& pairing = zeta.pairing;
  const int g = group.rank();
  const int n = 2 * g;
  if (pairing.rank() != g) throw std::invalid_argument("generating curve pairing has the wrong rank");
  if (static_cast<int>(zeta.strands.size()) != n)
    throw std::invalid_argument("generating curve needs one strand per pairing circle");

  std::vector<int> visits(n, 0);
  std::vector<std::vector<Complex>> points(n);
  for (int k = 0; k < n; ++k) {
    const Strand& s = zeta.strands[k];
    const Strand& next = zeta.strands[(k + 1) % n];
    if (s.pieces.empty()) throw std::invalid_argument("empty strand");
    if (s.from < 0 || s.from >= n || s.to < 0 || s.to >= n) throw std::invalid_argument("strand circle index out of range");
    if (s.to != next.from)
      throw std::invalid_argument("strand " + std::to_string(k + 1) + " ends on circle " + std::to_string(s.to + 1) +
                                  " but the next strand starts on circle " + std::to_string(next.from + 1));
    for (std::size_t i = 0; i + 1 < s.pieces.size(); ++i)
      if (std::abs(s.pieces[i].end - s.pieces[i + 1].start) > 1e-12 * (1.0 + std::abs(s.pieces[i].end)))
        throw std::invalid_argument("strand " + std::to_string(k + 1) + " is not connected");
    ++visits[s.to];
    for (auto [c, z] : {std::pair{s.from, s.start()}, std::pair{s.to, s.end()}}) {
      const Circle& circle = pairing.circles[c];
      if (std::abs(std::abs(z - circle.center) - circle.radius) > 1e-9 * std::max(1.0, circle.radius))
        throw std::invalid_argument("strand endpoint is not on circle " + std::to_string(c + 1));
    }
    points[s.to].push_back(s.end());
    points[next.from].push_back(next.start());
  }
  for (int c = 0; c < n; ++c)
    if (visits[c] != 1) throw std::invalid_argument("circle " + std::to_string(c + 1) + " is not visited exactly once");

  // points[c] = {entry, exit}; generator i carries those of circle i onto
  // those of circle i + g.
  for (int i = 0; i < g; ++i) {
    const MoebiusMap& m = group.generators()[i];
    const double tol = 1e-9 * std::max(1.0, pairing.circles[i + g].radius);
    for (Complex z : points[i]) {
      const Complex w = m(z).value();
      const double best = std::min(std::abs(w - points[i + g][0]), std::abs(w - points[i + g][1]));
      if (best > tol)
        throw std::invalid_argument("endpoints on circle " + std::to_string(i + g + 1) +
                                    " are not the images of those on circle " + std::to_string(i + 1));
    }
    if (std::abs(points[i][0] - points[i][1]) <= tol)
      throw std::invalid_argument("strands meet circle " + std::to_string(i + 1) + " at a single point");
  }

  for (int k = 0; k < n; ++k) {
    for (const auto& p : zeta.strands[k].pieces) {
      for (int c = 0; c < n; ++c) {
        const Circle& circle = pairing.circles[c];
        const bool touches = c == zeta.strands[k].from || c == zeta.strands[k].to;
        const double d = p.distance_to(circle.center);
        if (touches ? d < circle.radius * (1.0 - 1e-12) : d <= circle.radius)
          throw DisjointnessError("strand " + std::to_string(k + 1) + " enters disk " + std::to_string(c + 1));
      }
    }
  }
  if (!is_simple(depth_zero_curve(zeta))) throw DisjointnessError("generating strands intersect");
}

GeneratingCurve default_generating_curve(const SchottkyGroup& group) {
  const CirclePairing& pairing = group.require_pairing();
  const int g = group.rank();
  const int n = 2 * g;
  const auto& circles = pairing.circles;

  Complex centroid = 0.0;
  for (const auto& c : circles) centroid += c.center;
  centroid /= static_cast<double>(n);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::arg(circles[a].center - centroid) < std::arg(circles[b].center - centroid);
  });
  std::vector<int> prev(n), next(n);
  for (int k = 0; k < n; ++k) {
    next[order[k]] = order[(k + 1) % n];
    prev[order[k]] = order[(k + n - 1) % n];
  }
  std::vector<double> stub(n);
  for (int c = 0; c < n; ++c) {
    double room = circles[c].radius;
    for (int d = 0; d < n; ++d)
      if (d != c) room = std::min(room, disk_gap(circles[c], circles[d]));
    stub[c] = 0.25 * room;
  }

  auto facing = [&](int c, Complex z, int neighbor) {
    const Complex out = z - circles[c].center;
    const Complex toward = circles[neighbor].center - circles[c].center;
    return dot(out, toward) / (std::abs(out) * std::abs(toward));
  };

  // Candidate crossing points per generator: (entry, exit) on circle i and
  // the matched pair on circle i + g, best first.
  struct Candidate {
    double score;
    Complex in_i, out_i, in_j, out_j;
    int dir_i = 1, dir_j = 1;
  };
  constexpr int kGrid = 72;
  constexpr int kKeep = 6;
  std::vector<Ring> rings(n);
  for (int c = 0; c < n; ++c) {
    rings[c].prev_gap = std::arg(circles[prev[c]].center - circles[c].center);
    rings[c].next_gap = std::arg(circles[next[c]].center - circles[c].center);
  }
  auto angle = [&](int c, Complex z) { return std::arg(z - circles[c].center); };
  // Shortest admissible ring travel on circle c, with its direction.
  auto ring_fit = [&](int c, Complex in, Complex out, int& dir) {
    double best = -1.0;
    for (int d : {1, -1}) {
      const double cost = ring_cost(rings[c].prev_gap, angle(c, in), angle(c, out), rings[c].next_gap, d);
      if (cost >= 0.0 && (best < 0.0 || cost < best)) best = cost, dir = d;
    }
    return best;
  };

  // Straight strands score points by how well they face the neighbor they
  // connect to; ring-routed strands by how little ring they travel.
  auto candidates_for = [&](bool ring) {
    std::vector<std::vector<Candidate>> out(g);
    for (int i = 0; i < g; ++i) {
      const int j = i + g;
      const MoebiusMap& m = group.generators()[i];
      std::vector<Candidate> all;
      for (int a = 0; a < kGrid; ++a) {
        for (int b = 0; b < kGrid; ++b) {
          const int sep = std::abs(a - b);
          if (std::min(sep, kGrid - sep) < kGrid / 12) continue;
          const Complex pin = circles[i].point_at(2.0 * kPi * a / kGrid);
          const Complex pout = circles[i].point_at(2.0 * kPi * b / kGrid);
          const Complex qa = m(pin).value(), qb = m(pout).value();
          for (int swap = 0; swap < 2; ++swap) {
            const Complex qin = swap ? qb : qa, qout = swap ? qa : qb;
            Candidate c{0.0, pin, pout, qin, qout};
            if (ring) {
              const double ci = ring_fit(i, pin, pout, c.dir_i);
              const double cj = ring_fit(j, qin, qout, c.dir_j);
              if (ci < 0.0 || cj < 0.0) continue;
              c.score = -(circles[i].radius * ci + circles[j].radius * cj);
            } else {
              c.score = facing(i, pin, prev[i]) + facing(i, pout, next[i]) + facing(j, qin, prev[j]) +
                        facing(j, qout, next[j]);
            }
            all.push_back(c);
          }
        }
      }
      std::stable_sort(all.begin(), all.end(), [](const Candidate& x, const Candidate& y) { return x.score > y.score; });
      all.resize(std::min<std::size_t>(all.size(), kKeep));
      out[i] = std::move(all);
    }
    return out;
  };

  std::string last_error = "no candidate crossing points";
  // Ring routing needs distinct neighbors on both sides.
  for (const bool ring : {false, true}) {
    if (ring && n < 3) break;
    const auto candidates = candidates_for(ring);
    if (std::any_of(candidates.begin(), candidates.end(), [](const auto& c) { return c.empty(); })) continue;
    // Combinations in order of total score until one is admissible.
    std::vector<std::pair<double, std::vector<int>>> combos;
    std::vector<int> pick(g, 0);
    for (;;) {
      double score = 0.0;
      for (int i = 0; i < g; ++i) score += candidates[i][pick[i]].score;
      combos.push_back({score, pick});
      int pos = 0;
      while (pos < g && ++pick[pos] == static_cast<int>(candidates[pos].size())) pick[pos++] = 0;
      if (pos == g) break;
    }
    std::stable_sort(combos.begin(), combos.end(), [](const auto& x, const auto& y) { return x.first > y.first; });

    for (const auto& [score, choice] : combos) {
      std::vector<Complex> entry(n), exit(n);
      for (int i = 0; i < g; ++i) {
        const Candidate& c = candidates[i][choice[i]];
        entry[i] = c.in_i;
        exit[i] = c.out_i;
        entry[i + g] = c.in_j;
        exit[i + g] = c.out_j;
        rings[i].dir = c.dir_i;
        rings[i + g].dir = c.dir_j;
      }
      GeneratingCurve zeta;
      zeta.pairing = pairing;
      for (int k = 0; k < n; ++k) {
        const int from = order[k], to = order[(k + 1) % n];
        zeta.strands.push_back(ring ? ring_strand(pairing, from, exit[from], to, entry[to], stub, rings)
                                    : radial_strand(pairing, from, exit[from], to, entry[to], stub));
      }
      try {
        validate_generating_curve(group, zeta);
        return zeta;
      } catch (const DisjointnessError& e) {
        last_error = e.what();
      }
    }
  }
  throw DisjointnessError("default generating curve: " + last_error + "; supply custom strands");
}

std::uint64_t quasicircle_piece_count(const GeneratingCurve& zeta, int rank, int depth) {
  return zeta.piece_count() * reduced_word_count_upto(rank, depth) + reduced_word_count(rank, depth + 1);
}

PolyCurve build_quasicircle(const SchottkyGroup& group, const GeneratingCurve& zeta, int depth) {
  if (depth < 0) throw std::invalid_argument("quasi-circle depth must be >= 0");
  const int g = group.rank();
  const int n = 2 * g;
  const std::vector<Element> cycle = base_cycle(zeta);
  const std::size_t len = cycle.size();
  std::vector<std::size_t> chord_at(n, 0);
  for (std::size_t e = 0; e < len; ++e)
    if (cycle[e].chord) chord_at[cycle[e].disk] = e;

  std::vector<Piece> out;
  out.reserve(quasicircle_piece_count(zeta, g, depth));

  // Replaces the chord from p to q through the disk that letter l maps
  // into by N(cycle without chord l), N = M * letter l.
  std::function<void(const MoebiusMap&, Letter, int, Complex, Complex)> expand =
      [&](const MoebiusMap& parent, Letter l, int remaining, Complex p, Complex q) {
        const MoebiusMap N = parent * group.letter_map(l);
        const Element& skipped = cycle[chord_at[l]];
        const Complex head = N(skipped.piece.end).value();
        const Complex tail = N(skipped.piece.start).value();
        // Endpoints come out of long products of maps, so tiny chords carry
        // absolute rounding; pick the closer orientation and bound the miss.
        const double fwd = std::abs(head - p) + std::abs(tail - q);
        const double bwd = std::abs(tail - p) + std::abs(head - q);
        const double tol = 1e-3 * std::abs(p - q) + 1e-13 * std::max({std::abs(p), std::abs(q), 1.0});
        const bool forward = fwd <= bwd;
        if (std::min(fwd, bwd) > tol)
          throw OrderingError("refinement through disk " + std::to_string(group.require_pairing().target_disk(l) + 1) +
                              " does not join the chord endpoints");
        const std::size_t first = out.size();
        for (std::size_t k = 1; k < len; ++k) {
          const std::size_t e = forward ? (chord_at[l] + k) % len : (chord_at[l] + len - k) % len;
          const Element& el = cycle[e];
          if (!el.chord) {
            const Piece img = map_piece(N, el.piece);
            out.push_back(forward ? img : img.reversed());
            continue;
          }
          Complex a = N(el.piece.start).value(), b = N(el.piece.end).value();
          if (!forward) std::swap(a, b);
          if (remaining > 0) {
            expand(N, static_cast<Letter>((el.disk + g) % n), remaining - 1, a, b);
          } else {
            out.push_back(Piece::line(a, b));
          }
        }
        out[first].start = p;
        out.back().end = q;
      };

  for (const Element& el : cycle) {
    if (!el.chord || depth == 0) {
      out.push_back(el.piece);
      continue;
    }
    expand(MoebiusMap::identity(), static_cast<Letter>((el.disk + g) % n), depth - 1, el.piece.start, el.piece.end);
  }
  // Shared endpoints are computed identically on both sides; snap the
  // remaining rounding so the chain closes exactly.
  for (std::size_t i = 0; i + 1 < out.size(); ++i) out[i + 1].start = out[i].end;
  return PolyCurve(std::move(out));
}

LengthEstimate quasicircle_length_estimate(const SchottkyGroup& group, const GeneratingCurve& zeta, int depth,
                                           double s) {
  LengthEstimate est;
  const double series = depth >= 1 ? poincare_partial_sum(group, s, depth).partial_sum : 0.0;
  est.estimate = zeta.length() * (1.0 + series);
  est.direct = build_quasicircle(group, zeta, depth).length();
  return est;
}

bool is_invariant(const SchottkyGroup& group, const PolyCurve& curve, double tol) {
  std::vector<Complex> queries;
  const std::vector<Complex> samples = curve.sample_uniform(256);
  for (const auto& m : group.generators()) {
    for (const Complex z : samples) {
      const SpherePoint w = m(z);
      if (w.is_infinite()) return false;
      queries.push_back(w.value());
    }
  }
  for (Complex z : limit_points(group, 4)) queries.push_back(z);
  std::vector<char> ok(queries.size(), 0);
  parallel_for(queries.size(), [&](std::size_t i) { ok[i] = curve.distance_to(queries[i]) <= tol; });
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

QuasicircleFlags classify_quasicircle(const SchottkyGroup& group, const PolyCurve& curve,
                                      const CirclePairing& pairing) {
  (void)group;
  QuasicircleFlags flags;
  flags.linear = !curve.approximated;
  const auto& pieces = curve.pieces();

  for (const auto& p : pieces) {
    if (!p.is_arc()) continue;
    for (const auto& c : pairing.circles) {
      const double tol = 1e-9 * std::max(1.0, c.radius);
      if (std::abs(p.center - c.center) <= tol && std::abs(p.radius - c.radius) <= tol) flags.parallel = true;
    }
  }

  bool orthogonal = true;
  for (const auto& c : pairing.circles) {
    // The full circle as two half arcs.
    const Piece upper = Piece::arc(c.center, c.radius, c.point_at(0.0), c.point_at(kPi), true);
    const Piece lower = Piece::arc(c.center, c.radius, c.point_at(kPi), c.point_at(0.0), true);
    for (std::size_t i = 0; i < pieces.size() && orthogonal; ++i) {
      const auto& b = curve.bounds()[i];
      if (b[0] > c.center.real() + c.radius || b[2] < c.center.real() - c.radius ||
          b[1] > c.center.imag() + c.radius || b[3] < c.center.imag() - c.radius)
        continue;
      const Piece& p = pieces[i];
      for (const Piece& half : {upper, lower}) {
        for (Complex z : intersect(p, half)) {
          double t;
          if (p.is_arc()) {
            double phi = std::arg((z - p.center) / (p.start - p.center));
            if (p.sweep < 0.0) phi = -phi;
            if (phi < 0.0) phi += 2.0 * kPi;
            t = phi > std::abs(p.sweep) + kPi ? 0.0 : std::min(phi / std::abs(p.sweep), 1.0);
          } else {
            t = std::clamp(dot(z - p.start, p.end - p.start) / std::norm(p.end - p.start), 0.0, 1.0);
          }
          const Complex radial = (z - c.center) / std::abs(z - c.center);
          if (std::abs(cross(radial, p.tangent_at(t))) > 1e-6) orthogonal = false;
        }
      }
    }
  }
  flags.transverse = orthogonal && !flags.parallel;

  bool corner = false, right = true;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const Complex t1 = pieces[i].tangent_at(1.0);
    const Complex t2 = pieces[(i + 1) % pieces.size()].tangent_at(0.0);
    if (std::abs(cross(t1, t2)) <= 1e-9 && dot(t1, t2) > 0.0) continue;
    corner = true;
    right = right && std::abs(dot(t1, t2)) <= 1e-6;
  }
  flags.right_angled = corner && right;
  return flags;
}

}  // namespace schottky
