#include "augsparse/plcover.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "augsparse/error.hpp"

namespace augsparse {
namespace {

// Breakpoints closer than this (in index units) are treated as coincident.
constexpr double kBreakpointTolerance = 1e-9;

// `scale` is the magnitude of the function being covered, so bounds near zero
// still get an absolute slack.
bool covers(double value, double bound, double scale = 0.0) {
  return value <= bound + kCoverTolerance * std::max({std::abs(value), std::abs(bound), scale});
}

// Line through (i, w(i)) and (i + 1, w(i + 1)).
template <typename Fn>
Line chord(const Fn& w, int i) {
  const double slope = w(i + 1) - w(i);
  return {slope, w(i) - slope * i};
}

// Line through (x0, y0) and (x1, y1), x0 != x1.
Line through(double x0, double y0, double x1, double y1) {
  const double slope = (y1 - y0) / (x1 - x0);
  return {slope, y0 - slope * x0};
}

// Largest x in [lo, hi] such that ok(y) holds for every y in (lo, x]. `ok` must
// be true-then-false on (lo, hi]; every scan below has that shape by concavity,
// so exponential search finds the same stopping point as a linear walk.
template <typename Pred>
int gallop(int lo, int hi, Pred ok) {
  int good = lo;
  long long step = 1;
  while (good < hi) {
    const int probe = static_cast<int>(std::min<long long>(hi, good + step));
    if (!ok(probe)) {
      hi = probe - 1;
      break;
    }
    good = probe;
    step *= 2;
  }
  while (good < hi) {
    const int mid = good + (hi - good + 1) / 2;
    if (ok(mid)) {
      good = mid;
    } else {
      hi = mid - 1;
    }
  }
  return good;
}

}  // namespace

double intersect(const Line& a, const Line& b) {
  return (b.intercept - a.intercept) / (a.slope - b.slope);
}

PlCover PlCover::lower_envelope(std::vector<Line> lines, int domain_end, Extent extent) {
  std::sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) {
    return x.slope != y.slope ? x.slope > y.slope : x.intercept < y.intercept;
  });
  lines.erase(std::unique(lines.begin(), lines.end(),
                          [](const Line& x, const Line& y) { return x.slope == y.slope; }),
              lines.end());

  std::vector<Line> hull;
  for (const Line& line : lines) {
    while (hull.size() >= 2 &&
           intersect(hull.back(), line) <=
               intersect(hull[hull.size() - 2], hull.back()) + kBreakpointTolerance) {
      hull.pop_back();
    }
    hull.push_back(line);
  }

  // Clip to [0, hi].
  std::size_t first = 0;
  while (first + 1 < hull.size() &&
         intersect(hull[first], hull[first + 1]) <= kBreakpointTolerance) {
    ++first;
  }
  std::size_t last = hull.size();
  if (extent == Extent::kClosed) {
    while (last > first + 1 &&
           intersect(hull[last - 2], hull[last - 1]) >= domain_end - kBreakpointTolerance) {
      --last;
    }
  }
  return PlCover(std::vector<Line>(hull.begin() + static_cast<std::ptrdiff_t>(first),
                                   hull.begin() + static_cast<std::ptrdiff_t>(last)),
                 domain_end);
}

std::size_t PlCover::positive_slope_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      lines_.begin(), lines_.end(), [](const Line& l) { return l.slope > 0.0; }));
}

std::vector<double> PlCover::breakpoints() const {
  std::vector<double> out;
  for (std::size_t j = 0; j + 1 < lines_.size(); ++j) {
    out.push_back(intersect(lines_[j], lines_[j + 1]));
  }
  return out;
}

double PlCover::operator()(double x) const noexcept {
  if (lines_.empty()) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const Line& line : lines_) best = std::min(best, line(x));
  return best;
}

NextPiece find_next(const ScbFunction& w, double eps, int ell) {
  const int r = w.r();
  if (ell < 1 || ell > r) {
    throw DomainError("find_next: ell must lie in [1, r], got " + std::to_string(ell));
  }
  if (eps < 0.0) throw DomainError("find_next: eps must be nonnegative");

  const double target = (1.0 + eps) * w(ell);
  if (covers(w(r), target)) return {Line{0.0, w(r)}, r + 1};

  // Last chord g^(j) (j <= r - 1) that still passes at or below the target at
  // ell; the optimal line is the tangent from (ell, target) touching j + 1.
  const int j = gallop(ell, r - 1, [&](int q) { return covers(chord(w, q)(ell), target); });
  const int touch = j + 1;
  const Line line = through(ell, target, touch, w(touch));

  const int p =
      gallop(touch, r, [&](int q) { return covers(line(q), (1.0 + eps) * w(q)); });
  return {line, p};
}

PlCover find_best_cover(const ScbFunction& w, double eps) {
  if (eps < 0.0) throw DomainError("find_best_cover: eps must be nonnegative");
  const int r = w.r();
  if (w.is_zero()) return PlCover({}, r);

  std::vector<Line> lines{Line{w(1), 0.0}};
  int p = gallop(1, r, [&](int q) { return covers(w(1) * q, (1.0 + eps) * w(q)); });

  bool has_constant = false;
  for (int ell = p + 1; ell <= r;) {
    const NextPiece next = find_next(w, eps, ell);
    lines.push_back(next.line);
    if (next.p > r) {
      has_constant = true;
      break;
    }
    ell = next.p + 1;
  }
  if (!has_constant) lines.push_back(Line{0.0, w(r)});
  return PlCover::lower_envelope(std::move(lines), r, PlCover::Extent::kOpenRight);
}

PlCover clique_cover(int k, double eps) {
  if (k < 2) throw DomainError("clique_cover: k must be >= 2");
  if (eps < 0.0) throw DomainError("clique_cover: eps must be nonnegative");
  if (eps == 0.0) return find_best_cover(materialize_scb(SplittingSpec::clique(), k), 0.0);

  const double kk = static_cast<double>(k);
  const int r = k / 2;
  std::vector<Line> lines{Line{kk - 1.0, 0.0}};
  double z = 1.0;
  do {
    const double t = z + std::sqrt(std::max(0.0, z * (kk - z) * eps));
    const double disc = kk * kk * eps * eps + 4.0 * eps * t * (kk - t);
    z = t / (1.0 + eps) + kk * eps / (2.0 * (1.0 + eps)) +
        std::sqrt(std::max(0.0, disc)) / (2.0 * (1.0 + eps));
    if (t > kk / 2.0) {
      // Tangent at k/2 is the constant k^2/4, which covers the rest.
      lines.push_back(Line{0.0, kk * kk / 4.0});
      break;
    }
    lines.push_back(Line{kk - 2.0 * t, t * t});
  } while (z < kk / 2.0);

  // Cap at the envelope's value at r so the last breakpoint stays <= r; the
  // envelope is unchanged on [0, r].
  double at_r = std::numeric_limits<double>::infinity();
  for (const Line& line : lines) at_r = std::min(at_r, line(r));
  lines.push_back(Line{0.0, at_r});
  return PlCover::lower_envelope(std::move(lines), r, PlCover::Extent::kOpenRight);
}

PlCover gscb_cover(const GscbFunction& w, double eps) {
  if (eps < 0.0) throw DomainError("gscb_cover: eps must be nonnegative");
  const int k = w.k();
  if (k == 0) return PlCover({Line{0.0, w(0)}}, 0);

  const double scale = w.max_value();
  const Line last_chord = chord(w, k - 1);
  std::vector<Line> lines;
  for (int ell = 0; ell <= k;) {
    const double target = (1.0 + eps) * w(ell);
    if (covers(last_chord(ell), target, scale)) {
      lines.push_back(last_chord);
      break;
    }
    // Here ell <= k - 2, so the scan stays below the last chord.
    const int j =
        gallop(ell, k - 1, [&](int q) { return covers(chord(w, q)(ell), target, scale); });
    const int touch = j + 1;
    const Line line = through(ell, target, touch, w(touch));
    const int p =
        gallop(touch, k, [&](int q) { return covers(line(q), (1.0 + eps) * w(q), scale); });
    lines.push_back(line);
    ell = p + 1;
  }
  return PlCover::lower_envelope(std::move(lines), k, PlCover::Extent::kClosed);
}

CcbParams CcbParams::scaled(double c) const {
  CcbParams out = *this;
  for (double& v : out.a) v *= c;
  return out;
}

KcgParams KcgParams::scaled(double c) const {
  KcgParams out = *this;
  out.z0 *= c;
  out.zk *= c;
  for (double& v : out.a) v *= c;
  return out;
}

CcbParams cover_to_ccb(const PlCover& cover) {
  const auto& lines = cover.lines();
  if (lines.empty()) return {};
  if (lines.back().slope != 0.0) {
    throw StructuralError("symmetric cover must end with a zero-slope line");
  }
  const double scale = std::max(std::abs(lines.back().intercept), 1.0);
  if (std::abs(lines.front().intercept) > kCoverTolerance * scale) {
    throw StructuralError("symmetric cover must start with a line through the origin");
  }
  CcbParams out;
  for (std::size_t j = 0; j + 1 < lines.size(); ++j) {
    if (!(lines[j].slope > lines[j + 1].slope)) {
      throw StructuralError("cover slopes must be strictly decreasing");
    }
    const double b = intersect(lines[j], lines[j + 1]);
    const double prev = out.b.empty() ? 0.0 : out.b.back();
    if (!(b > prev) || b > cover.domain_end() + kBreakpointTolerance) {
      throw StructuralError("cover breakpoints must increase within (0, r]");
    }
    out.a.push_back(lines[j].slope - lines[j + 1].slope);
    out.b.push_back(b);
  }
  return out;
}

double ccb_evaluate(const CcbParams& p, double i) {
  double total = 0.0;
  for (std::size_t j = 0; j < p.a.size(); ++j) total += p.a[j] * std::min(i, p.b[j]);
  return total;
}

KcgParams cover_to_kcg(const PlCover& cover, int k) {
  if (k < 1) throw DomainError("cover_to_kcg: k must be >= 1");
  const auto& lines = cover.lines();
  KcgParams out;
  if (lines.empty()) return out;
  const double kk = static_cast<double>(k);
  for (std::size_t j = 0; j + 1 < lines.size(); ++j) {
    if (!(lines[j].slope > lines[j + 1].slope)) {
      throw StructuralError("cover slopes must be strictly decreasing");
    }
    const double b = intersect(lines[j], lines[j + 1]);
    const double prev = out.b.empty() ? 0.0 : out.b.back();
    if (!(b > prev) || !(b < kk)) {
      throw StructuralError("cover breakpoints must increase within (0, k)");
    }
    out.a.push_back((lines[j].slope - lines[j + 1].slope) / kk);
    out.b.push_back(b);
  }
  out.z0 = std::max(0.0, cover(0.0)) / kk;
  out.zk = std::max(0.0, cover(kk)) / kk;
  return out;
}

double kcg_evaluate(const KcgParams& p, double i, int k) {
  const double kk = static_cast<double>(k);
  double total = p.z0 * (kk - i) + p.zk * i;
  for (std::size_t j = 0; j < p.a.size(); ++j) {
    total += p.a[j] * std::min(i * (kk - p.b[j]), (kk - i) * p.b[j]);
  }
  return total;
}

}  // namespace augsparse
