#pragma once

// Minimum-size (1+eps) piecewise-linear covers of cardinality penalties and
// their conversion to gadget parameters.
//
// A cover is a set of lines whose lower envelope f satisfies
// w(i) <= f(i) <= (1+eps) w(i) at every integer i of the domain. Each
// positive-slope line of a symmetric cover becomes one CB-gadget; each
// breakpoint of a general cover becomes one ACB-gadget.

#include <cstddef>
#include <vector>

#include "augsparse/splitting.hpp"

namespace augsparse {

// Relative tolerance for "g(i) <= (1+eps) w(i)" comparisons.
inline constexpr double kCoverTolerance = 1e-12;

struct Line {
  double slope = 0.0;
  double intercept = 0.0;

  double operator()(double x) const noexcept { return slope * x + intercept; }
  friend bool operator==(const Line&, const Line&) = default;
};

// x-coordinate where two non-parallel lines meet.
double intersect(const Line& a, const Line& b);

class PlCover {
 public:
  // kOpenRight: the envelope is taken over [0, inf) (symmetric covers end in a
  // constant line). kClosed: over [0, domain_end] (general covers).
  enum class Extent { kOpenRight, kClosed };

  PlCover() = default;

  // Stores `lines` as given. Use lower_envelope() for a normalized cover.
  PlCover(std::vector<Line> lines, int domain_end)
      : lines_(std::move(lines)), domain_end_(domain_end) {}

  // Sorts by decreasing slope and drops every line that is not the strict
  // minimum on a subinterval of positive length.
  static PlCover lower_envelope(std::vector<Line> lines, int domain_end, Extent extent);

  const std::vector<Line>& lines() const noexcept { return lines_; }
  int domain_end() const noexcept { return domain_end_; }
  bool empty() const noexcept { return lines_.empty(); }
  std::size_t size() const noexcept { return lines_.size(); }
  std::size_t positive_slope_count() const noexcept;

  // Intersections of consecutive lines; size() - 1 entries.
  std::vector<double> breakpoints() const;

  // min over lines; 0 for an empty cover.
  double operator()(double x) const noexcept;

 private:
  std::vector<Line> lines_;
  int domain_end_ = 0;
};

struct NextPiece {
  Line line;
  // Largest index covered by `line`; r + 1 when the constant line finishes
  // the cover.
  int p = 0;
};

// Widest-reaching line that (1+eps)-covers w at ell and upper-bounds w.
// Ties go to the minimum slope.
NextPiece find_next(const ScbFunction& w, double eps, int ell);

// Optimal cover of an SCB function: the first line is w(1) x, the last is the
// constant w(r), and the number of positive-slope lines is minimal. O(r).
PlCover find_best_cover(const ScbFunction& w, double eps);

// Tangent-line cover of x (k - x) that is valid on the whole interval
// [1, k/2]. Uses O(eps^-1/2 log log 1/eps) lines independent of k.
PlCover clique_cover(int k, double eps);

// Greedy cover of a GSCB function over [0, k]; slopes may be negative.
PlCover gscb_cover(const GscbFunction& w, double eps);

// Sum_j a_j min{i, b_j}: J CB-gadgets.
struct CcbParams {
  std::vector<double> a;
  std::vector<double> b;

  std::size_t order() const noexcept { return a.size(); }
  CcbParams scaled(double c) const;
  friend bool operator==(const CcbParams&, const CcbParams&) = default;
};

// z0 (k - i) + zk i + Sum_j a_j min{i (k - b_j), (k - i) b_j}: J ACB-gadgets
// plus terminal arcs.
struct KcgParams {
  double z0 = 0.0;
  double zk = 0.0;
  std::vector<double> a;
  std::vector<double> b;

  std::size_t order() const noexcept { return a.size(); }
  KcgParams scaled(double c) const;
  friend bool operator==(const KcgParams&, const KcgParams&) = default;
};

// b_j = j-th breakpoint, a_j = m_j - m_{j+1}. Throws StructuralError unless
// slopes strictly decrease to exactly 0, the first line passes through the
// origin, and 0 < b_1 < ... < b_J <= domain_end.
CcbParams cover_to_ccb(const PlCover& cover);

double ccb_evaluate(const CcbParams& p, double i);

// b_j = j-th breakpoint, a_j = (m_j - m_{j+1}) / k, z0 = f(0) / k,
// zk = f(k) / k. Throws StructuralError if a breakpoint is not in (0, k).
KcgParams cover_to_kcg(const PlCover& cover, int k);

double kcg_evaluate(const KcgParams& p, double i, int k);

}  // namespace augsparse
