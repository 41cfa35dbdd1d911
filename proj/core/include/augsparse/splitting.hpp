#pragma once

// Cardinality-based splitting functions.
//
// A splitting function assigns a penalty to a hyperedge depending only on how
// many of its k members end up on one side of a cut. Symmetric submodular
// ones (SCB) are described by w(0..r), r = floor(k/2); general ones (GSCB) by
// w(0..k) with concave increments and no symmetry or zero-endpoint condition.

#include <cstddef>
#include <string>
#include <vector>

namespace augsparse {

inline constexpr double kValidationTolerance = 1e-9;

enum class Family {
  kClique,
  kLinear,
  kDeltaLinear,
  kSqrt,
  kPower,
  kAllOrNothing,
  kCustom,
};

std::string to_string(Family family);

struct SplittingSpec {
  Family family = Family::kLinear;
  // delta for kDeltaLinear, exponent p for kPower; unused otherwise.
  double param = 0.0;
  // Symmetric penalties w(0..r) for kCustom.
  std::vector<double> custom;
  double weight = 1.0;

  static SplittingSpec clique(double weight = 1.0);
  static SplittingSpec linear(double weight = 1.0);
  static SplittingSpec delta_linear(double delta, double weight = 1.0);
  static SplittingSpec sqrt(double weight = 1.0);
  static SplittingSpec power(double p, double weight = 1.0);
  static SplittingSpec all_or_nothing(double weight = 1.0);
  static SplittingSpec custom_penalties(std::vector<double> w,
                                        double weight = 1.0);

  // Throws SpecError on a bad parameter, ValidationError if custom penalties
  // are not SCB.
  void validate() const;

  // Same spec with weight 1.
  SplittingSpec unit() const;

  // Token form accepted by parse_splitting_spec, e.g. "weight 2 dlinear 3".
  std::string to_string() const;

  friend bool operator==(const SplittingSpec&, const SplittingSpec&) = default;
};

// Symmetric SCB integer function w(0..r).
class ScbFunction {
 public:
  ScbFunction() = default;

  // Validates w(0)=0, concavity and monotonicity; throws ValidationError
  // naming the first violated index.
  static ScbFunction create(std::vector<double> values);

  int r() const noexcept { return static_cast<int>(values_.size()) - 1; }
  double operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }
  const std::vector<double>& values() const noexcept { return values_; }

  // w(1) = 0 forces w == 0; no gadget is needed for such a function.
  bool is_zero() const noexcept;

 private:
  explicit ScbFunction(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_{0.0};
};

// General submodular cardinality-based function w(0..k).
class GscbFunction {
 public:
  GscbFunction() = default;

  // Validates nonnegativity and 2w(i) >= w(i-1) + w(i+1).
  static GscbFunction create(std::vector<double> values);

  int k() const noexcept { return static_cast<int>(values_.size()) - 1; }
  double operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }
  const std::vector<double>& values() const noexcept { return values_; }
  double max_value() const noexcept;

  friend bool operator==(const GscbFunction&, const GscbFunction&) = default;

 private:
  explicit GscbFunction(std::vector<double> values) : values_(std::move(values)) {}
  std::vector<double> values_{0.0};
};

// weight * family penalty for i of k members on one side.
double evaluate(const SplittingSpec& spec, int k, int i);

// w(i) = evaluate(spec, k, i) for i = 0..floor(k/2).
ScbFunction materialize_scb(const SplittingSpec& spec, int k);

GscbFunction materialize_gscb(std::vector<double> penalties);

// Mirrors a symmetric spec over 0..k.
GscbFunction symmetric_to_gscb(const SplittingSpec& spec, int k);

// Parses the token grammar
//   [weight <c>] (clique | linear | dlinear <d> | sqrt | power <p> | aon |
//                 custom <w0> ... <wr>)
// Throws SpecError.
SplittingSpec parse_splitting_spec(const std::vector<std::string>& tokens);

}  // namespace augsparse
