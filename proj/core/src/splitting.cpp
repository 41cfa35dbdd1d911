#include "augsparse/splitting.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "augsparse/error.hpp"

namespace augsparse {
namespace {

double scale_of(const std::vector<double>& values) {
  double s = 0.0;
  for (double v : values) s = std::max(s, std::abs(v));
  return s;
}

// First index i in [1, n-2] with 2w(i) < w(i-1) + w(i+1) beyond tolerance.
std::size_t first_concavity_violation(const std::vector<double>& w, double tol) {
  for (std::size_t i = 1; i + 1 < w.size(); ++i) {
    if (w[i - 1] + w[i + 1] - 2.0 * w[i] > tol) return i;
  }
  return w.size();
}

double parse_number(const std::string& token, const char* what) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw SpecError(std::string("expected a number for ") + what + ", got '" +
                    token + "'");
  }
  return value;
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::kClique: return "clique";
    case Family::kLinear: return "linear";
    case Family::kDeltaLinear: return "dlinear";
    case Family::kSqrt: return "sqrt";
    case Family::kPower: return "power";
    case Family::kAllOrNothing: return "aon";
    case Family::kCustom: return "custom";
  }
  return "unknown";
}

SplittingSpec SplittingSpec::clique(double weight) {
  return {Family::kClique, 0.0, {}, weight};
}
SplittingSpec SplittingSpec::linear(double weight) {
  return {Family::kLinear, 0.0, {}, weight};
}
SplittingSpec SplittingSpec::delta_linear(double delta, double weight) {
  return {Family::kDeltaLinear, delta, {}, weight};
}
SplittingSpec SplittingSpec::sqrt(double weight) {
  return {Family::kSqrt, 0.0, {}, weight};
}
SplittingSpec SplittingSpec::power(double p, double weight) {
  return {Family::kPower, p, {}, weight};
}
SplittingSpec SplittingSpec::all_or_nothing(double weight) {
  return {Family::kAllOrNothing, 0.0, {}, weight};
}
SplittingSpec SplittingSpec::custom_penalties(std::vector<double> w,
                                              double weight) {
  return {Family::kCustom, 0.0, std::move(w), weight};
}

void SplittingSpec::validate() const {
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    throw SpecError("weight must be a finite nonnegative number");
  }
  switch (family) {
    case Family::kDeltaLinear:
      if (!(param >= 1.0) || !std::isfinite(param)) {
        throw SpecError("dlinear requires delta >= 1");
      }
      break;
    case Family::kPower:
      if (!(param > 0.0 && param <= 1.0)) {
        throw SpecError("power requires p in (0, 1]");
      }
      break;
    case Family::kCustom:
      if (custom.empty()) throw SpecError("custom requires at least w(0)");
      ScbFunction::create(custom);
      break;
    default:
      break;
  }
}

SplittingSpec SplittingSpec::unit() const {
  SplittingSpec copy = *this;
  copy.weight = 1.0;
  return copy;
}

std::string SplittingSpec::to_string() const {
  std::ostringstream out;
  out.precision(17);
  if (weight != 1.0) out << "weight " << weight << ' ';
  out << augsparse::to_string(family);
  if (family == Family::kDeltaLinear || family == Family::kPower) {
    out << ' ' << param;
  } else if (family == Family::kCustom) {
    for (double v : custom) out << ' ' << v;
  }
  return out.str();
}

ScbFunction ScbFunction::create(std::vector<double> values) {
  if (values.empty()) throw ValidationError("SCB function needs w(0)", 0);
  const double tol = kValidationTolerance * std::max(scale_of(values), 1e-300);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw ValidationError("SCB penalty is not finite at index " + std::to_string(i), i);
    }
  }
  if (std::abs(values[0]) > tol) {
    throw ValidationError("SCB function must satisfy w(0) = 0", 0);
  }
  values[0] = 0.0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] < -tol || values[i] < values[i - 1] - tol) {
      throw ValidationError(
          "SCB function must be nonnegative and nondecreasing; violated at index " +
              std::to_string(i),
          i);
    }
  }
  if (auto i = first_concavity_violation(values, tol); i < values.size()) {
    throw ValidationError(
        "SCB function violates concavity at index " + std::to_string(i), i);
  }
  return ScbFunction(std::move(values));
}

bool ScbFunction::is_zero() const noexcept {
  return values_.size() < 2 || values_.back() <= 0.0;
}

GscbFunction GscbFunction::create(std::vector<double> values) {
  if (values.empty()) throw ValidationError("GSCB function needs w(0)", 0);
  const double tol = kValidationTolerance * std::max(scale_of(values), 1e-300);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < -tol) {
      throw ValidationError(
          "GSCB penalty must be finite and nonnegative at index " + std::to_string(i), i);
    }
    values[i] = std::max(values[i], 0.0);
  }
  if (auto i = first_concavity_violation(values, tol); i < values.size()) {
    throw ValidationError(
        "GSCB function violates 2w(i) >= w(i-1) + w(i+1) at index " + std::to_string(i), i);
  }
  return GscbFunction(std::move(values));
}

double GscbFunction::max_value() const noexcept {
  return *std::max_element(values_.begin(), values_.end());
}

double evaluate(const SplittingSpec& spec, int k, int i) {
  if (k < 0 || i < 0 || i > k) {
    throw DomainError("evaluate: need 0 <= i <= k, got i=" + std::to_string(i) +
                      ", k=" + std::to_string(k));
  }
  const int small = std::min(i, k - i);
  double base = 0.0;
  switch (spec.family) {
    case Family::kClique:
      base = static_cast<double>(i) * static_cast<double>(k - i);
      break;
    case Family::kLinear:
      base = small;
      break;
    case Family::kDeltaLinear:
      base = std::min(static_cast<double>(small), spec.param);
      break;
    case Family::kSqrt:
      base = std::sqrt(static_cast<double>(small));
      break;
    case Family::kPower:
      base = small == 0 ? 0.0 : std::pow(static_cast<double>(small), spec.param);
      break;
    case Family::kAllOrNothing:
      base = (i > 0 && i < k) ? 1.0 : 0.0;
      break;
    case Family::kCustom: {
      const auto expected = static_cast<std::size_t>(k / 2 + 1);
      if (spec.custom.size() != expected) {
        throw SpecError("custom penalty list has " + std::to_string(spec.custom.size()) +
                        " entries; a " + std::to_string(k) + "-node hyperedge needs " +
                        std::to_string(expected));
      }
      base = spec.custom[static_cast<std::size_t>(small)];
      break;
    }
  }
  return spec.weight * base;
}

ScbFunction materialize_scb(const SplittingSpec& spec, int k) {
  if (k < 1) throw DomainError("materialize_scb: hyperedge size must be >= 1");
  spec.validate();
  const int r = k / 2;
  std::vector<double> w(static_cast<std::size_t>(r) + 1);
  for (int i = 0; i <= r; ++i) w[static_cast<std::size_t>(i)] = evaluate(spec, k, i);
  return ScbFunction::create(std::move(w));
}

GscbFunction materialize_gscb(std::vector<double> penalties) {
  return GscbFunction::create(std::move(penalties));
}

GscbFunction symmetric_to_gscb(const SplittingSpec& spec, int k) {
  const ScbFunction half = materialize_scb(spec, k);
  std::vector<double> w(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) w[static_cast<std::size_t>(i)] = half(std::min(i, k - i));
  return GscbFunction::create(std::move(w));
}

SplittingSpec parse_splitting_spec(const std::vector<std::string>& tokens) {
  std::size_t pos = 0;
  double weight = 1.0;
  auto next = [&](const char* what) -> const std::string& {
    if (pos >= tokens.size()) throw SpecError(std::string("missing ") + what);
    return tokens[pos++];
  };
  while (pos < tokens.size() && tokens[pos] == "weight") {
    ++pos;
    weight *= parse_number(next("weight value"), "weight");
  }
  const std::string& name = next("splitting family");
  SplittingSpec spec;
  if (name == "clique") {
    spec = SplittingSpec::clique();
  } else if (name == "linear") {
    spec = SplittingSpec::linear();
  } else if (name == "dlinear") {
    spec = SplittingSpec::delta_linear(parse_number(next("delta"), "delta"));
  } else if (name == "sqrt") {
    spec = SplittingSpec::sqrt();
  } else if (name == "power") {
    spec = SplittingSpec::power(parse_number(next("exponent"), "power exponent"));
  } else if (name == "aon") {
    spec = SplittingSpec::all_or_nothing();
  } else if (name == "custom") {
    std::vector<double> w;
    while (pos < tokens.size()) w.push_back(parse_number(tokens[pos++], "custom penalty"));
    spec = SplittingSpec::custom_penalties(std::move(w));
  } else {
    throw SpecError("unknown splitting family '" + name + "'");
  }
  if (pos != tokens.size()) {
    throw SpecError("unexpected token '" + tokens[pos] + "' after splitting spec");
  }
  spec.weight = weight;
  try {
    spec.validate();
  } catch (const ValidationError& e) {
    throw SpecError(e.what());
  }
  return spec;
}

}  // namespace augsparse
