#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcmeff {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input text is not well formed in the declared format.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input parsed but violates a domain invariant (squareness, positivity,
/// reciprocity, minimum size, ...). `details()` lists every violation found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> details)
      : Error(join(details)), details_(std::move(details)) {}
  explicit ValidationError(const std::string& detail)
      : ValidationError(std::vector<std::string>{detail}) {}

  const std::vector<std::string>& details() const noexcept { return details_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
      if (!out.empty()) out += "; ";
      out += item;
    }
    return out;
  }

  std::vector<std::string> details_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// The simplex tableau lost all usable pivots.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The efficiency LP was requested for a weight vector that reproduces the
/// matrix exactly (empty overshoot set); such a vector is efficient.
class ConsistentInput : public Error {
 public:
  using Error::Error;
};

/// The weak-efficiency LP was requested although some ratio matches its
/// matrix entry exactly; such a vector is weakly efficient.
class EqualityWitness : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The LP test and the digraph test disagree. Carries both raw outcomes.
class VerdictConflict : public Error {
 public:
  VerdictConflict(std::string test, double lp_optimum, bool lp_positive,
                  bool graph_positive, const std::string& what)
      : Error(what),
        test_(std::move(test)),
        lp_optimum_(lp_optimum),
        lp_positive_(lp_positive),
        graph_positive_(graph_positive) {}

  /// "efficiency", "weak_efficiency" or "dominator_check".
  const std::string& test() const noexcept { return test_; }
  double lp_optimum() const noexcept { return lp_optimum_; }
  /// True when the LP side reported (weak) efficiency.
  bool lp_positive() const noexcept { return lp_positive_; }
  /// True when the digraph side reported (weak) efficiency.
  bool graph_positive() const noexcept { return graph_positive_; }

 private:
  std::string test_;
  double lp_optimum_;
  bool lp_positive_;
  bool graph_positive_;
};

}  // namespace pcmeff
