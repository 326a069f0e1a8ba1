#include "pcmeff/random_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "pcmeff/efficiency.hpp"
#include "pcmeff/errors.hpp"

namespace pcmeff {

double PortableRng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::size_t PortableRng::index(std::size_t k) {
  if (k == 0) throw ValidationError("cannot draw an index from an empty range");
  const std::uint64_t range = k;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return static_cast<std::size_t>(x % range);
}

double PortableRng::normal() {
  double u1;
  do {
    u1 = uniform01();
  } while (u1 == 0.0);
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

const char* to_string(GeneratorMode mode) noexcept {
  return mode == GeneratorMode::SaatyDiscrete ? "saaty_discrete" : "lognormal_perturbed_consistent";
}

GeneratorMode generator_mode_from_string(std::string_view name) {
  if (name == "saaty_discrete" || name == "saaty") return GeneratorMode::SaatyDiscrete;
  if (name == "lognormal_perturbed_consistent" || name == "lognormal") return GeneratorMode::LognormalPerturbedConsistent;
  throw ValidationError("unknown generator mode '" + std::string(name) + "'");
}

PairwiseComparisonMatrix generate(const GeneratorSpec& spec) {
  if (spec.n < 3) throw ValidationError("generator needs n >= 3");
  if (!(spec.sigma >= 0.0) || !std::isfinite(spec.sigma)) throw ValidationError("sigma must be a nonnegative number");

  const std::size_t n = spec.n;
  PortableRng rng(spec.seed);
  SquareMatrix a(n, 1.0);

  if (spec.mode == GeneratorMode::SaatyDiscrete) {
    // Index 0..7 -> 1/9..1/2, 8 -> 1, 9..16 -> 2..9.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::size_t k = rng.index(17);
        if (k < 8) {
          const double d = static_cast<double>(9 - k);
          a(i, j) = 1.0 / d;
          a(j, i) = d;
        } else {
          const double v = static_cast<double>(k - 7);
          a(i, j) = v;
          a(j, i) = 1.0 / v;
        }
      }
    }
  } else {
    std::vector<double> log_w(n);
    const double half_width = std::log(3.0);
    for (auto& x : log_w) x = (2.0 * rng.uniform01() - 1.0) * half_width;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double noise = spec.sigma == 0.0 ? 0.0 : spec.sigma * rng.normal();
        const double v = std::exp(log_w[i] - log_w[j] + noise);
        a(i, j) = v;
        a(j, i) = 1.0 / v;
      }
    }
  }
  return PairwiseComparisonMatrix(std::move(a));
}

ExperimentSummary run_experiment(const GeneratorSpec& spec, std::size_t trials) {
  if (trials < 1) throw ValidationError("an experiment needs at least one trial");
  ExperimentSummary summary;
  summary.spec = spec;
  summary.trials = trials;
  summary.records.reserve(trials);

  double gap_total = 0.0;
  for (std::size_t k = 0; k < trials; ++k) {
    GeneratorSpec trial_spec = spec;
    trial_spec.seed = splitmix64(spec.seed + k);
    const auto m = generate(trial_spec);
    const auto eig = principal_eigenvector(m);

    TrialRecord rec;
    rec.seed = trial_spec.seed;
    try {
      const auto report = test_efficiency(m, eig.vector);
      const auto& t = *report.efficiency;
      rec.verdict = to_string(t.verdict);
      rec.lp_optimum = t.lp_optimum;
      for (const auto& row : t.certificate) rec.gap = std::max(rec.gap, row.old_residual - row.new_residual);
      if (t.verdict == Verdict::Inefficient) {
        ++summary.inefficient;
        gap_total += rec.gap;
        summary.max_gap = std::max(summary.max_gap, rec.gap);
      }
    } catch (const VerdictConflict& c) {
      rec.verdict = "conflict";
      rec.lp_optimum = c.lp_optimum();
      ++summary.conflicts;
    }
    summary.records.push_back(std::move(rec));
  }

  summary.eigenvector_inefficient_fraction = static_cast<double>(summary.inefficient) / static_cast<double>(trials);
  summary.mean_gap = summary.inefficient == 0 ? 0.0 : gap_total / static_cast<double>(summary.inefficient);
  return summary;
}

std::string trials_csv(const ExperimentSummary& summary) {
  std::ostringstream os;
  os.precision(17);
  os << "seed,verdict,lp_optimum,gap\n";
  for (const auto& r : summary.records) os << r.seed << "," << r.verdict << "," << r.lp_optimum << "," << r.gap << "\n";
  return os.str();
}

nlohmann::json summary_json(const ExperimentSummary& summary) {
  return {
      {"n", summary.spec.n},
      {"mode", to_string(summary.spec.mode)},
      {"mode_note", "random matrix model is a convention, not a reference distribution"},
      {"sigma", summary.spec.sigma},
      {"seed", summary.spec.seed},
      {"trials", summary.trials},
      {"inefficient", summary.inefficient},
      {"eigenvector_inefficient_fraction", summary.eigenvector_inefficient_fraction},
      {"mean_gap", summary.mean_gap},
      {"max_gap", summary.max_gap},
      {"conflicts", summary.conflicts},
  };
}

}  // namespace pcmeff
