#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pcmeff/pcm.hpp"

namespace pcmeff {

/// Portable random source: std::mt19937_64 (fully defined by the C++
/// standard) with hand-written transforms, since the standard distributions
/// are implementation-defined.
///   uniform01  : top 53 bits of one draw, times 2^-53, in [0, 1)
///   index(k)   : rejection sampling on whole draws, uniform in [0, k)
///   normal     : Box-Muller, cos branch only, one normal per two draws
class PortableRng {
 public:
  explicit PortableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01();
  std::size_t index(std::size_t k);
  double normal();

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer; used to derive independent per-trial seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

enum class GeneratorMode { SaatyDiscrete, LognormalPerturbedConsistent };

const char* to_string(GeneratorMode mode) noexcept;
GeneratorMode generator_mode_from_string(std::string_view name);

inline constexpr double kDefaultSigma = 0.35;

struct GeneratorSpec {
  std::size_t n = 4;
  GeneratorMode mode = GeneratorMode::SaatyDiscrete;
  double sigma = kDefaultSigma;  // log-scale noise, lognormal mode only
  std::uint64_t seed = 0;
};

/// saaty_discrete: each upper-triangle entry uniform over
///   {1/9, ..., 1/2, 1, 2, ..., 9} (17 values).
/// lognormal_perturbed_consistent: log w_i uniform on [-ln 3, ln 3], then
///   a_ij = (w_i / w_j) * exp(sigma * z_ij) above the diagonal.
/// Lower triangle holds the reciprocals. Throws ValidationError on n < 3 or
/// sigma < 0.
PairwiseComparisonMatrix generate(const GeneratorSpec& spec);

struct TrialRecord {
  std::uint64_t seed = 0;      // seed used to generate this trial's matrix
  std::string verdict;         // "efficient", "inefficient" or "conflict"
  double lp_optimum = 0.0;
  double gap = 0.0;            // max residual improvement of the dominator
};

struct ExperimentSummary {
  GeneratorSpec spec;
  std::size_t trials = 0;
  std::size_t inefficient = 0;
  std::size_t conflicts = 0;
  double eigenvector_inefficient_fraction = 0.0;
  double mean_gap = 0.0;  // over inefficient trials
  double max_gap = 0.0;
  std::vector<TrialRecord> records;
};

/// Trial k uses seed splitmix64(spec.seed + k) for its matrix. Each trial
/// tests the principal eigenvector; VerdictConflicts are counted, not thrown.
ExperimentSummary run_experiment(const GeneratorSpec& spec, std::size_t trials);

/// "seed,verdict,lp_optimum,gap" header plus one row per trial.
std::string trials_csv(const ExperimentSummary& summary);
nlohmann::json summary_json(const ExperimentSummary& summary);

}  // namespace pcmeff
