/// @file harness.h
/// Brute-force oracles, a seeded random DPI generator and the benchmark CSV
/// schema.
#ifndef MBD_HARNESS_H_
#define MBD_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "mbd/dpi.h"
#include "mbd/model.h"

namespace mbd {

/// Largest |K| the exhaustive oracles accept.
inline constexpr std::size_t kBruteForceLimit = 20;

/// All minimal diagnoses by subset enumeration in cardinality order: keeps X
/// when is_diagnosis(X) holds and no kept set is a subset of X. Sorted by
/// cost (descending), ties by member order. Throws ConfigError beyond
/// kBruteForceLimit.
std::vector<ComponentSet> BruteForceMinDiagnoses(const Dpi& dpi,
                                                 const CostModel& model);

/// All minimal conflicts by the same enumeration, in cardinality order.
std::vector<ComponentSet> BruteForceMinConflicts(const Dpi& dpi);

/// True iff `x` intersects every set in `sets`.
bool IsHittingSet(const ComponentSet& x, const std::vector<ComponentSet>& sets);

/// |minC| * |C_max|: the structural bound on simultaneously stored tree
/// nodes of the linear-space search.
std::size_t LinearSpaceBound(const std::vector<ComponentSet>& min_conflicts);

/// A uniformly shuffled greedy reduction of K to a minimal diagnosis.
/// Requires violates(empty set) to be false.
ComponentSet RandomMinimalDiagnosis(const Dpi& dpi, std::mt19937_64& rng);

enum class GeneratorMode { kExplicitConflicts, kCnf };

struct GeneratorParams {
  std::uint64_t seed = 1;
  std::size_t num_components = 8;
  std::size_t conflict_count = 3;
  std::size_t conflict_size_min = 2;
  std::size_t conflict_size_max = 3;
  double pr_min = 0.01;
  double pr_max = 0.49;
  GeneratorMode mode = GeneratorMode::kExplicitConflicts;
  /// CNF mode: propositional variables (at least 2).
  std::size_t num_variables = 8;
  /// CNF mode: regenerate until the instance has at most this many minimal
  /// conflicts (0 disables the filter; requires |K| <= kBruteForceLimit).
  std::size_t max_minimal_conflicts = 0;
};

/// Deterministic per seed. Explicit mode draws conflict_count random
/// subsets and subset-minimizes them. CNF mode builds implication chains
/// from a positive measurement to a forbidden literal, so each chain is a
/// conflict, and fills the remaining components with random implications.
/// Every instance has at least one minimal diagnosis. Probabilities are
/// drawn uniformly from [pr_min, pr_max]. Throws ConfigError for degenerate
/// parameters.
Dpi GenerateRandomDpi(const GeneratorParams& params);

/// One benchmark CSV row.
struct BenchRow {
  std::string scenario;
  std::string algorithm;
  std::size_t ld = 0;
  std::string mode;
  std::string selector;
  double time_ms = 0;
  std::size_t peak_nodes = 0;
  std::size_t conflicts_computed = 0;
};

void WriteBenchHeader(std::ostream& os);
void WriteBenchRow(std::ostream& os, const BenchRow& row);

}  // namespace mbd

#endif  // MBD_HARNESS_H_
