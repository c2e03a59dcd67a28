/// @file model.h
/// Cost model: fault probabilities, diagnosis probabilities and node costs.
#ifndef MBD_MODEL_H_
#define MBD_MODEL_H_

#include <compare>
#include <cstddef>
#include <ostream>
#include <vector>

#include "mbd/component_set.h"

namespace mbd {

/// Search cost of a node; higher is better.
///
/// Either negative infinity or a finite score. Under MaxProb the score is the
/// natural log of the node probability, under MinCard it is the negated
/// cardinality. Scores are only ever copied between nodes, never
/// recombined, so exact comparison is meaningful.
class Cost {
 public:
  static constexpr Cost NegInfinity() { return Cost(); }
  static constexpr Cost Finite(double score) { return Cost(score); }

  constexpr bool is_neg_infinity() const { return neg_infinity_; }
  /// Precondition: finite.
  constexpr double score() const { return score_; }

  friend constexpr bool operator==(const Cost& a, const Cost& b) {
    if (a.neg_infinity_ || b.neg_infinity_)
      return a.neg_infinity_ == b.neg_infinity_;
    return a.score_ == b.score_;
  }
  friend constexpr std::strong_ordering operator<=>(const Cost& a,
                                                    const Cost& b) {
    if (a.neg_infinity_ || b.neg_infinity_) {
      return b.neg_infinity_ <=> a.neg_infinity_;
    }
    if (a.score_ < b.score_) return std::strong_ordering::less;
    if (b.score_ < a.score_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  constexpr Cost() : neg_infinity_(true), score_(0) {}
  constexpr explicit Cost(double score) : neg_infinity_(false), score_(score) {}

  bool neg_infinity_;
  double score_;
};

std::ostream& operator<<(std::ostream& os, const Cost& c);

enum class CostMode { kMaxProb, kMinCard };

/// Default adjustment constant for cost_adjust; any value in (0, 0.5) works.
inline constexpr double kDefaultAdjustment = 0.25;

/// Probability of X being the actual diagnosis under independent faults:
/// prod_{ax in X} pr(ax) * prod_{ax in K \ X} (1 - pr(ax)).
/// Evaluated in log space. Throws DomainError for ids outside K or
/// probabilities outside (0,1).
double DiagnosisProbability(const ComponentSet& x,
                            const std::vector<double>& pr);

/// Log of DiagnosisProbability.
double LogDiagnosisProbability(const ComponentSet& x,
                               const std::vector<double>& pr);

/// Scales every probability by c so that all values drop below 0.5.
/// Throws ConfigError unless 0 < c < 0.5, DomainError for pr outside (0,1).
std::vector<double> CostAdjust(const std::vector<double>& pr,
                               double c = kDefaultAdjustment);

/// True iff every probability is strictly below 0.5.
bool IsCostAdjusted(const std::vector<double>& pr);

/// Normalizes a list of probabilities to sum to one.
std::vector<double> Normalize(const std::vector<double>& values);

/// Fault probabilities plus the preference criterion used to rank nodes.
class CostModel {
 public:
  /// Most-probable-first. Probabilities must already be cost-adjusted.
  static CostModel MaxProb(std::vector<double> pr);
  /// Minimum-cardinality-first over `num_components` components.
  static CostModel MinCard(std::size_t num_components);

  CostMode mode() const { return mode_; }
  std::size_t num_components() const { return num_components_; }
  /// Empty for MinCard.
  const std::vector<double>& probabilities() const { return pr_; }

  /// Intrinsic node cost f(n). Bit-deterministic for a given member set.
  Cost f(const ComponentSet& members) const;

  /// Value shown to users: the diagnosis probability (MaxProb) or the
  /// cardinality (MinCard).
  double display_value(const ComponentSet& members) const;

 private:
  CostModel() = default;

  CostMode mode_ = CostMode::kMinCard;
  std::size_t num_components_ = 0;
  std::vector<double> pr_;
  std::vector<double> log_odds_;   // log(pr / (1 - pr)) per component
  double log_all_healthy_ = 0;     // sum of log(1 - pr) over K
};

}  // namespace mbd

#endif  // MBD_MODEL_H_
