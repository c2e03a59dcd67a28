/// @file model.cc
#include "mbd/model.h"

#include <cmath>
#include <numeric>
#include <sstream>

#include "mbd/error.h"

namespace mbd {

namespace {

void CheckProbabilities(const std::vector<double>& pr) {
  for (std::size_t i = 0; i < pr.size(); ++i) {
    if (!(pr[i] > 0.0 && pr[i] < 1.0)) {
      std::ostringstream msg;
      msg << "fault probability of component " << i << " is " << pr[i]
          << ", expected a value in (0,1)";
      throw DomainError(msg.str());
    }
  }
}

void CheckMembers(const ComponentSet& x, std::size_t k) {
  if (!x.empty() && x.ids().back() >= k) {
    std::ostringstream msg;
    msg << "component " << x.ids().back() << " is outside K (|K| = " << k
        << ")";
    throw DomainError(msg.str());
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Cost& c) {
  if (c.is_neg_infinity()) return os << "-inf";
  return os << c.score();
}

double LogDiagnosisProbability(const ComponentSet& x,
                               const std::vector<double>& pr) {
  CheckProbabilities(pr);
  CheckMembers(x, pr.size());
  double log_p = 0;
  // Ascending component order keeps repeated evaluations bit-identical.
  for (std::size_t i = 0; i < pr.size(); ++i) {
    log_p += x.contains(static_cast<ComponentId>(i)) ? std::log(pr[i])
                                                      : std::log1p(-pr[i]);
  }
  return log_p;
}

double DiagnosisProbability(const ComponentSet& x,
                            const std::vector<double>& pr) {
  return std::exp(LogDiagnosisProbability(x, pr));
}

std::vector<double> CostAdjust(const std::vector<double>& pr, double c) {
  if (!(c > 0.0 && c < 0.5)) {
    std::ostringstream msg;
    msg << "cost adjustment constant " << c << " not in (0, 0.5)";
    throw ConfigError(msg.str());
  }
  CheckProbabilities(pr);
  std::vector<double> out(pr.size());
  for (std::size_t i = 0; i < pr.size(); ++i) out[i] = c * pr[i];
  return out;
}

bool IsCostAdjusted(const std::vector<double>& pr) {
  for (double p : pr) {
    if (!(p < 0.5)) return false;
  }
  return true;
}

std::vector<double> Normalize(const std::vector<double>& values) {
  double total = std::accumulate(values.begin(), values.end(), 0.0);
  std::vector<double> out(values.size());
  if (total <= 0) return out;
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] / total;
  return out;
}

CostModel CostModel::MaxProb(std::vector<double> pr) {
  CheckProbabilities(pr);
  if (!IsCostAdjusted(pr)) {
    throw ConfigError(
        "MaxProb requires cost-adjusted probabilities (all below 0.5); "
        "apply CostAdjust first");
  }
  CostModel m;
  m.mode_ = CostMode::kMaxProb;
  m.num_components_ = pr.size();
  m.log_odds_.resize(pr.size());
  for (std::size_t i = 0; i < pr.size(); ++i) {
    m.log_odds_[i] = std::log(pr[i]) - std::log1p(-pr[i]);
    m.log_all_healthy_ += std::log1p(-pr[i]);
  }
  m.pr_ = std::move(pr);
  return m;
}

CostModel CostModel::MinCard(std::size_t num_components) {
  CostModel m;
  m.mode_ = CostMode::kMinCard;
  m.num_components_ = num_components;
  return m;
}

Cost CostModel::f(const ComponentSet& members) const {
  if (mode_ == CostMode::kMinCard) {
    return Cost::Finite(-static_cast<double>(members.size()));
  }
  // Members first, constant last: equal-probability components then yield
  // bit-identical scores regardless of which ids they carry.
  double sum = 0;
  for (ComponentId id : members) sum += log_odds_[id];
  return Cost::Finite(sum + log_all_healthy_);
}

double CostModel::display_value(const ComponentSet& members) const {
  if (mode_ == CostMode::kMinCard) return static_cast<double>(members.size());
  return std::exp(f(members).score());
}

}  // namespace mbd
