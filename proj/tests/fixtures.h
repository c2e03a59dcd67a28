// Small hand-written instances shared by the tests.
#ifndef MBD_TESTS_FIXTURES_H_
#define MBD_TESTS_FIXTURES_H_

#include <string>
#include <vector>

#include "mbd/dpi.h"

namespace fixtures {

inline std::string DataPath(const std::string& name) {
  return std::string(MBD_DATA_DIR) + "/" + name;
}

// Variables A=1, B=2, C=3. Observation: A must not be entailed false.
inline mbd::Dpi AbcTheory(bool with_probabilities = true) {
  mbd::CnfTheory t;
  t.variables = {"A", "B", "C"};
  t.component_sentences = {
      {{{-1, -2}}},     // A -> !B
      {{{-1, 2}}},      // A -> B
      {{{-1, -3}}},     // A -> !C
      {{{-2, 3}}},      // B -> C
      {{{-1, 2, 3}}}};  // A -> B | C
  t.negative = {{{{-1}}}};
  std::optional<std::vector<double>> pr;
  if (with_probabilities) pr = std::vector<double>{.1, .05, .1, .05, .15};
  return mbd::Dpi({"ax1", "ax2", "ax3", "ax4", "ax5"}, t, pr);
}

inline const std::vector<double> kSevenPr = {.26, .18, .21, .41, .18, .40, .18};

// Components ax1..ax7 map to ids 0..6.
inline mbd::Dpi SevenComponents() {
  mbd::ExplicitConflicts ec;
  ec.conflicts = {{0, 1, 4}, {1, 3, 5}, {0, 2, 3}, {0, 4, 5, 6}};
  return mbd::Dpi({"ax1", "ax2", "ax3", "ax4", "ax5", "ax6", "ax7"}, ec,
                  kSevenPr);
}

inline mbd::Dpi Explicit(std::size_t n, std::vector<mbd::ComponentSet> conflicts,
                         std::optional<std::vector<double>> pr = std::nullopt) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  return mbd::Dpi(names, mbd::ExplicitConflicts{std::move(conflicts)}, pr);
}

}  // namespace fixtures

#endif  // MBD_TESTS_FIXTURES_H_
