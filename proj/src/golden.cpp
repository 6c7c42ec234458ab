#include "knotcol/golden.hpp"

namespace knotcol {

namespace {

constexpr Symmetry I = Symmetry::Identity, Inv = Symmetry::Inverse, Rev = Symmetry::Reverse,
                   Obv = Symmetry::Obverse;

const char *const kA5 = "(1,2,3,4,5)";
const char *const kA7 = "(1,2,3,4,5,6,7)";
const char *const kOrder3 = "matrix:0,1,-1,1";

} // namespace

const std::vector<GoldenValue> &golden_values()
{
  static const std::vector<GoldenValue> values = {
      {"trefoil_left", "A5", kA5, I, {{0, 1}, {1, 5}}},
      {"trefoil_right", "A5", kA5, I, {{0, 1}, {-1, 5}}},

      {"kinoshita_terasaka", "PSL2_7", "", I, {{0, 1}, {5, 7}, {6, 7}}},
      {"conway", "PSL2_7", "", I, {{0, 1}, {5, 7}, {6, 7}}},
      {"kinoshita_terasaka", "PSL2_7", "", Inv, {{0, 1}, {1, 7}, {2, 7}}},
      {"conway", "PSL2_7", "", Inv, {{0, 1}, {1, 7}, {2, 7}}},

      {"kinoshita_terasaka", "PSL2_7", kOrder3, I, {{0, 1}, {1, 6}}},
      {"conway", "PSL2_7", kOrder3, I, {{0, 1}, {1, 12}}},
      {"kinoshita_terasaka", "PSL2_7", kOrder3, Inv, {{0, 1}, {2, 6}}},
      {"conway", "PSL2_7", kOrder3, Inv, {{0, 1}, {2, 12}}},

      {"kinoshita_terasaka", "A7", kA7, I, {{0, 1}, {2, 7}, {5, 28}, {6, 28}}},
      {"conway", "A7", kA7, I, {{0, 1}, {2, 7}, {3, 7}, {5, 21}, {6, 14}}},
      {"kinoshita_terasaka", "A7", kA7, Inv, {{0, 1}, {1, 28}, {2, 28}, {5, 7}}},
      {"conway", "A7", kA7, Inv, {{0, 1}, {1, 14}, {2, 21}, {4, 7}, {5, 7}}},

      {"kinoshita_terasaka", "M11", "", I, {{0, 1}, {3, 11}, {7, 11}}},
      {"conway", "M11", "", I, {{0, 1}, {3, 11}, {7, 11}}},
      {"kinoshita_terasaka", "M11", "", Inv, {{0, 1}, {4, 11}, {8, 11}}},
      {"conway", "M11", "", Inv, {{0, 1}, {4, 11}, {8, 11}}},
      {"kinoshita_terasaka", "M11", "", Obv, {{0, 1}, {4, 11}, {8, 22}}},
      {"conway", "M11", "", Obv, {{0, 1}, {4, 11}, {6, 11}, {8, 11}}},
      {"kinoshita_terasaka", "M11", "", Rev, {{0, 1}, {3, 22}, {7, 11}}},
      {"conway", "M11", "", Rev, {{0, 1}, {3, 11}, {5, 11}, {7, 11}}},

      {"bretzel_3_5_7", "M11", "", I, {{0, 1}, {1, 11}}},
      {"bretzel_3_5_7", "M11", "", Obv, {{0, 1}, {7, 11}}},
      {"bretzel_3_5_7", "M11", "", Inv, {{0, 1}, {10, 11}}},
      {"bretzel_3_5_7", "M11", "", Rev, {{0, 1}, {4, 11}}},

      {"8_17", "M11", "", I, {{0, 1}, {5, 11}, {6, 11}}},
      {"8_17", "M11", "", Rev, {{0, 1}}},
  };
  return values;
}

GroupPtr GroupCache::get(const std::string &descriptor, const std::string &basepoint)
{
  auto &slot = groups_[{descriptor, basepoint}];
  if (!slot)
    slot = build_named_group(descriptor, basepoint);
  return slot;
}

} // namespace knotcol
