#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knotcol/diagram.hpp"
#include "knotcol/group_ring.hpp"

namespace knotcol {

/// A published colouring polynomial: fixture, pointed group, symmetry
/// variant, and the value as (exponent, coefficient) pairs in the chosen
/// generator of Lambda.
struct GoldenValue {
  std::string knot;
  std::string group;
  std::string basepoint;
  Symmetry symmetry = Symmetry::Identity;
  std::vector<std::pair<long long, RingElement::Coeff>> terms;
};

const std::vector<GoldenValue> &golden_values();

/// Builds each pointed group once.
class GroupCache {
public:
  GroupPtr get(const std::string &descriptor, const std::string &basepoint);

private:
  std::map<std::pair<std::string, std::string>, GroupPtr> groups_;
};

} // namespace knotcol
