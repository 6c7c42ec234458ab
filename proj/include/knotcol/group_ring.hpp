#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "knotcol/group.hpp"

namespace knotcol {

/// A finite formal sum of group elements with integer coefficients, an element
/// of the group ring ZG. Zero coefficients are never stored.
class RingElement {
public:
  using Coeff = std::int64_t;
  using Terms = std::map<Element, Coeff>;

  RingElement() = default;
  explicit RingElement(GroupPtr carrier) : carrier_(std::move(carrier)) {}

  static RingElement zero(GroupPtr carrier) { return RingElement(std::move(carrier)); }
  static RingElement one(GroupPtr carrier);
  static RingElement monomial(GroupPtr carrier, Element g, Coeff c = 1);

  const GroupPtr &carrier() const { return carrier_; }
  const Terms &terms() const { return terms_; }
  Coeff coeff(Element g) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c*g in place (overflow-checked).
  void add(Element g, Coeff c);

  RingElement &operator+=(const RingElement &o);
  RingElement &operator-=(const RingElement &o);
  RingElement &operator*=(Coeff k);

  friend RingElement operator+(RingElement a, const RingElement &b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement &b) { return a -= b; }
  friend RingElement operator*(RingElement a, Coeff k) { return a *= k; }
  friend RingElement operator*(Coeff k, RingElement a) { return a *= k; }
  friend RingElement operator*(const RingElement &a, const RingElement &b);
  friend bool operator==(const RingElement &a, const RingElement &b);

private:
  void require_same_carrier(const RingElement &o) const;

  GroupPtr carrier_;
  Terms terms_;
};

/// Two carriers are interchangeable when they hold the same element list.
bool same_carrier(const GroupPtr &a, const GroupPtr &b);

RingElement ring_multiply(const RingElement &a, const RingElement &b);

/// Sum of all coefficients.
RingElement::Coeff augmentation(const RingElement &a);

/// g -> g^-1, extended linearly.
RingElement apply_inversion(const RingElement &a);

/// Linear extension of an element map (obversion, reversion, ...). The map
/// must be defined on the whole support.
RingElement apply_map(const RingElement &a, const GroupMap &m);

/// Linear extension of a partial map into another carrier; elements mapped
/// to nullopt are sent to zero.
RingElement apply_projection(const RingElement &a, const GroupPtr &target,
                             const std::function<std::optional<Element>(Element)> &f);

/// sum of c * t^k over the given (k, c) pairs; negative k allowed.
RingElement from_powers(const GroupPtr &carrier, Element t,
                        const std::vector<std::pair<long long, RingElement::Coeff>> &terms);
/// Same, with t the chosen generator of the carrier's longitude group.
RingElement from_powers(const GroupPtr &carrier,
                        const std::vector<std::pair<long long, RingElement::Coeff>> &terms);

/// Exponent k with g = t^k, 0 <= k < ord(t), if g lies in <t>.
std::optional<std::size_t> discrete_log(const PointedGroup &g, Element t, Element h);

/// Polynomial form `1 + 11*t^3 + 11*t^7` in the chosen generator of the
/// carrier's longitude group when the support lies in it, otherwise an
/// element sum such as `1 + 2*(1,2,3)`.
std::string render(const RingElement &a, const std::string &variable = "t");
/// Same, with an explicit generator.
std::string render(const RingElement &a, Element generator, const std::string &variable);

/// {"group": name, "terms": [{"elem": "(1,2,3)", "coeff": n}, ...]}
nlohmann::json to_json(const RingElement &a);
RingElement ring_element_from_json(const nlohmann::json &j, const GroupPtr &carrier);

} // namespace knotcol
