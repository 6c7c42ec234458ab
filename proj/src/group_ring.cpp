#include "knotcol/group_ring.hpp"

#include <sstream>
#include <stdexcept>

#include "knotcol/errors.hpp"

namespace knotcol {

namespace {

RingElement::Coeff checked_add(RingElement::Coeff a, RingElement::Coeff b)
{
  RingElement::Coeff r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("group ring coefficient overflow");
  return r;
}

RingElement::Coeff checked_mul(RingElement::Coeff a, RingElement::Coeff b)
{
  RingElement::Coeff r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("group ring coefficient overflow");
  return r;
}

} // namespace

bool same_carrier(const GroupPtr &a, const GroupPtr &b)
{
  if (a == b)
    return true;
  if (!a || !b)
    return false;
  return a->order() == b->order() && a->elements() == b->elements();
}

RingElement RingElement::one(GroupPtr carrier)
{
  Element e = carrier->identity();
  return monomial(std::move(carrier), e, 1);
}

RingElement RingElement::monomial(GroupPtr carrier, Element g, Coeff c)
{
  RingElement r(std::move(carrier));
  r.add(g, c);
  return r;
}

RingElement::Coeff RingElement::coeff(Element g) const
{
  auto it = terms_.find(g);
  return it == terms_.end() ? 0 : it->second;
}

void RingElement::add(Element g, Coeff c)
{
  if (!carrier_ || g >= carrier_->order())
    throw std::out_of_range("group ring term outside the carrier group");
  if (c == 0)
    return;
  auto [it, inserted] = terms_.emplace(g, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0)
      terms_.erase(it);
  }
}

void RingElement::require_same_carrier(const RingElement &o) const
{
  if (!same_carrier(carrier_, o.carrier_))
    throw std::invalid_argument("group ring carrier mismatch");
}

RingElement &RingElement::operator+=(const RingElement &o)
{
  if (!carrier_)
    carrier_ = o.carrier_;
  require_same_carrier(o);
  for (auto [g, c] : o.terms_)
    add(g, c);
  return *this;
}

RingElement &RingElement::operator-=(const RingElement &o)
{
  if (!carrier_)
    carrier_ = o.carrier_;
  require_same_carrier(o);
  for (auto [g, c] : o.terms_)
    add(g, checked_mul(c, -1));
  return *this;
}

RingElement &RingElement::operator*=(Coeff k)
{
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto &[g, c] : terms_)
    c = checked_mul(c, k);
  return *this;
}

RingElement operator*(const RingElement &a, const RingElement &b)
{
  a.require_same_carrier(b);
  RingElement r(a.carrier_);
  for (auto [u, cu] : a.terms_)
    for (auto [v, cv] : b.terms_)
      r.add(a.carrier_->multiply(u, v), checked_mul(cu, cv));
  return r;
}

bool operator==(const RingElement &a, const RingElement &b)
{
  if (a.terms_.empty() && b.terms_.empty())
    return true;
  return same_carrier(a.carrier_, b.carrier_) && a.terms_ == b.terms_;
}

RingElement ring_multiply(const RingElement &a, const RingElement &b) { return a * b; }

RingElement::Coeff augmentation(const RingElement &a)
{
  RingElement::Coeff s = 0;
  for (auto [g, c] : a.terms())
    s = checked_add(s, c);
  return s;
}

RingElement apply_inversion(const RingElement &a)
{
  RingElement r(a.carrier());
  for (auto [g, c] : a.terms())
    r.add(a.carrier()->inverse(g), c);
  return r;
}

RingElement apply_map(const RingElement &a, const GroupMap &m)
{
  if (!same_carrier(a.carrier(), m.source))
    throw std::invalid_argument("map source does not match the carrier");
  RingElement r(m.target);
  for (auto [g, c] : a.terms()) {
    if (g >= m.image.size())
      throw std::invalid_argument("map undefined on a support element");
    r.add(m.image[g], c);
  }
  return r;
}

RingElement apply_projection(const RingElement &a, const GroupPtr &target,
                             const std::function<std::optional<Element>(Element)> &f)
{
  RingElement r(target);
  for (auto [g, c] : a.terms())
    if (auto h = f(g))
      r.add(*h, c);
  return r;
}

RingElement from_powers(const GroupPtr &carrier, Element t,
                        const std::vector<std::pair<long long, RingElement::Coeff>> &terms)
{
  RingElement r(carrier);
  for (const auto &[k, c] : terms)
    r.add(carrier->power(t, k), c);
  return r;
}

RingElement from_powers(const GroupPtr &carrier,
                        const std::vector<std::pair<long long, RingElement::Coeff>> &terms)
{
  const auto &gen = carrier->longitude().generator;
  if (!gen)
    throw HypothesisError("the longitude group of " + carrier->name() + " is not cyclic");
  return from_powers(carrier, *gen, terms);
}

std::optional<std::size_t> discrete_log(const PointedGroup &g, Element t, Element h)
{
  Element p = g.identity();
  for (std::size_t k = 0; k < g.element_order(t); ++k) {
    if (p == h)
      return k;
    p = g.multiply(p, t);
  }
  return std::nullopt;
}

namespace {

void append_term(std::ostringstream &out, bool first, RingElement::Coeff c,
                 const std::string &body)
{
  if (first) {
    if (c < 0)
      out << "-";
  } else {
    out << (c < 0 ? " - " : " + ");
  }
  RingElement::Coeff mag = c < 0 ? -c : c;
  if (body.empty())
    out << mag;
  else if (mag == 1)
    out << body;
  else
    out << mag << "*" << body;
}

} // namespace

std::string render(const RingElement &a, Element generator, const std::string &variable)
{
  if (a.is_zero())
    return "0";
  const PointedGroup &g = *a.carrier();
  std::map<std::size_t, RingElement::Coeff> poly;
  for (auto [e, c] : a.terms()) {
    auto k = discrete_log(g, generator, e);
    if (!k) {
      poly.clear();
      break;
    }
    poly[*k] = c;
  }

  std::ostringstream out;
  bool first = true;
  if (poly.size() == a.terms().size()) {
    for (auto [k, c] : poly) {
      std::string body = k == 0 ? "" : k == 1 ? variable : variable + "^" + std::to_string(k);
      append_term(out, first, c, body);
      first = false;
    }
    return out.str();
  }
  for (auto [e, c] : a.terms()) {
    append_term(out, first, c, e == g.identity() ? "" : g.format(e));
    first = false;
  }
  return out.str();
}

std::string render(const RingElement &a, const std::string &variable)
{
  if (a.is_zero())
    return "0";
  const auto &lam = a.carrier()->longitude();
  Element t = lam.generator ? *lam.generator : a.carrier()->identity();
  return render(a, t, variable);
}

nlohmann::json to_json(const RingElement &a)
{
  nlohmann::json terms = nlohmann::json::array();
  for (auto [g, c] : a.terms())
    terms.push_back({{"elem", a.carrier()->format(g)}, {"coeff", c}});
  return {{"group", a.carrier() ? a.carrier()->name() : std::string()}, {"terms", terms}};
}

RingElement ring_element_from_json(const nlohmann::json &j, const GroupPtr &carrier)
{
  try {
    if (j.at("group").get<std::string>() != carrier->name())
      throw ParseError("ring element belongs to group '" + j.at("group").get<std::string>() +
                       "', expected '" + carrier->name() + "'");
    RingElement r(carrier);
    for (const auto &t : j.at("terms")) {
      Perm p = Perm::from_cycles(t.at("elem").get<std::string>(), carrier->degree());
      auto e = carrier->find(p);
      if (!e)
        throw ParseError("element " + p.to_cycles() + " is not in " + carrier->name());
      r.add(*e, t.at("coeff").get<RingElement::Coeff>());
    }
    return r;
  } catch (const nlohmann::json::exception &e) {
    throw ParseError(std::string("malformed ring element JSON: ") + e.what());
  }
}

} // namespace knotcol
