#include "knotcol/state_sum.hpp"

#include "knotcol/errors.hpp"

namespace knotcol {

Element colouring_weight(const WirtingerCode &w, const Cocycle2 &l, const QuandleColouring &f)
{
  const PointedGroup &g = *l.group;
  Element weight = g.identity();
  for (std::size_t i = 1; i <= w.crossings(); ++i) {
    const auto b = f[w.kappa[i - 1]];
    if (w.epsilon[i - 1] > 0)
      weight = g.multiply(weight, l(f[i - 1], b));
    else
      weight = g.multiply(weight, g.inverse(l(f[i], b)));
  }
  return weight;
}

RingElement based_state_sum(const WirtingerCode &w, const FiniteQuandle &q, const Cocycle2 &l,
                            FiniteQuandle::Index a, const SearchOptions &opt)
{
  if (l.size != q.size())
    throw HypothesisError("cocycle does not match the quandle");
  RingElement r(l.group);
  for (const auto &f : enumerate_quandle_colourings(w, q, a, true, opt))
    r.add(colouring_weight(w, l, f), 1);
  return r;
}

RingElement state_sum(const WirtingerCode &w, const FiniteQuandle &q, const Cocycle2 &l,
                      const SearchOptions &opt)
{
  if (q.size() == 0)
    return RingElement(l.group);
  if (is_connected(q)) {
    FiniteQuandle::Index a = q.basepoint().value_or(0);
    return based_state_sum(w, q, l, a, opt) * static_cast<RingElement::Coeff>(q.size());
  }
  RingElement r(l.group);
  for (FiniteQuandle::Index a = 0; a < q.size(); ++a)
    r += based_state_sum(w, q, l, a, opt);
  return r;
}

QuandleColouring lift_colouring(const WirtingerCode &w, const Colouring &colouring,
                                const Augmentation &aug, FiniteQuandle::Index q)
{
  auto report = verify_augmentation(aug);
  if (!report.ok)
    throw HypothesisError("not an augmentation: " + report.violation);
  if (q >= aug.quandle.size())
    throw std::out_of_range("lift basepoint outside the quandle");
  if (colouring.arcs.size() != w.arcs() || colouring.arcs.front() != aug.phi[q])
    throw HypothesisError("the colouring does not start at phi(q)");
  auto l = partial_longitudes(w, *aug.group, colouring.arcs);
  QuandleColouring lift(w.arcs());
  for (std::size_t i = 0; i < l.size(); ++i)
    lift[i] = aug.act(q, l[i]);
  return lift;
}

std::vector<Colouring> closed_lifting_filter(const std::vector<Colouring> &colourings,
                                             const Augmentation &aug, FiniteQuandle::Index q)
{
  std::vector<Colouring> kept;
  for (const auto &c : colourings)
    if (aug.act(q, c.longitude) == q)
      kept.push_back(c);
  return kept;
}

Crosscheck crosscheck_cp_equals_ss(const GroupPtr &g, const WirtingerCode &w,
                                   const SearchOptions &opt)
{
  CoveringQuandle cov(g);
  Cocycle2 l = cocycle_from_section(cov);
  const FiniteQuandle &q = cov.base().quandle;
  Crosscheck r;
  r.state_sum = state_sum(w, q, l, opt);
  r.expected = colouring_polynomial(w, g, opt).value * static_cast<RingElement::Coeff>(q.size());
  r.equal = r.state_sum == r.expected;
  return r;
}

FiniteQuandle central_extension(const FiniteQuandle &q, const Cocycle2 &l,
                                const std::vector<Element> &lambda_members)
{
  const PointedGroup &g = *l.group;
  const std::size_t m = lambda_members.size();
  std::vector<std::int64_t> pos(g.order(), -1);
  for (std::size_t i = 0; i < m; ++i)
    pos[lambda_members[i]] = static_cast<std::int64_t>(i);
  auto position = [&](Element e) {
    if (pos[e] < 0)
      throw HypothesisError("cocycle value outside the given longitude group");
    return static_cast<FiniteQuandle::Index>(pos[e]);
  };

  const std::size_t n = q.size() * m;
  std::vector<FiniteQuandle::Index> op(n * n);
  for (FiniteQuandle::Index a = 0; a < q.size(); ++a)
    for (std::size_t i = 0; i < m; ++i)
      for (FiniteQuandle::Index b = 0; b < q.size(); ++b) {
        const auto c = q.op(a, b);
        const auto k = position(g.multiply(lambda_members[i], l(a, b)));
        for (std::size_t j = 0; j < m; ++j)
          op[(a * m + i) * n + b * m + j] = static_cast<FiniteQuandle::Index>(c * m + k);
      }
  std::optional<FiniteQuandle::Index> bp;
  if (q.basepoint())
    bp = static_cast<FiniteQuandle::Index>(*q.basepoint() * m + position(g.identity()));
  return FiniteQuandle(n, std::move(op), bp);
}

Specialization specialize_ss_to_cp(const FiniteQuandle &q, const Cocycle2 &l,
                                   const std::vector<Element> &lambda_members,
                                   const WirtingerCode &w, const SearchOptions &opt)
{
  if (!q.basepoint())
    throw HypothesisError("specialization needs a basepoint in the quandle");
  if (!is_connected(q))
    throw HypothesisError("specialization needs a connected quandle");
  const FiniteQuandle ext = central_extension(q, l, lambda_members);
  const std::size_t m = lambda_members.size();
  const FiniteQuandle::Index qt = *ext.basepoint();

  Specialization s;
  s.inner = inner_group(ext);
  s.polynomial = colouring_polynomial(w, s.inner, opt).value;
  const PointedGroup &inn = *s.inner;
  const FiniteQuandle::Index base = *q.basepoint();
  s.specialized = apply_projection(s.polynomial, l.group, [&](Element g) -> std::optional<Element> {
    const std::size_t image = inn.element(g)[qt];
    if (image / m != base)
      return std::nullopt;
    return lambda_members[image % m];
  });
  s.specialized *= static_cast<RingElement::Coeff>(q.size());
  s.state_sum = state_sum(w, q, l, opt);
  s.equal = s.specialized == s.state_sum;
  return s;
}

} // namespace knotcol
