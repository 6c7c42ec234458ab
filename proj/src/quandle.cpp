#include "knotcol/quandle.hpp"

#include <sstream>

#include "knotcol/errors.hpp"
#include "knotcol/group_ring.hpp"

namespace knotcol {

FiniteQuandle::FiniteQuandle(std::size_t size, std::vector<Index> op, std::optional<Index> basepoint)
    : size_(size), op_(std::move(op)), basepoint_(basepoint)
{
  if (op_.size() != size_ * size_)
    throw HypothesisError("quandle table has the wrong size");
  if (basepoint_ && *basepoint_ >= size_)
    throw HypothesisError("quandle basepoint out of range");
  const Index unset = static_cast<Index>(size_);
  inv_.assign(size_ * size_, unset);
  for (Index b = 0; b < size_; ++b)
    for (Index a = 0; a < size_; ++a) {
      Index c = op_[a * size_ + b];
      if (c >= size_ || inv_[c * size_ + b] != unset)
        throw HypothesisError("right translation by " + std::to_string(b) + " is not a bijection");
      inv_[c * size_ + b] = a;
    }
}

AxiomReport verify_quandle_axioms(const FiniteQuandle &q)
{
  using I = FiniteQuandle::Index;
  const I n = static_cast<I>(q.size());
  auto fail = [](std::string msg) { return AxiomReport{false, std::move(msg)}; };
  for (I a = 0; a < n; ++a)
    if (q.op(a, a) != a)
      return fail("(Q1) fails: " + std::to_string(a) + "*" + std::to_string(a) + " != " +
                  std::to_string(a));
  for (I a = 0; a < n; ++a)
    for (I b = 0; b < n; ++b)
      if (q.inv(q.op(a, b), b) != a || q.op(q.inv(a, b), b) != a)
        return fail("(Q2) fails at a=" + std::to_string(a) + ", b=" + std::to_string(b));
  for (I a = 0; a < n; ++a)
    for (I b = 0; b < n; ++b)
      for (I c = 0; c < n; ++c)
        if (q.op(q.op(a, b), c) != q.op(q.op(a, c), q.op(b, c)))
          return fail("(Q3) fails at a=" + std::to_string(a) + ", b=" + std::to_string(b) +
                      ", c=" + std::to_string(c));
  return {};
}

FiniteQuandle::Index ConjugationQuandle::index_of(Element g) const
{
  if (g >= index.size() || index[g] < 0)
    throw std::invalid_argument("element is not in the quandle");
  return static_cast<FiniteQuandle::Index>(index[g]);
}

ConjugationQuandle class_quandle(const GroupPtr &g, Element x)
{
  ConjugationQuandle c;
  c.group = g;
  c.elements = x == g->basepoint() ? g->basepoint_class() : conjugacy_class(*g, x);
  c.index.assign(g->order(), -1);
  for (std::size_t i = 0; i < c.elements.size(); ++i)
    c.index[c.elements[i]] = static_cast<std::int64_t>(i);
  const std::size_t n = c.elements.size();
  std::vector<FiniteQuandle::Index> op(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      op[a * n + b] = static_cast<FiniteQuandle::Index>(
          c.index[g->conjugate(c.elements[a], c.elements[b])]);
  c.quandle = FiniteQuandle(n, std::move(op), c.index_of(x));
  return c;
}

ConjugationQuandle conjugation_quandle(const GroupPtr &g)
{
  if (!g->is_colouring_group())
    throw HypothesisError(g->name() + " with basepoint " + g->format(g->basepoint()) +
                          " is not a colouring group");
  return class_quandle(g, g->basepoint());
}

GroupPtr inner_group(const FiniteQuandle &q)
{
  const std::size_t n = q.size();
  std::vector<Perm> gens;
  auto translation = [&](FiniteQuandle::Index b) {
    std::vector<Perm::Point> im(n);
    for (FiniteQuandle::Index a = 0; a < n; ++a)
      im[a] = static_cast<Perm::Point>(q.op(a, b));
    return Perm(std::move(im));
  };
  for (FiniteQuandle::Index b = 0; b < n; ++b)
    gens.push_back(translation(b));
  Perm bp = q.basepoint() ? translation(*q.basepoint()) : Perm::identity(n);
  return PointedGroup::from_generators("Inn(Q)", gens, bp, n);
}

bool is_connected(const FiniteQuandle &q)
{
  if (q.size() == 0)
    return true;
  std::vector<bool> seen(q.size(), false);
  std::vector<FiniteQuandle::Index> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (FiniteQuandle::Index b = 0; b < q.size(); ++b) {
      auto c = q.op(queue[head], b);
      if (!seen[c]) {
        seen[c] = true;
        queue.push_back(c);
      }
    }
  return queue.size() == q.size();
}

FiniteQuandle trivial_quandle(std::size_t size)
{
  std::vector<FiniteQuandle::Index> op(size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b)
      op[a * size + b] = static_cast<FiniteQuandle::Index>(a);
  return FiniteQuandle(size, std::move(op));
}

// --- covering quandle ----------------------------------------------------

CoveringQuandle::CoveringQuandle(const GroupPtr &g)
    : group_(g), base_(conjugation_quandle(g)), members_(g->commutator().members)
{
  member_index_.assign(g->order(), -1);
  for (std::size_t i = 0; i < members_.size(); ++i)
    member_index_[members_[i]] = static_cast<std::int64_t>(i);

  const Element x = g->basepoint();
  const std::size_t none = members_.size();
  proj_.resize(members_.size());
  section_.assign(base_.elements.size(), static_cast<Index>(none));
  // members_ is ascending, so the first hit per fibre has the smallest g
  for (std::size_t i = 0; i < members_.size(); ++i) {
    auto a = base_.index_of(g->conjugate(x, members_[i]));
    proj_[i] = a;
    if (section_[a] == none)
      section_[a] = static_cast<Index>(i);
  }
  for (Index s : section_)
    if (s == none)
      throw HypothesisError("G' does not act transitively on the class of x");
}

CoveringQuandle::Index CoveringQuandle::from_g(Element g) const
{
  if (g >= member_index_.size() || member_index_[g] < 0)
    throw std::invalid_argument("element is not in the commutator subgroup");
  return static_cast<Index>(member_index_[g]);
}

CoveringQuandle::Index CoveringQuandle::op(Index e, Index f) const
{
  const PointedGroup &g = *group_;
  Element a = base_.elements[proj_[e]];
  Element b = base_.elements[proj_[f]];
  return from_g(g.multiply(g.multiply(members_[e], g.inverse(a)), b));
}

CoveringQuandle::Index CoveringQuandle::inv(Index e, Index f) const
{
  const PointedGroup &g = *group_;
  Element a = base_.elements[proj_[e]];
  Element b = base_.elements[proj_[f]];
  return from_g(g.multiply(g.multiply(members_[e], a), g.inverse(b)));
}

CoveringQuandle::Index CoveringQuandle::deck(Element lambda, Index e) const
{
  if (!group_->longitude().subgroup.contains(lambda))
    throw std::invalid_argument("deck transformation outside the longitude group");
  return from_g(group_->multiply(lambda, members_[e]));
}

Element CoveringQuandle::fibre_coordinate(Index e) const
{
  Element gs = members_[section_[proj_[e]]];
  return group_->multiply(members_[e], group_->inverse(gs));
}

FiniteQuandle CoveringQuandle::materialize(std::size_t limit) const
{
  const std::size_t n = size();
  if (n > limit)
    throw LimitExceeded("covering quandle of size " + std::to_string(n) +
                        " exceeds the table limit " + std::to_string(limit));
  std::vector<FiniteQuandle::Index> tab(n * n);
  for (Index e = 0; e < n; ++e)
    for (Index f = 0; f < n; ++f)
      tab[e * n + f] = op(e, f);
  return FiniteQuandle(n, std::move(tab), section(*base_.quandle.basepoint()));
}

CoveringReport verify_covering(const CoveringQuandle &c)
{
  using I = CoveringQuandle::Index;
  const I n = static_cast<I>(c.size());
  const auto &q = c.base().quandle;
  const auto &lam = c.group()->longitude().subgroup.members;
  auto fail = [](std::string m) { return CoveringReport{false, std::move(m)}; };

  for (I e = 0; e < n; ++e)
    for (I f = 0; f < n; ++f) {
      const I ef = c.op(e, f);
      if (c.projection(ef) != q.op(c.projection(e), c.projection(f)))
        return fail("projection is not a homomorphism at (" + std::to_string(e) + "," +
                    std::to_string(f) + ")");
      if (c.inv(ef, f) != e)
        return fail("right translation not inverted at (" + std::to_string(e) + "," +
                    std::to_string(f) + ")");
      for (Element l : lam) {
        if (c.deck(l, ef) != c.op(c.deck(l, e), f))
          return fail("(E1) left compatibility fails");
        if (c.op(e, c.deck(l, f)) != ef)
          return fail("(E1) right invariance fails");
      }
    }

  const std::size_t fibre = n / q.size();
  if (fibre * q.size() != n || fibre != lam.size())
    return fail("(E2) fibre size differs from |Lambda|");
  for (I e = 0; e < n; ++e) {
    std::vector<bool> hit(n, false);
    for (Element l : lam) {
      I d = c.deck(l, e);
      if (hit[d] || c.projection(d) != c.projection(e))
        return fail("(E2) Lambda does not act freely on the fibre of " + std::to_string(e));
      hit[d] = true;
    }
  }

  std::vector<bool> seen(n, false);
  std::vector<I> queue{0};
  seen[0] = true;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (I f = 0; f < n; ++f) {
      I d = c.op(queue[h], f);
      if (!seen[d]) {
        seen[d] = true;
        queue.push_back(d);
      }
    }
  if (queue.size() != n)
    return fail("covering quandle is not connected");
  return {};
}

// --- 2-cocycles ----------------------------------------------------------

Cocycle2 cocycle_from_section(const CoveringQuandle &c, const std::vector<CoveringQuandle::Index> &s)
{
  if (!c.group()->longitude().is_abelian)
    throw HypothesisError("the longitude group is not abelian");
  const auto &q = c.base().quandle;
  const std::size_t n = q.size();
  if (s.size() != n)
    throw std::invalid_argument("section has the wrong size");
  const PointedGroup &g = *c.group();
  for (std::size_t a = 0; a < n; ++a)
    if (c.projection(s[a]) != a)
      throw std::invalid_argument("section is not a right inverse of the projection");

  Cocycle2 l{c.group(), n, std::vector<Element>(n * n)};
  for (FiniteQuandle::Index a = 0; a < n; ++a)
    for (FiniteQuandle::Index b = 0; b < n; ++b) {
      auto lhs = c.op(s[a], s[b]);
      auto rhs = s[q.op(a, b)];
      Element v = g.multiply(c.g_part(lhs), g.inverse(c.g_part(rhs)));
      if (!g.longitude().subgroup.contains(v))
        throw std::logic_error("section discrepancy outside the longitude group");
      l.values[a * n + b] = v;
    }
  return l;
}

Cocycle2 cocycle_from_section(const CoveringQuandle &c)
{
  std::vector<CoveringQuandle::Index> s(c.base().quandle.size());
  for (std::size_t a = 0; a < s.size(); ++a)
    s[a] = c.section(static_cast<FiniteQuandle::Index>(a));
  return cocycle_from_section(c, s);
}

bool is_cocycle(const FiniteQuandle &q, const Cocycle2 &l)
{
  const PointedGroup &g = *l.group;
  using I = FiniteQuandle::Index;
  const I n = static_cast<I>(q.size());
  for (I a = 0; a < n; ++a)
    for (I b = 0; b < n; ++b)
      for (I c = 0; c < n; ++c) {
        Element lhs = g.multiply(l(a, b), l(q.op(a, b), c));
        Element rhs = g.multiply(l(a, c), l(q.op(a, c), q.op(b, c)));
        if (lhs != rhs)
          return false;
      }
  return true;
}

AxiomReport verify_cocycle(const FiniteQuandle &q, const Cocycle2 &l)
{
  if (l.size != q.size() || l.values.size() != q.size() * q.size())
    return {false, "cocycle table size does not match the quandle"};
  for (FiniteQuandle::Index a = 0; a < q.size(); ++a)
    if (l(a, a) != l.group->identity())
      return {false, "normalization fails at a=" + std::to_string(a)};
  if (!is_cocycle(q, l))
    return {false, "cocycle condition fails"};
  return {};
}

Cocycle2 coboundary(const FiniteQuandle &q, const GroupPtr &group, const std::vector<Element> &mu)
{
  const std::size_t n = q.size();
  if (mu.size() != n)
    throw std::invalid_argument("1-cochain has the wrong size");
  Cocycle2 l{group, n, std::vector<Element>(n * n)};
  for (FiniteQuandle::Index a = 0; a < n; ++a)
    for (FiniteQuandle::Index b = 0; b < n; ++b)
      l.values[a * n + b] = group->multiply(mu[a], group->inverse(mu[q.op(a, b)]));
  return l;
}

Cocycle2 cocycle_product(const Cocycle2 &a, const Cocycle2 &b)
{
  if (a.size != b.size || !same_carrier(a.group, b.group))
    throw std::invalid_argument("cocycles live on different quandles or groups");
  Cocycle2 r{a.group, a.size, std::vector<Element>(a.values.size())};
  for (std::size_t i = 0; i < a.values.size(); ++i)
    r.values[i] = a.group->multiply(a.values[i], b.values[i]);
  return r;
}

std::optional<std::vector<Element>> cohomology_witness(const FiniteQuandle &q, const Cocycle2 &l1,
                                                       const Cocycle2 &l2,
                                                       const std::vector<Element> &lambda_members)
{
  const PointedGroup &g = *l1.group;
  const std::size_t n = q.size();
  const std::size_t none = g.order();
  // r(a,b) = mu(a) mu(a*b)^-1, so mu(a*b) = r(a,b)^-1 mu(a)
  std::vector<Element> ratio(n * n);
  for (std::size_t i = 0; i < n * n; ++i)
    ratio[i] = g.multiply(g.inverse(l1.values[i]), l2.values[i]);

  std::vector<Element> mu(n, none);
  for (FiniteQuandle::Index root = 0; root < n; ++root) {
    if (mu[root] != none)
      continue;
    bool found = false;
    for (Element start : lambda_members) {
      std::vector<Element> trial = mu;
      trial[root] = start;
      std::vector<FiniteQuandle::Index> queue{root};
      bool ok = true;
      for (std::size_t h = 0; h < queue.size() && ok; ++h) {
        auto a = queue[h];
        for (FiniteQuandle::Index b = 0; b < n && ok; ++b) {
          auto c = q.op(a, b);
          Element want = g.multiply(g.inverse(ratio[a * n + b]), trial[a]);
          if (trial[c] == none) {
            trial[c] = want;
            queue.push_back(c);
          } else if (trial[c] != want) {
            ok = false;
          }
        }
      }
      if (ok) {
        mu = std::move(trial);
        found = true;
        break;
      }
    }
    if (!found)
      return std::nullopt;
  }
  return mu;
}

bool is_cohomologous(const FiniteQuandle &q, const Cocycle2 &l1, const Cocycle2 &l2,
                     const std::vector<Element> &lambda_members)
{
  return cohomology_witness(q, l1, l2, lambda_members).has_value();
}

// --- augmentations -------------------------------------------------------

Augmentation inner_augmentation(const FiniteQuandle &q)
{
  Augmentation aug;
  aug.quandle = q;
  aug.group = inner_group(q);
  const PointedGroup &g = *aug.group;
  const std::size_t n = q.size();
  aug.phi.resize(n);
  for (FiniteQuandle::Index b = 0; b < n; ++b) {
    std::vector<Perm::Point> im(n);
    for (FiniteQuandle::Index a = 0; a < n; ++a)
      im[a] = static_cast<Perm::Point>(q.op(a, b));
    aug.phi[b] = g.index_of(Perm(std::move(im)));
  }
  aug.action.resize(n * g.order());
  for (FiniteQuandle::Index a = 0; a < n; ++a)
    for (Element h = 0; h < g.order(); ++h)
      aug.action[a * g.order() + h] = g.element(h)[a];
  return aug;
}

AxiomReport verify_augmentation(const Augmentation &aug)
{
  const auto &q = aug.quandle;
  const PointedGroup &g = *aug.group;
  if (aug.phi.size() != q.size() || aug.action.size() != q.size() * g.order())
    return {false, "augmentation tables have the wrong size"};
  for (FiniteQuandle::Index a = 0; a < q.size(); ++a)
    for (FiniteQuandle::Index b = 0; b < q.size(); ++b)
      if (q.op(a, b) != aug.act(a, aug.phi[b]))
        return {false, "a*b != a^phi(b) at a=" + std::to_string(a) + ", b=" + std::to_string(b)};
  for (FiniteQuandle::Index a = 0; a < q.size(); ++a)
    for (Element h = 0; h < g.order(); ++h)
      if (aug.phi[aug.act(a, h)] != g.conjugate(aug.phi[a], h))
        return {false, "phi(a^g) != phi(a)^g at a=" + std::to_string(a)};
  for (Element h = 0; h < g.order(); ++h)
    for (Element k : g.generators())
      for (FiniteQuandle::Index a = 0; a < q.size(); ++a)
        if (aug.act(aug.act(a, h), k) != aug.act(a, g.multiply(h, k)))
          return {false, "the action is not a right action"};
  return {};
}

// --- text tables ---------------------------------------------------------

namespace {

std::vector<std::vector<std::string>> split_csv(std::string_view text)
{
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  auto end_field = [&] {
    std::size_t b = field.find_first_not_of(" \t");
    std::size_t e = field.find_last_not_of(" \t");
    row.push_back(b == std::string::npos ? std::string() : field.substr(b, e - b + 1));
    field.clear();
  };
  for (char ch : text) {
    if (quoted) {
      if (ch == '"')
        quoted = false;
      else
        field += ch;
      continue;
    }
    if (ch == '"') {
      quoted = true;
      any = true;
    } else if (ch == ',') {
      end_field();
      any = true;
    } else if (ch == '\n') {
      if (any || !field.empty()) {
        end_field();
        rows.push_back(std::move(row));
      }
      row.clear();
      any = false;
    } else if (ch != '\r') {
      field += ch;
      if (ch != ' ' && ch != '\t')
        any = true;
    }
  }
  if (quoted)
    throw ParseError("unterminated quote in table");
  if (any || !field.empty()) {
    end_field();
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

std::string quandle_to_csv(const FiniteQuandle &q)
{
  std::ostringstream out;
  for (FiniteQuandle::Index a = 0; a < q.size(); ++a) {
    for (FiniteQuandle::Index b = 0; b < q.size(); ++b)
      out << (b ? "," : "") << q.op(a, b);
    out << '\n';
  }
  return out.str();
}

FiniteQuandle quandle_from_csv(std::string_view text)
{
  auto rows = split_csv(text);
  const std::size_t n = rows.size();
  std::vector<FiniteQuandle::Index> op;
  op.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n)
      throw ParseError("quandle table row " + std::to_string(a) + " has " +
                       std::to_string(rows[a].size()) + " entries, expected " + std::to_string(n));
    for (const auto &f : rows[a]) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(f, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != f.size() || f.empty() || v >= n)
        throw ParseError("bad quandle table entry '" + f + "'");
      op.push_back(static_cast<FiniteQuandle::Index>(v));
    }
  }
  return FiniteQuandle(n, std::move(op));
}

std::string cocycle_to_csv(const Cocycle2 &l)
{
  std::ostringstream out;
  for (std::size_t a = 0; a < l.size; ++a) {
    for (std::size_t b = 0; b < l.size; ++b)
      out << (b ? "," : "") << '"' << l.group->format(l.values[a * l.size + b]) << '"';
    out << '\n';
  }
  return out.str();
}

Cocycle2 cocycle_from_csv(std::string_view text, const GroupPtr &group)
{
  auto rows = split_csv(text);
  const std::size_t n = rows.size();
  Cocycle2 l{group, n, {}};
  l.values.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n)
      throw ParseError("cocycle table row " + std::to_string(a) + " has the wrong length");
    for (const auto &f : rows[a]) {
      auto e = group->find(Perm::from_cycles(f, group->degree()));
      if (!e)
        throw ParseError("cocycle entry " + f + " is not in " + group->name());
      l.values.push_back(*e);
    }
  }
  return l;
}

} // namespace knotcol
