#include "knotcol/yang_baxter.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <random>

#include <omp.h>

#include "knotcol/errors.hpp"

namespace knotcol {

namespace {

using Index = FiniteQuandle::Index;
constexpr Index kUnset = std::numeric_limits<Index>::max();

// One crossing move on a pair of basis vectors.
struct Move {
  Index left, right;
  Element label;
};

Move apply_letter(const YBOperator &op, Index a, Index b, int sign)
{
  const auto &q = op.quandle;
  if (sign > 0)
    return {b, q.op(a, b), op.label(a, b)};
  const Index c = q.inv(b, a);
  return {c, a, op.group->inverse(op.label(c, a))};
}

// Multiplication table of the subgroup generated by the labels, so that the
// exhaustive checks do not compose permutations of large groups.
class LabelTable {
public:
  explicit LabelTable(const YBOperator &op) : g_(*op.group)
  {
    std::vector<Element> gens(op.labels.begin(), op.labels.end());
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    members_ = generated_subgroup(g_, gens).members;
    if (members_.size() > PointedGroup::kDenseTableLimit)
      return;
    slot_.assign(g_.order(), kUnset);
    for (Index i = 0; i < members_.size(); ++i)
      slot_[members_[i]] = i;
    table_.resize(members_.size() * members_.size());
    for (std::size_t i = 0; i < members_.size(); ++i)
      for (std::size_t j = 0; j < members_.size(); ++j)
        table_[i * members_.size() + j] = members_[slot_[g_.multiply(members_[i], members_[j])]];
  }

  Element multiply(Element a, Element b) const
  {
    if (table_.empty())
      return g_.multiply(a, b);
    return table_[slot_[a] * members_.size() + slot_[b]];
  }

private:
  const PointedGroup &g_;
  std::vector<Element> members_;
  std::vector<Index> slot_;
  std::vector<Element> table_;
};

void require_knot(const BraidWord &b)
{
  for (const auto &l : b.letters)
    if (l.index < 1 || l.index >= b.strands)
      throw ParseError("braid letter outside the strand range");
  if (!closes_to_knot(b))
    throw HypothesisError("braid closure is not a knot");
}

// Depth-first search over basis tuples that are fixed by the braid on the
// positions in `fixed` (all positions for the closed trace, 2..n for the long
// trace). Input coordinates are chosen lazily at their first use; a position
// is checked right after its last use.
template <class Step, class Leaf>
class FixedTupleSearch {
public:
  FixedTupleSearch(const BraidWord &b, std::size_t basis, std::vector<bool> fixed, Step step,
                   Leaf leaf, std::atomic<std::uint64_t> &nodes, std::uint64_t cap)
      : basis_(basis), fixed_(std::move(fixed)), step_(step), leaf_(leaf), nodes_(nodes), cap_(cap)
  {
    const std::size_t n = static_cast<std::size_t>(b.strands);
    last_.assign(n, -1);
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
      letters_.push_back(*it);
    for (std::size_t k = 0; k < letters_.size(); ++k) {
      const std::size_t p = static_cast<std::size_t>(letters_[k].index - 1);
      last_[p] = last_[p + 1] = static_cast<long>(k);
    }
    input_.assign(n, kUnset);
    cur_.assign(n, kUnset);
  }

  void preset(std::size_t pos, Index v)
  {
    input_[pos] = v;
    cur_[pos] = v;
  }

  /// Position and candidate count of the first lazy choice, if any.
  std::optional<std::size_t> first_choice() const
  {
    for (const auto &l : letters_) {
      const std::size_t p = static_cast<std::size_t>(l.index - 1);
      if (cur_[p] == kUnset)
        return p;
      if (cur_[p + 1] == kUnset)
        return p + 1;
    }
    for (std::size_t p = 0; p < cur_.size(); ++p)
      if (cur_[p] == kUnset)
        return p;
    return std::nullopt;
  }

  void run(Element label) { visit(0, label); }

  void flush()
  {
    nodes_.fetch_add(local_, std::memory_order_relaxed);
    local_ = 0;
  }

private:
  void tick()
  {
    if (++local_ >= 4096) {
      const std::uint64_t total = nodes_.fetch_add(local_, std::memory_order_relaxed) + local_;
      local_ = 0;
      if (total > cap_)
        throw LimitExceeded("trace search exceeded the node cap of " + std::to_string(cap_));
    }
  }

  void visit(std::size_t k, Element label)
  {
    tick();
    if (k == letters_.size()) {
      for (std::size_t p = 0; p < cur_.size(); ++p)
        if (cur_[p] == kUnset) {
          for (Index v = 0; v < basis_; ++v) {
            preset(p, v);
            visit(k, label);
          }
          preset(p, kUnset);
          return;
        }
      leaf_(input_, cur_, label);
      return;
    }
    const auto &l = letters_[k];
    const std::size_t p = static_cast<std::size_t>(l.index - 1);
    for (std::size_t pos : {p, p + 1})
      if (cur_[pos] == kUnset) {
        for (Index v = 0; v < basis_; ++v) {
          preset(pos, v);
          visit(k, label);
        }
        preset(pos, kUnset);
        return;
      }

    const Index a = cur_[p], b = cur_[p + 1];
    Move m = step_(a, b, l.sign);
    cur_[p] = m.left;
    cur_[p + 1] = m.right;
    bool ok = true;
    for (std::size_t pos : {p, p + 1})
      if (fixed_[pos] && last_[pos] == static_cast<long>(k) && cur_[pos] != input_[pos])
        ok = false;
    if (ok)
      visit(k + 1, step_.combine(label, m.label));
    cur_[p] = a;
    cur_[p + 1] = b;
  }

  std::size_t basis_;
  std::vector<bool> fixed_;
  Step step_;
  Leaf leaf_;
  std::vector<BraidLetter> letters_; // in application order
  std::vector<long> last_;
  std::vector<Index> input_;
  std::vector<Index> cur_;
  std::atomic<std::uint64_t> &nodes_;
  std::uint64_t local_ = 0;
  std::uint64_t cap_;
};

struct OperatorStep {
  const YBOperator *op;
  Move operator()(Index a, Index b, int sign) const { return apply_letter(*op, a, b, sign); }
  Element combine(Element x, Element y) const { return op->group->multiply(x, y); }
};

struct CoveringStep {
  const CoveringQuandle *cov;
  Move operator()(Index a, Index b, int sign) const
  {
    if (sign > 0)
      return {b, cov->op(a, b), 0};
    return {cov->inv(b, a), a, 0};
  }
  Element combine(Element, Element) const { return 0; }
};

struct CountLeaf {
  std::vector<std::int64_t> *counts;
  void operator()(const std::vector<Index> &, const std::vector<Index> &, Element label) const
  {
    ++(*counts)[label];
  }
};

RingElement counts_to_ring(const GroupPtr &g, const std::vector<std::int64_t> &counts)
{
  RingElement r(g);
  for (Element e = 0; e < counts.size(); ++e)
    r.add(e, counts[e]);
  return r;
}

} // namespace

YBOperator yb_operator(const FiniteQuandle &q, const Cocycle2 &l)
{
  return YBOperator{q, l.group, l.values, true};
}

YBOperator build_yb_operator(const GroupPtr &g, bool deformed)
{
  YBOperator op;
  if (deformed) {
    CoveringQuandle cov(g);
    Cocycle2 l = cocycle_from_section(cov);
    op = yb_operator(cov.base().quandle, l);
  } else {
    op.quandle = conjugation_quandle(g).quandle;
    op.group = g;
    op.labels.assign(op.quandle.size() * op.quandle.size(), g->identity());
    op.deformed = false;
  }
  if (!check_yang_baxter(op))
    throw HypothesisError("the operator violates the Yang-Baxter equation");
  if (!check_trace_condition(op))
    throw HypothesisError("the operator violates the trace condition");
  return op;
}

LabelledTuple evaluate_braid(const BraidWord &b, const YBOperator &op,
                             const std::vector<Index> &tuple)
{
  if (tuple.size() != static_cast<std::size_t>(b.strands))
    throw std::invalid_argument("tuple length differs from the strand count");
  LabelledTuple r{tuple, op.group->identity()};
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    const std::size_t p = static_cast<std::size_t>(it->index - 1);
    Move m = apply_letter(op, r.tuple[p], r.tuple[p + 1], it->sign);
    r.tuple[p] = m.left;
    r.tuple[p + 1] = m.right;
    r.label = op.group->multiply(r.label, m.label);
  }
  return r;
}

bool check_yang_baxter(const YBOperator &op)
{
  const Index n = static_cast<Index>(op.quandle.size());
  const LabelTable g(op);
  bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n && ok; ++b) {
      // s1 s2 s1 and s2 s1 s2, rightmost letter first
      const Move l1 = apply_letter(op, a, b, 1);
      for (Index c = 0; c < n; ++c) {
        const Move l2 = apply_letter(op, l1.right, c, 1);
        const Move l3 = apply_letter(op, l1.left, l2.left, 1);
        const Move r1 = apply_letter(op, b, c, 1);
        const Move r2 = apply_letter(op, a, r1.left, 1);
        const Move r3 = apply_letter(op, r2.right, r1.right, 1);
        if (l3.left != r2.left || l3.right != r3.left || l2.right != r3.right ||
            g.multiply(g.multiply(l1.label, l2.label), l3.label) !=
                g.multiply(g.multiply(r1.label, r2.label), r3.label)) {
          ok = false;
          break;
        }
      }
    }
  return ok;
}

bool check_far_commutation(const YBOperator &op)
{
  const Index n = static_cast<Index>(op.quandle.size());
  const LabelTable g(op);
  for (int s1 : {1, -1})
    for (int s3 : {1, -1})
      for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
          const Move x = apply_letter(op, a, b, s1);
          for (Index c = 0; c < n; ++c)
            for (Index d = 0; d < n; ++d) {
              const Move y = apply_letter(op, c, d, s3);
              // the moves touch disjoint strands, so only the label order can differ
              if (g.multiply(x.label, y.label) != g.multiply(y.label, x.label))
                return false;
            }
        }
  return true;
}

bool check_trace_condition(const YBOperator &op)
{
  const Index n = static_cast<Index>(op.quandle.size());
  for (int sign : {1, -1})
    for (Index i = 0; i < n; ++i) {
      // column i of tr_2: sum over j of the (k, j) components of c(i (x) j)
      std::map<std::pair<Index, Element>, std::int64_t> column;
      for (Index j = 0; j < n; ++j) {
        Move m = apply_letter(op, i, j, sign);
        if (m.right == j)
          ++column[{m.left, m.label}];
      }
      if (column.size() != 1)
        return false;
      const auto &[key, coeff] = *column.begin();
      if (key.first != i || key.second != op.group->identity() || coeff != 1)
        return false;
    }
  return true;
}

RingElement closed_trace_serial(const BraidWord &b, const YBOperator &op, const SearchOptions &opt)
{
  require_knot(b);
  std::vector<std::int64_t> counts(op.group->order(), 0);
  std::atomic<std::uint64_t> nodes{0};
  FixedTupleSearch s(b, op.quandle.size(), std::vector<bool>(static_cast<std::size_t>(b.strands), true),
                     OperatorStep{&op}, CountLeaf{&counts}, nodes, opt.node_cap);
  s.run(op.group->identity());
  s.flush();
  return counts_to_ring(op.group, counts);
}

RingElement closed_trace_parallel(const BraidWord &b, const YBOperator &op, const SearchOptions &opt)
{
  require_knot(b);
  const std::size_t n = static_cast<std::size_t>(b.strands);
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::int64_t> probe;
  FixedTupleSearch root(b, op.quandle.size(), std::vector<bool>(n, true), OperatorStep{&op},
                        CountLeaf{&probe}, nodes, opt.node_cap);
  const std::size_t pos = root.first_choice().value_or(0);

  const int threads = opt.workers > 0 ? opt.workers : omp_get_max_threads();
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(op.quandle.size());
  std::vector<std::int64_t> total(op.group->order(), 0);
  std::exception_ptr error;
#pragma omp parallel num_threads(threads)
  {
    std::vector<std::int64_t> counts(op.group->order(), 0);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t v = 0; v < m; ++v) {
      try {
        FixedTupleSearch s(b, op.quandle.size(), std::vector<bool>(n, true), OperatorStep{&op},
                           CountLeaf{&counts}, nodes, opt.node_cap);
        s.preset(pos, static_cast<Index>(v));
        s.run(op.group->identity());
        s.flush();
      } catch (...) {
#pragma omp critical(knotcol_trace_error)
        if (!error)
          error = std::current_exception();
      }
    }
#pragma omp critical(knotcol_trace_merge)
    for (std::size_t e = 0; e < counts.size(); ++e)
      total[e] += counts[e];
  }
  if (error)
    std::rethrow_exception(error);
  return counts_to_ring(op.group, total);
}

RingElement closed_trace(const BraidWord &b, const YBOperator &op, const SearchOptions &opt)
{
  if (opt.workers == 1)
    return closed_trace_serial(b, op, opt);
  return closed_trace_parallel(b, op, opt);
}

RingElement long_partial_trace(const BraidWord &b, const GroupPtr &g, const SearchOptions &opt)
{
  require_knot(b);
  CoveringQuandle cov(g);
  const PointedGroup &G = *g;
  const std::size_t n = static_cast<std::size_t>(b.strands);
  std::vector<bool> fixed(n, true);
  fixed[0] = false;
  std::atomic<std::uint64_t> nodes{0};

  std::optional<std::vector<std::int64_t>> reference;
  std::exception_ptr error;
  const int threads = opt.workers > 0 ? opt.workers : omp_get_max_threads();
  const std::ptrdiff_t size = static_cast<std::ptrdiff_t>(cov.size());
  std::vector<std::vector<std::int64_t>> per_start(cov.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (opt.workers != 1)
  for (std::ptrdiff_t i = 0; i < size; ++i) {
    try {
      const Index p1 = static_cast<Index>(i);
      std::vector<std::int64_t> counts(G.order(), 0);
      auto leaf = [&](const std::vector<Index> &, const std::vector<Index> &out, Element) {
        const Index q1 = out[0];
        if (cov.projection(q1) != cov.projection(p1))
          throw std::logic_error("partial trace leaves the fibre of the start vector");
        const Element l = G.multiply(cov.g_part(q1), G.inverse(cov.g_part(p1)));
        if (!G.longitude().subgroup.contains(l))
          throw std::logic_error("partial trace coefficient outside the longitude group");
        ++counts[l];
      };
      FixedTupleSearch s(b, cov.size(), fixed, CoveringStep{&cov}, leaf, nodes, opt.node_cap);
      s.preset(0, p1);
      s.run(0);
      s.flush();
      per_start[static_cast<std::size_t>(i)] = std::move(counts);
    } catch (...) {
#pragma omp critical(knotcol_long_trace_error)
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);
  for (const auto &c : per_start)
    if (c != per_start.front())
      throw std::logic_error("partial trace is not a uniform scalar over the covering quandle");
  return counts_to_ring(g, per_start.front());
}

MarkovReport markov_spot_check(const BraidWord &b, const YBOperator &op, int trials,
                               std::uint64_t seed)
{
  MarkovReport r;
  r.reference = closed_trace(b, op);
  auto compare = [&](const BraidWord &variant, const std::string &what) {
    ++r.checks;
    RingElement t = closed_trace(variant, op);
    if (!(t == r.reference)) {
      ++r.failures;
      r.details.push_back(what + " changed the trace");
    }
  };
  std::mt19937_64 rng(seed);
  if (b.strands > 1) {
    std::uniform_int_distribution<int> index(1, b.strands - 1);
    for (int t = 0; t < trials; ++t) {
      const int j = index(rng);
      const int s = (rng() & 1) ? 1 : -1;
      BraidWord c{b.strands, {{j, s}}};
      c.letters.insert(c.letters.end(), b.letters.begin(), b.letters.end());
      c.letters.push_back({j, -s});
      compare(c, "conjugation by " + format_braid_word(BraidWord{b.strands, {{j, s}}}));
    }
  }
  compare(stabilize(b, 1), "positive stabilization");
  compare(stabilize(b, -1), "negative stabilization");
  return r;
}

} // namespace knotcol
