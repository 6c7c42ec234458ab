#include "knotcol/colouring.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include <omp.h>

#include "knotcol/errors.hpp"

namespace knotcol {

namespace {

using Index = FiniteQuandle::Index;
constexpr Index kUnset = std::numeric_limits<Index>::max();

// Static data shared by all search states.
struct Problem {
  const WirtingerCode &w;
  const FiniteQuandle &q;
  std::size_t arcs;
  std::vector<std::vector<std::size_t>> watch; // arc -> crossings touching it
  std::vector<std::uint32_t> cand_start;       // CSR over (a, c): {b : a*b = c}
  std::vector<Index> cand;
  std::vector<std::size_t> seeds;              // branching order when nothing is forced

  Problem(const WirtingerCode &code, const FiniteQuandle &quandle)
      : w(code), q(quandle), arcs(code.arcs()), watch(code.arcs())
  {
    validate(w);
    for (std::size_t c = 0; c < w.crossings(); ++c) {
      for (std::size_t arc : {c, c + 1, w.kappa[c]})
        if (std::find(watch[arc].begin(), watch[arc].end(), c) == watch[arc].end())
          watch[arc].push_back(c);
    }
    build_candidates();
    build_seeds();
  }

  void build_candidates()
  {
    const std::size_t n = q.size();
    cand_start.assign(n * n + 1, 0);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        ++cand_start[a * n + q.op(a, b) + 1];
    for (std::size_t i = 0; i < n * n; ++i)
      cand_start[i + 1] += cand_start[i];
    cand.resize(n * n);
    std::vector<std::uint32_t> fill(cand_start.begin(), cand_start.end() - 1);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        cand[fill[a * n + q.op(a, b)]++] = b;
  }

  // Arcs determined by forward and backward propagation from `known`.
  std::size_t closure_size(std::vector<bool> known) const
  {
    bool grown = true;
    while (grown) {
      grown = false;
      for (std::size_t c = 0; c < w.crossings(); ++c) {
        const std::size_t a = c, o = c + 1, k = w.kappa[c];
        if (known[a] && known[k] && !known[o])
          known[o] = grown = true;
        if (known[o] && known[k] && !known[a])
          known[a] = grown = true;
      }
    }
    return static_cast<std::size_t>(std::count(known.begin(), known.end(), true));
  }

  void build_seeds()
  {
    const std::size_t n = arcs;
    std::vector<bool> base(n, false);
    base[0] = true;
    if (closure_size(base) == n)
      return;

    // Smallest extra seed set, by exhaustive search while affordable.
    for (std::size_t k = 1; k < n; ++k) {
      double combos = 1;
      for (std::size_t i = 0; i < k; ++i)
        combos = combos * static_cast<double>(n - 1 - i) / static_cast<double>(i + 1);
      if (combos > 200000)
        break;
      std::vector<std::size_t> pick(k);
      for (std::size_t i = 0; i < k; ++i)
        pick[i] = i + 1;
      while (true) {
        std::vector<bool> known = base;
        for (std::size_t p : pick)
          known[p] = true;
        if (closure_size(known) == n) {
          seeds = pick;
          return;
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - 1 - (k - i))
          --i;
        if (i == 0)
          break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j)
          pick[j] = pick[j - 1] + 1;
      }
    }

    // Greedy fallback.
    std::vector<bool> known = base;
    while (closure_size(known) < n) {
      std::size_t best = 0, best_size = 0;
      for (std::size_t a = 1; a < n; ++a) {
        if (known[a])
          continue;
        auto trial = known;
        trial[a] = true;
        std::size_t s = closure_size(trial);
        if (s > best_size) {
          best = a;
          best_size = s;
        }
      }
      known[best] = true;
      seeds.push_back(best);
    }
  }

  std::pair<const Index *, const Index *> candidates(Index a, Index c) const
  {
    const std::size_t i = a * q.size() + c;
    return {cand.data() + cand_start[i], cand.data() + cand_start[i + 1]};
  }
};

struct Choice {
  std::size_t arc = 0;
  std::vector<Index> values;
};

class Search {
public:
  Search(const Problem &p, std::atomic<std::uint64_t> &nodes, std::uint64_t cap, bool closed)
      : p_(p), colour_(p.arcs, kUnset), nodes_(nodes), cap_(cap), closed_(closed)
  {
  }

  bool assign(std::size_t arc, Index v)
  {
    if (colour_[arc] == v)
      return true;
    if (colour_[arc] != kUnset)
      return false;
    colour_[arc] = v;
    trail_.push_back(arc);
    queue_.push_back(arc);
    return true;
  }

  bool propagate()
  {
    while (!queue_.empty()) {
      std::size_t arc = queue_.back();
      queue_.pop_back();
      for (std::size_t c : p_.watch[arc])
        if (!check(c)) {
          queue_.clear();
          return false;
        }
    }
    return true;
  }

  std::size_t mark() const { return trail_.size(); }
  void undo(std::size_t m)
  {
    while (trail_.size() > m) {
      colour_[trail_.back()] = kUnset;
      trail_.pop_back();
    }
  }

  // Empty choice with arc == arcs means the assignment is complete.
  Choice choose() const
  {
    Choice best;
    best.arc = p_.arcs;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    const auto &w = p_.w;
    for (std::size_t c = 0; c < w.crossings(); ++c) {
      const Index a = colour_[c], o = colour_[c + 1];
      const std::size_t k = w.kappa[c];
      if (a == kUnset || o == kUnset || colour_[k] != kUnset)
        continue;
      auto [b, e] = w.epsilon[c] > 0 ? p_.candidates(a, o) : p_.candidates(o, a);
      const std::size_t s = static_cast<std::size_t>(e - b);
      if (s < best_size) {
        best_size = s;
        best.arc = k;
        best.values.assign(b, e);
      }
    }
    if (best.arc != p_.arcs)
      return best;
    auto full = [&](std::size_t arc) {
      best.arc = arc;
      best.values.resize(p_.q.size());
      for (Index v = 0; v < p_.q.size(); ++v)
        best.values[v] = v;
      return best;
    };
    for (std::size_t s : p_.seeds)
      if (colour_[s] == kUnset)
        return full(s);
    for (std::size_t a = 0; a < p_.arcs; ++a)
      if (colour_[a] == kUnset)
        return full(a);
    return best;
  }

  void dfs(std::vector<QuandleColouring> &out)
  {
    Choice ch = choose();
    if (ch.arc == p_.arcs) {
      if (!closed_ || colour_.back() == colour_.front())
        out.push_back(colour_);
      return;
    }
    for (Index v : ch.values) {
      const std::size_t m = mark();
      if (assign(ch.arc, v) && propagate())
        dfs(out);
      undo(m);
    }
  }

  void flush()
  {
    nodes_.fetch_add(local_, std::memory_order_relaxed);
    local_ = 0;
  }

private:
  bool check(std::size_t c)
  {
    if (++local_ >= 4096) {
      const std::uint64_t total = nodes_.fetch_add(local_, std::memory_order_relaxed) + local_;
      local_ = 0;
      if (total > cap_)
        throw LimitExceeded("colouring search exceeded the node cap of " + std::to_string(cap_));
    }
    const auto &w = p_.w;
    const auto &q = p_.q;
    const std::size_t ai = c, oi = c + 1, ki = w.kappa[c];
    const int s = w.epsilon[c];
    const Index a = colour_[ai], k = colour_[ki], o = colour_[oi];
    if (a != kUnset && k != kUnset)
      return assign(oi, q.act(a, k, s));
    if (o != kUnset && k != kUnset)
      return assign(ai, q.act(o, k, -s));
    if (a != kUnset && o != kUnset) {
      auto [b, e] = s > 0 ? p_.candidates(a, o) : p_.candidates(o, a);
      if (b == e)
        return false;
      if (e - b == 1)
        return assign(ki, *b);
    }
    return true;
  }

  const Problem &p_;
  std::vector<Index> colour_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> queue_;
  std::atomic<std::uint64_t> &nodes_;
  std::uint64_t local_ = 0;
  std::uint64_t cap_;
  bool closed_;
};

void check_arc0(const FiniteQuandle &q, Index arc0)
{
  if (arc0 >= q.size())
    throw std::out_of_range("arc 0 colour outside the quandle");
}

} // namespace

std::vector<QuandleColouring> enumerate_quandle_colourings_serial(const WirtingerCode &w,
                                                                  const FiniteQuandle &q,
                                                                  Index arc0, bool closed,
                                                                  const SearchOptions &opt)
{
  check_arc0(q, arc0);
  Problem p(w, q);
  std::atomic<std::uint64_t> nodes{0};
  Search s(p, nodes, opt.node_cap, closed);
  std::vector<QuandleColouring> out;
  if (s.assign(0, arc0) && s.propagate())
    s.dfs(out);
  s.flush();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuandleColouring> enumerate_quandle_colourings_parallel(const WirtingerCode &w,
                                                                    const FiniteQuandle &q,
                                                                    Index arc0, bool closed,
                                                                    const SearchOptions &opt)
{
  check_arc0(q, arc0);
  Problem p(w, q);
  std::atomic<std::uint64_t> nodes{0};
  Search root(p, nodes, opt.node_cap, closed);
  std::vector<QuandleColouring> out;
  if (!(root.assign(0, arc0) && root.propagate()))
    return out;
  Choice first = root.choose();
  if (first.arc == p.arcs) {
    root.dfs(out);
    return out;
  }

  const int threads = opt.workers > 0 ? opt.workers : omp_get_max_threads();
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(first.values.size());
  std::vector<std::vector<QuandleColouring>> parts(first.values.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    try {
      Search s = root;
      if (s.assign(first.arc, first.values[static_cast<std::size_t>(i)]) && s.propagate())
        s.dfs(parts[static_cast<std::size_t>(i)]);
      s.flush();
    } catch (...) {
#pragma omp critical(knotcol_search_error)
      if (!error)
        error = std::current_exception();
    }
  }
  if (error)
    std::rethrow_exception(error);
  for (auto &part : parts)
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<QuandleColouring> enumerate_quandle_colourings(const WirtingerCode &w,
                                                           const FiniteQuandle &q, Index arc0,
                                                           bool closed, const SearchOptions &opt)
{
  if (opt.workers == 1)
    return enumerate_quandle_colourings_serial(w, q, arc0, closed, opt);
  return enumerate_quandle_colourings_parallel(w, q, arc0, closed, opt);
}

bool is_quandle_colouring(const WirtingerCode &w, const FiniteQuandle &q, const QuandleColouring &c)
{
  if (c.size() != w.arcs())
    return false;
  for (Index v : c)
    if (v >= q.size())
      return false;
  for (std::size_t i = 0; i < w.crossings(); ++i)
    if (c[i + 1] != q.act(c[i], c[w.kappa[i]], w.epsilon[i]))
      return false;
  return true;
}

std::uint64_t quandle_colourings(const WirtingerCode &w, const FiniteQuandle &q,
                                 std::optional<Index> basepoint, const SearchOptions &opt)
{
  if (basepoint)
    return enumerate_quandle_colourings(w, q, *basepoint, true, opt).size();
  std::uint64_t total = 0;
  for (Index a = 0; a < q.size(); ++a)
    total += enumerate_quandle_colourings(w, q, a, true, opt).size();
  return total;
}

// --- group colourings ----------------------------------------------------

std::vector<Element> partial_longitudes(const WirtingerCode &w, const PointedGroup &g,
                                        const std::vector<Element> &arcs)
{
  std::vector<Element> l(w.arcs());
  l[0] = g.identity();
  for (std::size_t i = 1; i <= w.crossings(); ++i) {
    const int e = w.epsilon[i - 1];
    Element prev = e > 0 ? g.inverse(arcs[i - 1]) : arcs[i - 1];
    Element over = arcs[w.kappa[i - 1]];
    if (e < 0)
      over = g.inverse(over);
    l[i] = g.multiply(g.multiply(l[i - 1], prev), over);
  }
  return l;
}

std::vector<Colouring> enumerate_colourings(const WirtingerCode &w, const GroupPtr &g, Element x,
                                            const SearchOptions &opt)
{
  ConjugationQuandle cq = class_quandle(g, x);
  auto raw = enumerate_quandle_colourings(w, cq.quandle, cq.index_of(x), true, opt);
  std::vector<Colouring> out;
  out.reserve(raw.size());
  for (const auto &r : raw) {
    Colouring c;
    c.arcs.resize(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      c.arcs[i] = cq.elements[r[i]];
    c.longitude = partial_longitudes(w, *g, c.arcs).back();
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Colouring> enumerate_colourings(const WirtingerCode &w, const GroupPtr &g,
                                            const SearchOptions &opt)
{
  return enumerate_colourings(w, g, g->basepoint(), opt);
}

bool is_group_colouring(const WirtingerCode &w, const PointedGroup &g, const Colouring &c)
{
  if (c.arcs.size() != w.arcs())
    return false;
  for (std::size_t i = 1; i <= w.crossings(); ++i) {
    Element k = c.arcs[w.kappa[i - 1]];
    if (w.epsilon[i - 1] < 0)
      k = g.inverse(k);
    if (c.arcs[i] != g.conjugate(c.arcs[i - 1], k))
      return false;
  }
  return c.arcs.front() == c.arcs.back() &&
         c.longitude == partial_longitudes(w, g, c.arcs).back();
}

ColouringPolynomial colouring_polynomial(const WirtingerCode &w, const GroupPtr &g,
                                         const SearchOptions &opt)
{
  ColouringPolynomial p{RingElement(g), true};
  for (const Colouring &c : enumerate_colourings(w, g, opt)) {
    p.value.add(c.longitude, 1);
    if (!g->longitude().subgroup.contains(c.longitude))
      p.in_longitude_group = false;
  }
  return p;
}

std::uint64_t colouring_number(const WirtingerCode &w, const GroupPtr &g, const SearchOptions &opt)
{
  return enumerate_colourings(w, g, opt).size();
}

std::uint64_t total_colouring_number(const WirtingerCode &w, const GroupPtr &g,
                                     const SearchOptions &opt)
{
  std::vector<bool> seen(g->order(), false);
  std::uint64_t total = 0;
  for (Element x = 0; x < g->order(); ++x) {
    if (seen[x])
      continue;
    auto cls = conjugacy_class(*g, x);
    for (Element c : cls)
      seen[c] = true;
    total += cls.size() * enumerate_colourings(w, g, x, opt).size();
  }
  return total;
}

PrimeCongruence check_prime_congruence(const RingElement &poly, const PointedGroup &g)
{
  PrimeCongruence r;
  const Element x = g.basepoint();
  auto central = [&](Element h) {
    for (Element s : g.generators())
      if (g.multiply(h, s) != g.multiply(s, h))
        return false;
    return true;
  };
  std::uint64_t m = 1;
  for (Element p = x; !central(p); p = g.multiply(p, x))
    ++m;
  r.inner_order = m;
  if (m < 2)
    return r;
  std::uint64_t p = 2;
  while (m % p != 0)
    ++p;
  std::uint64_t rest = m;
  while (rest % p == 0)
    rest /= p;
  if (rest != 1)
    return r;
  r.hypothesis = true;
  r.prime = p;
  r.holds = true;
  const auto sp = static_cast<RingElement::Coeff>(p);
  auto mod = [&](RingElement::Coeff c) { return ((c % sp) + sp) % sp; };
  if (mod(poly.coeff(g.identity())) != 1 % sp)
    r.holds = false;
  for (auto [e, c] : poly.terms())
    if (e != g.identity() && mod(c) != 0)
      r.holds = false;
  return r;
}

} // namespace knotcol
