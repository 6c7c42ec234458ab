#include "knotcol/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "knotcol/errors.hpp"

namespace knotcol {

namespace {

using PermSet = std::unordered_set<Perm, PermHash>;

std::vector<Perm> close_under_products(const std::vector<Perm> &gens, std::size_t degree)
{
  PermSet seen;
  std::vector<Perm> out;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  out.push_back(id);
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const Perm &s : gens) {
      Perm p = out[head] * s;
      if (seen.insert(p).second)
        out.push_back(std::move(p));
    }
  }
  return out;
}

// Breadth-first closure inside an indexed group.
std::vector<Element> close_indices(const PointedGroup &g, const std::vector<Element> &gens)
{
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> out{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Element s : gens) {
      Element p = g.multiply(out[head], s);
      if (!seen[p]) {
        seen[p] = true;
        out.push_back(p);
      }
    }
  }
  return out;
}

Subgroup make_subgroup(std::size_t parent_order, std::vector<Element> members)
{
  Subgroup h;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  h.mask.assign(parent_order, false);
  for (Element m : members)
    h.mask[m] = true;
  h.members = std::move(members);
  return h;
}

// Greedy generating set: keeps each candidate that is not yet generated.
std::vector<Element> effective_generators(const PointedGroup &g,
                                          const std::vector<Element> &candidates,
                                          std::vector<Element> *closure = nullptr)
{
  std::vector<Element> eff;
  std::vector<bool> in(g.order(), false);
  in[g.identity()] = true;
  std::vector<Element> members{g.identity()};
  for (Element s : candidates) {
    if (in[s])
      continue;
    eff.push_back(s);
    members = close_indices(g, eff);
    for (Element m : members)
      in[m] = true;
  }
  if (closure)
    *closure = std::move(members);
  return eff;
}

bool is_prime(long p)
{
  if (p < 2)
    return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

long mod(long a, long p) { return ((a % p) + p) % p; }

long inverse_mod(long a, long p)
{
  a = mod(a, p);
  for (long b = 1; b < p; ++b)
    if (a * b % p == 1)
      return b;
  throw std::invalid_argument("element not invertible mod p");
}

long parse_positive(std::string_view s, std::string_view what)
{
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("invalid " + std::string(what) + " '" + std::string(s) + "'");
  return std::stol(std::string(s));
}

std::string trim(std::string_view s)
{
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

Perm cycle_perm(std::size_t n)
{
  std::vector<Perm::Point> im(n);
  for (std::size_t i = 0; i < n; ++i)
    im[i] = static_cast<Perm::Point>((i + 1) % n);
  return Perm(std::move(im));
}

} // namespace

// --- PointedGroup --------------------------------------------------------

GroupPtr PointedGroup::from_generators(std::string name, const std::vector<Perm> &generators,
                                       const Perm &basepoint, std::size_t degree)
{
  if (degree == 0)
    degree = basepoint.degree();
  for (const Perm &g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch in group " + name);
  if (basepoint.degree() != degree)
    throw std::invalid_argument("basepoint degree mismatch in group " + name);

  std::shared_ptr<PointedGroup> g(new PointedGroup());
  g->name_ = std::move(name);
  g->degree_ = degree;
  g->elements_ = close_under_products(generators, degree);
  std::sort(g->elements_.begin(), g->elements_.end());
  g->build_index();

  for (const Perm &s : generators) {
    Element e = g->index_of(s);
    if (e != g->identity() &&
        std::find(g->generators_.begin(), g->generators_.end(), e) == g->generators_.end())
      g->generators_.push_back(e);
  }
  auto bp = g->find(basepoint);
  if (!bp)
    throw HypothesisError("basepoint " + basepoint.to_cycles() + " is not an element of " +
                          g->name_);
  g->basepoint_ = *bp;
  g->populate_caches();
  return g;
}

GroupPtr PointedGroup::with_basepoint(Element x) const
{
  if (x >= order())
    throw std::out_of_range("basepoint index out of range");
  std::shared_ptr<PointedGroup> g(new PointedGroup(*this));
  g->basepoint_ = x;
  g->populate_caches();
  return g;
}

void PointedGroup::build_index()
{
  const std::size_t n = elements_.size();
  index_.reserve(n * 2);
  for (Element i = 0; i < n; ++i)
    index_.emplace(elements_[i], i);

  inverses_.resize(n);
  orders_.resize(n);
  for (Element i = 0; i < n; ++i) {
    inverses_[i] = index_of(elements_[i].inverse());
    orders_[i] = elements_[i].order();
  }

  if (n <= kDenseTableLimit) {
    table_.resize(n * n);
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        table_[a * n + b] = static_cast<std::uint32_t>(index_of(elements_[a] * elements_[b]));
  }
}

void PointedGroup::populate_caches()
{
  basepoint_class_ = conjugacy_class(*this, basepoint_);
  centralizer_ = centralizer(*this, basepoint_);
  commutator_ = commutator_subgroup(*this);

  std::vector<Element> lam;
  for (Element c : centralizer_.members)
    if (commutator_.contains(c))
      lam.push_back(c);
  longitude_ = LongitudeGroup{};
  longitude_.subgroup = make_subgroup(order(), std::move(lam));
  const auto &ms = longitude_.subgroup.members;
  longitude_.is_abelian = true;
  for (std::size_t i = 0; i < ms.size() && longitude_.is_abelian; ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (multiply(ms[i], ms[j]) != multiply(ms[j], ms[i])) {
        longitude_.is_abelian = false;
        break;
      }
  if (longitude_.is_abelian) {
    if (orders_[basepoint_] == ms.size() && longitude_.subgroup.contains(basepoint_)) {
      longitude_.generator = basepoint_;
    } else {
      for (Element m : ms)
        if (orders_[m] == ms.size()) {
          longitude_.generator = m;
          break;
        }
    }
    if (longitude_.generator)
      longitude_.generator_order = ms.size();
  }

  std::vector<Element> closure;
  effective_generators(*this, basepoint_class_, &closure);
  colouring_group_ = closure.size() == order();
}

std::optional<Element> PointedGroup::find(const Perm &p) const
{
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

Element PointedGroup::index_of(const Perm &p) const
{
  auto it = index_.find(p);
  if (it == index_.end())
    throw std::invalid_argument("permutation " + p.to_cycles() + " is not in " + name_);
  return it->second;
}

Element PointedGroup::multiply(Element a, Element b) const
{
  if (!table_.empty())
    return table_[a * elements_.size() + b];
  return index_of(elements_[a] * elements_[b]);
}

Element PointedGroup::conjugate(Element a, Element b) const
{
  if (!table_.empty())
    return multiply(multiply(inverses_[b], a), b);
  return index_of(elements_[a] ^ elements_[b]);
}

Element PointedGroup::power(Element a, long long k) const
{
  const long long n = static_cast<long long>(orders_[a]);
  k = ((k % n) + n) % n;
  Element r = identity();
  for (long long i = 0; i < k; ++i)
    r = multiply(r, a);
  return r;
}

// --- GroupMap ------------------------------------------------------------

bool GroupMap::respects_products() const
{
  if (!source || !target || image.size() != source->order())
    return false;
  for (Element g = 0; g < source->order(); ++g) {
    for (Element s : source->generators()) {
      Element lhs = image[source->multiply(g, s)];
      Element rhs = kind == Kind::Homomorphism ? target->multiply(image[g], image[s])
                                               : target->multiply(image[s], image[g]);
      if (lhs != rhs)
        return false;
    }
  }
  return true;
}

bool GroupMap::is_bijective() const
{
  if (!source || !target || source->order() != target->order() ||
      image.size() != source->order())
    return false;
  std::vector<bool> hit(target->order(), false);
  for (Element e : image) {
    if (e >= hit.size() || hit[e])
      return false;
    hit[e] = true;
  }
  return true;
}

// --- subgroup machinery --------------------------------------------------

std::vector<Element> conjugacy_class(const PointedGroup &g, Element x)
{
  if (x >= g.order())
    throw std::out_of_range("element is not a member of " + g.name());
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> out;
  for (Element h = 0; h < g.order(); ++h) {
    Element c = g.conjugate(x, h);
    if (!seen[c]) {
      seen[c] = true;
      out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup centralizer(const PointedGroup &g, Element x)
{
  if (x >= g.order())
    throw std::out_of_range("element is not a member of " + g.name());
  const Perm &px = g.element(x);
  std::vector<Element> members;
  for (Element h = 0; h < g.order(); ++h) {
    const Perm &ph = g.element(h);
    if (px * ph == ph * px)
      members.push_back(h);
  }
  return make_subgroup(g.order(), std::move(members));
}

Subgroup generated_subgroup(const PointedGroup &g, const std::vector<Element> &gens)
{
  std::vector<Element> closure;
  effective_generators(g, gens, &closure);
  return make_subgroup(g.order(), std::move(closure));
}

Subgroup commutator_subgroup(const PointedGroup &g)
{
  // normal closure of the commutators of generator pairs
  const auto &gens = g.generators();
  std::vector<Element> normal_gens;
  for (Element a : gens)
    for (Element b : gens) {
      Element c = g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
      if (c != g.identity())
        normal_gens.push_back(c);
    }

  std::vector<Element> closure;
  std::vector<Element> eff = effective_generators(g, normal_gens, &closure);
  std::vector<bool> in(g.order(), false);
  for (Element m : closure)
    in[m] = true;

  bool grown = true;
  while (grown) {
    grown = false;
    for (std::size_t i = 0; i < eff.size() && !grown; ++i)
      for (Element s : gens) {
        Element c = g.conjugate(eff[i], s);
        if (!in[c]) {
          eff.push_back(c);
          closure = close_indices(g, eff);
          for (Element m : closure)
            in[m] = true;
          grown = true;
          break;
        }
      }
  }
  return make_subgroup(g.order(), std::move(closure));
}

std::size_t element_order(const PointedGroup &g, Element x) { return g.element_order(x); }

const LongitudeGroup &longitude_subgroup(const PointedGroup &g) { return g.longitude(); }

GroupPtr subgroup_as_group(const PointedGroup &g, const Subgroup &h, std::string name)
{
  if (!h.contains(g.basepoint()))
    throw HypothesisError("subgroup does not contain the basepoint");
  std::vector<Element> eff = effective_generators(g, h.members);
  std::vector<Perm> gens;
  for (Element e : eff)
    gens.push_back(g.element(e));
  return PointedGroup::from_generators(std::move(name), gens, g.element(g.basepoint()),
                                       g.degree());
}

GroupPtr colouring_core(const GroupPtr &g)
{
  GroupPtr cur = g;
  while (!cur->is_colouring_group()) {
    Subgroup h = generated_subgroup(*cur, cur->basepoint_class());
    cur = subgroup_as_group(*cur, h, "core(" + g->name() + ")");
  }
  return cur;
}

// --- obversion search ----------------------------------------------------

namespace {

// Every permutation s of the points with x^s = x^-1 that maps each cycle of x
// onto itself reversed, over all rotations (capped).
std::vector<Perm> inverting_conjugators(const Perm &x, std::size_t cap)
{
  const std::size_t n = x.degree();
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i])
      continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = x[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    cycles.push_back(std::move(c));
  }

  std::vector<Perm> out;
  std::vector<std::size_t> offset(cycles.size(), 0);
  while (out.size() < cap) {
    std::vector<Perm::Point> im(n);
    for (std::size_t c = 0; c < cycles.size(); ++c) {
      const auto &cyc = cycles[c];
      const std::size_t len = cyc.size();
      // c_j -> c_{offset - j}: conjugates the cycle to its inverse
      for (std::size_t j = 0; j < len; ++j)
        im[cyc[j]] = static_cast<Perm::Point>(cyc[(offset[c] + len - j) % len]);
    }
    out.emplace_back(std::move(im));
    std::size_t c = 0;
    for (; c < cycles.size(); ++c) {
      if (++offset[c] < cycles[c].size())
        break;
      offset[c] = 0;
    }
    if (c == cycles.size())
      break;
  }
  return out;
}

// Extends generator images to a map on all of G, if consistent.
std::optional<std::vector<Element>> extend_homomorphism(const PointedGroup &g,
                                                        const std::vector<Element> &gens,
                                                        const std::vector<Element> &images)
{
  const std::size_t none = g.order();
  std::vector<Element> map(g.order(), none);
  map[g.identity()] = g.identity();
  std::vector<Element> queue{g.identity()};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element a = queue[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      Element b = g.multiply(a, gens[k]);
      Element fb = g.multiply(map[a], images[k]);
      if (map[b] == none) {
        map[b] = fb;
        queue.push_back(b);
      } else if (map[b] != fb) {
        return std::nullopt;
      }
    }
  }
  return map;
}

Obversion make_obversion(const GroupPtr &g, std::vector<Element> image)
{
  Obversion o;
  o.obversion = GroupMap{g, g, std::move(image), GroupMap::Kind::Homomorphism};
  std::vector<Element> rev(g->order());
  for (Element a = 0; a < g->order(); ++a)
    rev[a] = g->inverse(o.obversion.image[a]);
  o.reversion = GroupMap{g, g, std::move(rev), GroupMap::Kind::AntiHomomorphism};
  return o;
}

} // namespace

std::optional<Obversion> find_obversion(const GroupPtr &gp, std::size_t search_bound)
{
  const PointedGroup &g = *gp;
  const Element x = g.basepoint();
  const Perm &px = g.element(x);

  for (const Perm &s : inverting_conjugators(px, 100000)) {
    bool normalizes = true;
    for (Element gen : g.generators())
      if (!g.find(g.element(gen) ^ s)) {
        normalizes = false;
        break;
      }
    if (!normalizes)
      continue;
    std::vector<Element> image(g.order());
    for (Element a = 0; a < g.order(); ++a)
      image[a] = g.index_of(g.element(a) ^ s);
    return make_obversion(gp, std::move(image));
  }

  if (g.order() > search_bound)
    throw LimitExceeded("obversion search: |G| = " + std::to_string(g.order()) +
                        " exceeds the brute-force bound " + std::to_string(search_bound) +
                        " and no inverting conjugation normalizes the group");

  std::vector<Element> candidates{x};
  candidates.insert(candidates.end(), g.generators().begin(), g.generators().end());
  std::vector<Element> gens = effective_generators(g, candidates);
  if (gens.empty() || gens.front() != x)
    gens.insert(gens.begin(), x); // x = identity case

  std::vector<std::vector<Element>> options(gens.size());
  options[0] = {g.inverse(x)};
  for (std::size_t k = 1; k < gens.size(); ++k)
    for (Element e = 0; e < g.order(); ++e)
      if (g.element_order(e) == g.element_order(gens[k]))
        options[k].push_back(e);

  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    std::vector<Element> images(gens.size());
    for (std::size_t k = 0; k < gens.size(); ++k)
      images[k] = options[k][pick[k]];
    if (auto map = extend_homomorphism(g, gens, images)) {
      std::vector<bool> hit(g.order(), false);
      bool bijective = true;
      for (Element e : *map) {
        if (hit[e]) {
          bijective = false;
          break;
        }
        hit[e] = true;
      }
      if (bijective)
        return make_obversion(gp, std::move(*map));
    }
    std::size_t k = 0;
    for (; k < gens.size(); ++k) {
      if (++pick[k] < options[k].size())
        break;
      pick[k] = 0;
    }
    if (k == gens.size())
      break;
  }
  return std::nullopt;
}

// --- named groups --------------------------------------------------------

Perm psl2_element(int p, long a, long b, long c, long d)
{
  if (mod(a * d - b * c, p) == 0)
    throw std::invalid_argument("singular matrix");
  std::vector<Perm::Point> im(static_cast<std::size_t>(p) + 1);
  const long inf = p;
  for (long t = 0; t <= p; ++t) {
    // row vector (t, 1) times the matrix
    long num, den;
    if (t == inf) {
      num = mod(a, p);
      den = mod(b, p);
    } else {
      num = mod(a * t + c, p);
      den = mod(b * t + d, p);
    }
    long r = den == 0 ? inf : mod(num * inverse_mod(den, p), p);
    im[static_cast<std::size_t>(t)] = static_cast<Perm::Point>(r);
  }
  return Perm(std::move(im));
}

namespace {

struct Family {
  std::string name;
  std::vector<Perm> gens;
  Perm default_basepoint;
  std::size_t degree = 0;
  int psl_prime = 0;
};

Family parse_family(std::string_view desc)
{
  std::string d = trim(desc);
  Family f;
  f.name = d;
  if (d.empty())
    throw ParseError("empty group descriptor");

  if (d.rfind("gens:", 0) == 0) {
    std::vector<std::string> parts;
    std::string rest = d.substr(5);
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto semi = rest.find(';', start);
      parts.push_back(trim(rest.substr(start, semi == std::string::npos ? semi : semi - start)));
      if (semi == std::string::npos)
        break;
      start = semi + 1;
    }
    std::size_t degree = 1;
    for (const auto &s : parts)
      for (std::size_t i = 0; i < s.size();) {
        if (s[i] >= '0' && s[i] <= '9') {
          std::size_t v = 0;
          while (i < s.size() && s[i] >= '0' && s[i] <= '9')
            v = v * 10 + static_cast<std::size_t>(s[i++] - '0');
          degree = std::max(degree, v);
        } else {
          ++i;
        }
      }
    for (const auto &s : parts)
      if (!s.empty())
        f.gens.push_back(Perm::from_cycles(s, degree));
    if (f.gens.empty())
      throw ParseError("gens: descriptor without generators");
    f.degree = degree;
    f.default_basepoint = f.gens.front();
    return f;
  }

  if (d == "M11") {
    f.degree = 11;
    Perm x = Perm::from_cycles("(abcdefghijk)", 11);
    Perm y = Perm::from_cycles("(abcejikdghf)", 11);
    f.gens = {x, y};
    f.default_basepoint = x;
    return f;
  }
  if (d.rfind("PSL2_", 0) == 0) {
    long p = parse_positive(std::string_view(d).substr(5), "prime");
    if (!is_prime(p))
      throw ParseError("PSL2_" + std::to_string(p) + ": p must be prime");
    int ip = static_cast<int>(p);
    f.degree = static_cast<std::size_t>(p) + 1;
    f.gens = {psl2_element(ip, 1, 1, 0, 1), psl2_element(ip, 0, -1, 1, 0)};
    f.default_basepoint = f.gens.front(); // z = [[1,1],[0,1]]
    f.psl_prime = ip;
    return f;
  }
  if (d.rfind("Aff", 0) == 0) {
    long p = parse_positive(std::string_view(d).substr(3), "prime");
    if (!is_prime(p))
      throw ParseError("Aff" + std::to_string(p) + ": p must be prime");
    f.degree = static_cast<std::size_t>(p);
    long root = 1;
    for (long r = 1; r < p; ++r) {
      long k = 1, v = r;
      while (v != 1) {
        v = v * r % p;
        ++k;
      }
      if (k == p - 1) {
        root = r;
        break;
      }
    }
    auto affine = [&](long a, long b) {
      std::vector<Perm::Point> im(static_cast<std::size_t>(p));
      for (long t = 0; t < p; ++t)
        im[static_cast<std::size_t>(t)] = static_cast<Perm::Point>(mod(a + b * t, p));
      return Perm(std::move(im));
    };
    f.gens = {affine(1, 1), affine(0, root)};
    // x = (0, b) with b != b^-1 whenever such b exists
    long b = p >= 5 ? 2 : root;
    f.default_basepoint = affine(0, b);
    return f;
  }

  const char fam = d[0];
  if (fam != 'A' && fam != 'S' && fam != 'D' && fam != 'C')
    throw ParseError("unknown group descriptor '" + d + "'");
  long n = parse_positive(std::string_view(d).substr(1), "group size");
  if (n < 1)
    throw ParseError("group size must be positive in '" + d + "'");
  const std::size_t un = static_cast<std::size_t>(n);

  switch (fam) {
  case 'S':
    f.degree = un;
    if (n >= 2)
      f.gens = {cycle_perm(un), Perm::from_cycles("(1,2)", un)};
    f.default_basepoint = n >= 2 ? cycle_perm(un) : Perm::identity(un);
    return f;
  case 'A': {
    f.degree = un;
    for (std::size_t k = 3; k <= un; ++k)
      f.gens.push_back(Perm::from_cycles("(1,2," + std::to_string(k) + ")", un));
    // a cycle of maximal odd length
    std::size_t l = un % 2 == 1 ? un : un - 1;
    if (l >= 3) {
      std::string c = "(";
      for (std::size_t i = 1; i <= l; ++i)
        c += std::to_string(i) + (i < l ? "," : ")");
      f.default_basepoint = Perm::from_cycles(c, un);
    } else {
      f.default_basepoint = Perm::identity(un);
    }
    return f;
  }
  case 'D': {
    if (n % 2 != 0 || n < 4)
      throw ParseError("dihedral descriptor D<2p> needs an even order >= 4");
    std::size_t p = un / 2;
    f.degree = p;
    std::vector<Perm::Point> refl(p);
    for (std::size_t i = 0; i < p; ++i)
      refl[i] = static_cast<Perm::Point>((p - i) % p);
    f.gens = {cycle_perm(p), Perm(refl)};
    f.default_basepoint = Perm(refl);
    return f;
  }
  case 'C':
    f.degree = un;
    if (n >= 2)
      f.gens = {cycle_perm(un)};
    f.default_basepoint = n >= 2 ? cycle_perm(un) : Perm::identity(un);
    return f;
  }
  throw ParseError("unknown group descriptor '" + d + "'");
}

} // namespace

GroupPtr build_named_group(std::string_view descriptor, std::string_view basepoint)
{
  Family f = parse_family(descriptor);
  GroupPtr g = PointedGroup::from_generators(f.name, f.gens, f.default_basepoint, f.degree);

  if (f.name == "M11" && g->order() != 7920)
    throw std::logic_error("M11 generators produced a group of order " +
                           std::to_string(g->order()));

  std::string bp = trim(basepoint);
  if (bp.empty() || bp == "default")
    return g;

  if (bp.rfind("order:", 0) == 0) {
    long k = parse_positive(std::string_view(bp).substr(6), "element order");
    for (Element e = 0; e < g->order(); ++e)
      if (g->element_order(e) == static_cast<std::size_t>(k))
        return g->with_basepoint(e);
    throw HypothesisError(f.name + " has no element of order " + std::to_string(k));
  }
  if (bp.rfind("matrix:", 0) == 0) {
    if (f.psl_prime == 0)
      throw ParseError("matrix basepoints are only meaningful for PSL2 groups");
    std::vector<long> entries;
    std::string rest = bp.substr(7);
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto comma = rest.find(',', start);
      std::string tok = trim(rest.substr(start, comma == std::string::npos ? comma : comma - start));
      try {
        entries.push_back(std::stol(tok));
      } catch (const std::exception &) {
        throw ParseError("bad matrix entry '" + tok + "'");
      }
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
    if (entries.size() != 4)
      throw ParseError("matrix basepoint needs four entries a,b,c,d");
    Perm m = psl2_element(f.psl_prime, entries[0], entries[1], entries[2], entries[3]);
    auto e = g->find(m);
    if (!e)
      throw HypothesisError("matrix is not in " + f.name);
    return g->with_basepoint(*e);
  }

  Perm p = Perm::from_cycles(bp, g->degree());
  auto e = g->find(p);
  if (!e)
    throw HypothesisError("basepoint " + bp + " is not an element of " + f.name);
  return g->with_basepoint(*e);
}

} // namespace knotcol
