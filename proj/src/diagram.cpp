#include "knotcol/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "knotcol/errors.hpp"

namespace knotcol {

Symmetry parse_symmetry(std::string_view name)
{
  if (name == "identity" || name == "id")
    return Symmetry::Identity;
  if (name == "inv" || name == "inverse")
    return Symmetry::Inverse;
  if (name == "rev" || name == "reverse")
    return Symmetry::Reverse;
  if (name == "obv" || name == "obverse" || name == "mirror")
    return Symmetry::Obverse;
  throw ParseError("unknown symmetry '" + std::string(name) + "'");
}

std::string symmetry_name(Symmetry s)
{
  switch (s) {
  case Symmetry::Identity:
    return "identity";
  case Symmetry::Inverse:
    return "inv";
  case Symmetry::Reverse:
    return "rev";
  case Symmetry::Obverse:
    return "obv";
  }
  return "identity";
}

// --- braids --------------------------------------------------------------

namespace {

class Scanner {
public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip(std::string_view separators = " \t\r\n")
  {
    while (pos_ < text_.size() && separators.find(text_[pos_]) != std::string_view::npos)
      ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  bool accept(char c)
  {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  void expect(char c)
  {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }
  long integer()
  {
    bool neg = false;
    if (peek() == '-' || peek() == '+')
      neg = get() == '-';
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      if (v > 1000000)
        fail("number too large");
    }
    return neg ? -v : v;
  }
  [[noreturn]] void fail(const std::string &msg) const
  {
    throw ParseError("at position " + std::to_string(pos_) + " of '" + std::string(text_) +
                     "': " + msg);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

BraidWord parse_braid_word(std::string_view text, int strands)
{
  BraidWord b;
  int max_index = 0;
  auto push = [&](Scanner &sc, long index, long power) {
    if (index <= 0)
      sc.fail("generator index must be positive");
    max_index = std::max(max_index, static_cast<int>(index));
    int sign = power < 0 ? -1 : 1;
    for (long k = 0; k < (power < 0 ? -power : power); ++k)
      b.letters.push_back({static_cast<int>(index), sign});
  };

  Scanner sc(text);
  sc.skip();
  if (sc.peek() == '[') {
    sc.get();
    sc.skip();
    while (!sc.accept(']')) {
      if (sc.done())
        sc.fail("unterminated list");
      long v = sc.integer();
      if (v == 0)
        sc.fail("generator index must be non-zero");
      push(sc, v < 0 ? -v : v, v < 0 ? -1 : 1);
      sc.skip(" \t\r\n,");
    }
    sc.skip();
    if (!sc.done())
      sc.fail("trailing input");
  } else {
    while (true) {
      sc.skip(" \t\r\n*.");
      if (sc.done())
        break;
      char c = sc.peek();
      if (c == 's') {
        sc.get();
        long index = sc.integer();
        long power = 1;
        if (sc.accept('^')) {
          bool paren = sc.accept('(');
          power = sc.integer();
          if (paren)
            sc.expect(')');
        }
        push(sc, index, power);
      } else if (c >= 'a' && c <= 'z') {
        sc.get();
        push(sc, c - 'a' + 1, 1);
      } else if (c >= 'A' && c <= 'Z') {
        sc.get();
        push(sc, c - 'A' + 1, -1);
      } else {
        sc.fail(std::string("unexpected character '") + c + "'");
      }
    }
  }
  b.strands = std::max({1, max_index + 1, strands});
  return b;
}

std::string format_braid_word(const BraidWord &b)
{
  std::ostringstream out;
  for (std::size_t i = 0; i < b.letters.size(); ++i) {
    if (i)
      out << ' ';
    out << 's' << b.letters[i].index;
    if (b.letters[i].sign < 0)
      out << "^-1";
  }
  return out.str();
}

std::vector<int> closure_permutation(const BraidWord &b)
{
  std::vector<int> perm(static_cast<std::size_t>(b.strands));
  for (int p = 1; p <= b.strands; ++p) {
    int pos = p;
    for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
      if (pos == it->index)
        pos = it->index + 1;
      else if (pos == it->index + 1)
        pos = it->index;
    }
    perm[static_cast<std::size_t>(p - 1)] = pos;
  }
  return perm;
}

bool closes_to_knot(const BraidWord &b)
{
  auto perm = closure_permutation(b);
  int len = 0, p = 1;
  do {
    p = perm[static_cast<std::size_t>(p - 1)];
    ++len;
  } while (p != 1);
  return len == b.strands;
}

BraidWord braid_symmetry(const BraidWord &b, Symmetry op)
{
  BraidWord r = b;
  if (op == Symmetry::Inverse || op == Symmetry::Reverse)
    std::reverse(r.letters.begin(), r.letters.end());
  if (op == Symmetry::Inverse || op == Symmetry::Obverse)
    for (auto &l : r.letters)
      l.sign = -l.sign;
  return r;
}

BraidWord stabilize(const BraidWord &b, int sign)
{
  BraidWord r = b;
  r.letters.push_back({b.strands, sign < 0 ? -1 : 1});
  r.strands = b.strands + 1;
  return r;
}

// --- Wirtinger codes -----------------------------------------------------

void validate(const WirtingerCode &w)
{
  if (w.kappa.size() != w.epsilon.size())
    throw ParseError("Wirtinger code: kappa and epsilon differ in length");
  for (std::size_t i = 0; i < w.kappa.size(); ++i) {
    if (w.kappa[i] > w.crossings())
      throw ParseError("Wirtinger code: kappa(" + std::to_string(i + 1) + ") = " +
                       std::to_string(w.kappa[i]) + " is not an arc");
    if (w.epsilon[i] != 1 && w.epsilon[i] != -1)
      throw ParseError("Wirtinger code: epsilon must be +1 or -1");
  }
}

WirtingerCode parse_wirtinger(std::string_view text)
{
  WirtingerCode w;
  Scanner sc(text);
  while (true) {
    sc.skip(" \t\r\n,");
    if (sc.done())
      break;
    if (!std::isdigit(static_cast<unsigned char>(sc.peek())))
      sc.fail("expected an arc number");
    long k = sc.integer();
    char s = sc.done() ? '\0' : sc.get();
    if (s != '+' && s != '-')
      sc.fail("expected '+' or '-' after the arc number");
    w.kappa.push_back(static_cast<std::size_t>(k));
    w.epsilon.push_back(s == '+' ? 1 : -1);
  }
  validate(w);
  return w;
}

std::string format_wirtinger(const WirtingerCode &w)
{
  std::ostringstream out;
  for (std::size_t i = 0; i < w.crossings(); ++i) {
    if (i)
      out << ' ';
    out << w.kappa[i] << (w.epsilon[i] > 0 ? '+' : '-');
  }
  return out.str();
}

WirtingerCode braid_to_long_wirtinger(const BraidWord &b)
{
  const std::size_t k = b.letters.size();
  std::vector<std::size_t> over_arc(k, 0);
  std::vector<int> visits(k, 0);
  std::vector<std::size_t> under_letters;

  // Walk strand 1 leftwards from its right end; closing strands wrap around.
  int pos = 1;
  std::size_t arc = 0;
  for (int round = 0;; ++round) {
    if (round >= b.strands)
      throw ParseError("braid closure has more than one component");
    for (std::size_t j = k; j-- > 0;) {
      const BraidLetter &l = b.letters[j];
      if (pos != l.index && pos != l.index + 1)
        continue;
      const bool lower = pos == l.index;
      // sigma_i: strand i+1 passes over; sigma_i^-1: strand i passes over
      const bool under = l.sign > 0 ? lower : !lower;
      ++visits[j];
      if (under) {
        under_letters.push_back(j);
        ++arc;
      } else {
        over_arc[j] = arc;
      }
      pos = lower ? l.index + 1 : l.index;
    }
    if (pos == 1)
      break;
  }
  for (int v : visits)
    if (v != 2)
      throw ParseError("braid closure has more than one component");

  WirtingerCode w;
  for (std::size_t j : under_letters) {
    w.kappa.push_back(over_arc[j]);
    w.epsilon.push_back(b.letters[j].sign);
  }
  return w;
}

WirtingerCode wirtinger_symmetry(const WirtingerCode &w, Symmetry op)
{
  const std::size_t n = w.crossings();
  WirtingerCode r = w;
  if (op == Symmetry::Reverse || op == Symmetry::Inverse)
    for (std::size_t j = 1; j <= n; ++j) {
      r.kappa[j - 1] = n - w.kappa[n - j];
      r.epsilon[j - 1] = w.epsilon[n - j];
    }
  if (op == Symmetry::Obverse || op == Symmetry::Inverse)
    for (int &e : r.epsilon)
      e = -e;
  return r;
}

WirtingerCode connected_sum(const WirtingerCode &a, const WirtingerCode &b)
{
  WirtingerCode r = a;
  const std::size_t shift = a.crossings();
  for (std::size_t i = 0; i < b.crossings(); ++i) {
    r.kappa.push_back(b.kappa[i] + shift);
    r.epsilon.push_back(b.epsilon[i]);
  }
  return r;
}

// --- PD codes ------------------------------------------------------------

PDCode parse_pd_code(std::string_view text)
{
  PDCode pd;
  Scanner sc(text);
  sc.skip();
  auto quad = [&](char close) {
    std::array<int, 4> x{};
    for (int i = 0; i < 4; ++i) {
      sc.skip();
      long v = sc.integer();
      if (v <= 0)
        sc.fail("edge labels must be positive");
      x[static_cast<std::size_t>(i)] = static_cast<int>(v);
      sc.skip();
      if (i < 3)
        sc.expect(',');
    }
    sc.expect(close);
    pd.crossings.push_back(x);
  };

  bool wrapped = false;
  if (sc.accept('P')) {
    sc.expect('D');
    sc.skip();
    sc.expect('[');
    wrapped = true;
  } else if (sc.peek() == '[') {
    sc.get();
    sc.skip();
    while (!sc.accept(']')) {
      sc.expect('[');
      quad(']');
      sc.skip(" \t\r\n,");
      if (sc.done())
        sc.fail("unterminated list");
    }
    sc.skip();
    if (!sc.done())
      sc.fail("trailing input");
    return pd;
  }
  while (true) {
    sc.skip(" \t\r\n,");
    if (sc.done())
      break;
    if (wrapped && sc.accept(']')) {
      sc.skip();
      if (!sc.done())
        sc.fail("trailing input");
      return pd;
    }
    sc.expect('X');
    sc.expect('[');
    quad(']');
  }
  if (wrapped)
    sc.fail("missing closing ']'");
  return pd;
}

std::string format_pd_code(const PDCode &pd)
{
  std::ostringstream out;
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto &x = pd.crossings[i];
    out << (i ? " " : "") << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ']';
  }
  return out.str();
}

std::vector<int> pd_edge_labels(const PDCode &pd)
{
  std::set<int> s;
  for (const auto &x : pd.crossings)
    s.insert(x.begin(), x.end());
  return {s.begin(), s.end()};
}

WirtingerCode pd_to_long_wirtinger(const PDCode &pd, std::optional<int> cut_edge)
{
  const std::size_t n = pd.crossings.size();
  if (n == 0) {
    if (cut_edge)
      throw ParseError("the empty PD code has no edges");
    return {};
  }

  struct Slot {
    std::size_t crossing;
    int slot;
  };
  std::map<int, std::vector<Slot>> where;
  for (std::size_t c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s)
      where[pd.crossings[c][static_cast<std::size_t>(s)]].push_back({c, s});
  for (const auto &[label, slots] : where)
    if (slots.size() != 2)
      throw ParseError("PD code: edge " + std::to_string(label) + " occurs " +
                       std::to_string(slots.size()) + " times");

  // Walk straight through every crossing, starting on an under-strand.
  std::vector<Slot> passages;
  Slot cur{0, 0};
  do {
    if (passages.size() >= 2 * n)
      throw ParseError("PD code: walk does not close up");
    passages.push_back(cur);
    const int exit = (cur.slot + 2) % 4;
    const int label = pd.crossings[cur.crossing][static_cast<std::size_t>(exit)];
    const auto &occ = where[label];
    Slot next = (occ[0].crossing == cur.crossing && occ[0].slot == exit) ? occ[1] : occ[0];
    cur = next;
  } while (!(cur.crossing == 0 && cur.slot == 0));
  if (passages.size() != 2 * n)
    throw ParseError("PD code describes more than one component");

  std::vector<int> sign(n, 0);
  std::vector<int> visited(n, 0);
  for (const Slot &p : passages) {
    if (p.slot == 2)
      throw ParseError("PD code: under-strand at crossing " + std::to_string(p.crossing + 1) +
                       " runs against the orientation");
    if (p.slot == 1 || p.slot == 3)
      sign[p.crossing] = p.slot == 3 ? 1 : -1;
    ++visited[p.crossing];
  }
  for (std::size_t c = 0; c < n; ++c)
    if (visited[c] != 2 || sign[c] == 0)
      throw ParseError("PD code: crossing " + std::to_string(c + 1) + " is inconsistent");

  const int cut = cut_edge ? *cut_edge : where.begin()->first;
  if (!where.count(cut))
    throw ParseError("PD code has no edge " + std::to_string(cut));
  std::size_t start = passages.size();
  for (std::size_t i = 0; i < passages.size(); ++i)
    if (pd.crossings[passages[i].crossing][static_cast<std::size_t>(passages[i].slot)] == cut) {
      start = i;
      break;
    }

  std::vector<std::size_t> over_arc(n, 0);
  std::vector<std::size_t> under_crossings;
  std::size_t arc = 0;
  for (std::size_t k = 0; k < passages.size(); ++k) {
    const Slot &p = passages[(start + k) % passages.size()];
    if (p.slot == 0) {
      under_crossings.push_back(p.crossing);
      ++arc;
    } else {
      over_arc[p.crossing] = arc;
    }
  }

  WirtingerCode w;
  for (std::size_t c : under_crossings) {
    w.kappa.push_back(over_arc[c]);
    w.epsilon.push_back(sign[c]);
  }
  return w;
}

PDCode bretzel_pd(int p1, int p2, int p3)
{
  const std::array<int, 3> p{p1, p2, p3};
  for (int v : p)
    if (v % 2 == 0)
      throw ParseError("bretzel parameters must be odd, got " + std::to_string(v));

  // Corners per crossing, counterclockwise: NE = 0, NW = 1, SW = 2, SE = 3.
  // Strands run straight through, NE-SW and NW-SE.
  std::array<std::size_t, 3> base{}, len{};
  std::size_t total = 0;
  for (std::size_t c = 0; c < 3; ++c) {
    base[c] = total;
    len[c] = static_cast<std::size_t>(p[c] < 0 ? -p[c] : p[c]);
    total += len[c];
  }
  const std::size_t none = 4 * total;
  std::vector<std::size_t> partner(4 * total, none);
  auto corner = [](std::size_t crossing, int slot) { return 4 * crossing + static_cast<std::size_t>(slot); };
  auto join = [&](std::size_t a, std::size_t b) {
    partner[a] = b;
    partner[b] = a;
  };
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t t = 0; t + 1 < len[c]; ++t) {
      join(corner(base[c] + t, 2), corner(base[c] + t + 1, 1));
      join(corner(base[c] + t, 3), corner(base[c] + t + 1, 0));
    }
  auto top = [&](std::size_t c) { return base[c]; };
  auto bottom = [&](std::size_t c) { return base[c] + len[c] - 1; };
  for (std::size_t c = 0; c < 2; ++c) {
    join(corner(top(c), 0), corner(top(c + 1), 1));
    join(corner(bottom(c), 3), corner(bottom(c + 1), 2));
  }
  join(corner(top(0), 1), corner(top(2), 0));
  join(corner(bottom(0), 2), corner(bottom(2), 3));

  // Positive twists put the NE-SW strand on top.
  std::vector<bool> ne_over(total);
  for (std::size_t c = 0; c < 3; ++c)
    for (std::size_t t = 0; t < len[c]; ++t)
      ne_over[base[c] + t] = p[c] > 0;

  // Label edges along the walk; record the entry slot of each under passage.
  std::vector<int> label(4 * total, 0);
  std::vector<int> under_entry(total, -1);
  std::size_t entry = corner(0, 1);
  int next_label = 1;
  for (std::size_t step = 0; step < 2 * total; ++step) {
    const std::size_t x = entry / 4;
    const int s = static_cast<int>(entry % 4);
    const bool on_ne_strand = s % 2 == 0;
    if (on_ne_strand != ne_over[x])
      under_entry[x] = s;
    const std::size_t exit = corner(x, (s + 2) % 4);
    label[exit] = next_label;
    label[partner[exit]] = next_label;
    ++next_label;
    entry = partner[exit];
  }
  if (entry != corner(0, 1))
    throw std::logic_error("bretzel walk did not close up");

  PDCode pd;
  for (std::size_t x = 0; x < total; ++x) {
    if (under_entry[x] < 0)
      throw std::logic_error("bretzel diagram is not a knot");
    std::array<int, 4> q{};
    for (int k = 0; k < 4; ++k)
      q[static_cast<std::size_t>(k)] = label[corner(x, (under_entry[x] + k) % 4)];
    pd.crossings.push_back(q);
  }
  return pd;
}

WirtingerCode bretzel_diagram(int p1, int p2, int p3)
{
  return pd_to_long_wirtinger(bretzel_pd(p1, p2, p3));
}

} // namespace knotcol
