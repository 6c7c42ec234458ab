#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "knotcol/colouring.hpp"
#include "knotcol/errors.hpp"
#include "knotcol/fixtures.hpp"

using namespace knotcol;

namespace {

using Terms = std::vector<std::pair<long long, RingElement::Coeff>>;

const char *const kLeftTrefoilPD = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
const char *const kFig8PD = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

GroupPtr a5() { return build_named_group("A5", "(1,2,3,4,5)"); }

RingElement poly(const WirtingerCode &w, const GroupPtr &g) { return colouring_polynomial(w, g).value; }

// |Hom(pi_K, G)| by trying every assignment of the closed knot's n arcs
std::uint64_t brute_homomorphisms(const WirtingerCode &w, const PointedGroup &g)
{
  const std::size_t n = w.crossings();
  if (n == 0)
    return g.order();
  std::vector<Element> c(n, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 1; i <= n && ok; ++i) {
      const Element prev = c[i - 1], next = c[i % n], k = c[w.kappa[i - 1] % n];
      const Element kk = w.epsilon[i - 1] > 0 ? k : g.inverse(k);
      ok = g.conjugate(prev, kk) == next;
    }
    count += ok;
    std::size_t pos = 0;
    while (pos < n && ++c[pos] == g.order())
      c[pos++] = 0;
    if (pos == n)
      break;
  }
  return count;
}

// closure permutation as a product of transpositions, rightmost letter first
std::vector<int> brute_closure(const BraidWord &b)
{
  const auto n = static_cast<std::size_t>(b.strands);
  Perm p = Perm::identity(n);
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    p = p * Perm::from_cycles("(" + std::to_string(it->index) + "," + std::to_string(it->index + 1) + ")", n);
  std::vector<int> r(n);
  for (std::size_t i = 0; i < n; ++i)
    r[i] = static_cast<int>(p[i]) + 1;
  return r;
}

int cycle_count(const std::vector<int> &p)
{
  std::vector<bool> seen(p.size());
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i])
      continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j] - 1))
      seen[j] = true;
  }
  return cycles;
}

} // namespace

TEST_CASE("braid word grammar")
{
  auto b = parse_braid_word("s1^3");
  CHECK(b.strands == 2);
  CHECK(b.letters == std::vector<BraidLetter>{{1, 1}, {1, 1}, {1, 1}});
  CHECK(parse_braid_word("s1^0").letters.empty());
  CHECK(parse_braid_word("").strands == 1);
  CHECK(parse_braid_word("aAbB") == parse_braid_word("s1 s1^-1 s2 s2^-1"));
  CHECK(parse_braid_word("[1,-2,1,-2]") == parse_braid_word("s1 s2^-1 s1 s2^-1"));
  CHECK(parse_braid_word("s1", 4).strands == 4);
  CHECK(format_braid_word(parse_braid_word("s1 s2^-1 s1^2")) == "s1 s2^-1 s1 s1");
  CHECK_THROWS_AS(parse_braid_word("s0"), ParseError);
  CHECK_THROWS_AS(parse_braid_word("s-1"), ParseError);
  CHECK_THROWS_AS(parse_braid_word("s1^"), ParseError);
  CHECK_THROWS_AS(parse_braid_word("s1 q2"), ParseError);
  CHECK(parse_braid_word("s3", 2).strands == 4);
}

TEST_CASE("closure permutations")
{
  for (const char *word : {"s1 s2^-1 s1 s2^-1", "s1^3", "s1 s1", "s1 s3", "s1 s2 s3^-1 s2"}) {
    auto b = parse_braid_word(word);
    CHECK(closure_permutation(b) == brute_closure(b));
    CHECK(closes_to_knot(b) == (cycle_count(brute_closure(b)) == 1));
  }
  CHECK(closes_to_knot(parse_braid_word("s1 s2^-1 s1 s2^-1")));
  CHECK_FALSE(closes_to_knot(parse_braid_word("s1 s1")));
  CHECK_THROWS_AS(braid_to_long_wirtinger(parse_braid_word("s1 s1")), ParseError);
}

TEST_CASE("braid conversion")
{
  auto g = a5();
  auto left = braid_to_long_wirtinger(parse_braid_word("s1^-3"));
  CHECK(left.crossings() == 3);
  CHECK(poly(left, g) == from_powers(g, Terms{{0, 1}, {1, 5}}));
  CHECK(poly(braid_to_long_wirtinger(parse_braid_word("s1^3")), g) ==
        from_powers(g, Terms{{0, 1}, {-1, 5}}));
  CHECK(braid_to_long_wirtinger(parse_braid_word("")).crossings() == 0);

  auto fig8 = braid_to_long_wirtinger(parse_braid_word("s1 s2^-1 s1 s2^-1"));
  CHECK(fig8.crossings() == 4);
  auto a4 = build_named_group("A4", "(1,2,3)");
  auto fig8_pd = pd_to_long_wirtinger(parse_pd_code(kFig8PD));
  const auto oracle = brute_homomorphisms(fig8, *a4);
  CHECK(total_colouring_number(fig8, a4) == oracle);
  CHECK(total_colouring_number(fig8_pd, a4) == oracle);
  CHECK(brute_homomorphisms(fig8_pd, *a4) == oracle);
}

TEST_CASE("converter output is well formed")
{
  std::vector<WirtingerCode> codes = {
      braid_to_long_wirtinger(parse_braid_word("s1 s2^-1 s1 s2^-1")),
      braid_to_long_wirtinger(parse_braid_word("s1 s1 s2^-1 s1 s3 s2^-1 s3")),
      pd_to_long_wirtinger(parse_pd_code(kLeftTrefoilPD)),
      bretzel_diagram(3, 5, 7),
  };
  auto g = a5();
  for (const auto &w : codes) {
    validate(w);
    for (std::size_t i = 0; i < w.crossings(); ++i) {
      CHECK(w.kappa[i] <= w.crossings());
      CHECK((w.epsilon[i] == 1 || w.epsilon[i] == -1));
    }
    std::vector<Element> trivial(w.arcs(), g->basepoint());
    CHECK(partial_longitudes(w, *g, trivial).back() == g->identity());
    CHECK(parse_wirtinger(format_wirtinger(w)) == w);
  }
  CHECK_THROWS_AS(validate(WirtingerCode{{5}, {1}}), ParseError);
  CHECK_THROWS_AS(validate(WirtingerCode{{0}, {2}}), ParseError);
  CHECK_THROWS_AS(parse_wirtinger("2+ 0* 1+"), ParseError);
}

TEST_CASE("PD codes")
{
  auto g = a5();
  auto pd = parse_pd_code(kLeftTrefoilPD);
  CHECK(pd.crossings.size() == 3);
  CHECK(parse_pd_code(format_pd_code(pd)).crossings == pd.crossings);
  CHECK(parse_pd_code("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").crossings == pd.crossings);
  CHECK(pd_edge_labels(pd) == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(poly(pd_to_long_wirtinger(pd), g) == from_powers(g, Terms{{0, 1}, {1, 5}}));
  CHECK(pd_to_long_wirtinger(parse_pd_code("")).crossings() == 0);

  CHECK_THROWS_AS(parse_pd_code("X[1,2,3]"), ParseError);
  CHECK_THROWS_AS(parse_pd_code("X[1,5,2,4] X[3,1,4,6] X[5,3,6,"), ParseError);
  // label 7 appears once
  CHECK_THROWS_AS(pd_to_long_wirtinger(parse_pd_code("X[1,5,2,4] X[3,1,4,6] X[5,3,7,2]")),
                  ParseError);
  CHECK_THROWS_AS(pd_to_long_wirtinger(pd, 99), ParseError);
}

TEST_CASE("cut point independence")
{
  struct Case {
    std::string pd;
    GroupPtr group;
  };
  std::vector<Case> cases = {
      {kLeftTrefoilPD, a5()},
      {kFig8PD, a5()},
      {"[[6,2,7,1],[14,8,15,7],[8,3,9,4],[2,13,3,14],[12,5,13,6],[4,9,5,10],[16,12,1,11],[10,16,"
       "11,15]]",
       build_named_group("PSL2_7")},
  };
  for (const auto &c : cases) {
    auto pd = parse_pd_code(c.pd);
    const auto reference = poly(pd_to_long_wirtinger(pd), c.group);
    for (int edge : pd_edge_labels(pd))
      CHECK(poly(pd_to_long_wirtinger(pd, edge), c.group) == reference);
  }
}

TEST_CASE("braid symmetries")
{
  auto g = a5();
  auto t = parse_braid_word("s1^3");
  CHECK(braid_symmetry(t, Symmetry::Obverse) == parse_braid_word("s1^-3"));
  auto w = parse_braid_word("s1 s2^-1 s3 s2 s1^-1 s3");
  for (Symmetry s : {Symmetry::Identity, Symmetry::Inverse, Symmetry::Reverse, Symmetry::Obverse})
    CHECK(braid_symmetry(braid_symmetry(w, s), s) == w);
  const auto inv = braid_symmetry(w, Symmetry::Inverse);
  CHECK(inv == braid_symmetry(braid_symmetry(w, Symmetry::Reverse), Symmetry::Obverse));
  CHECK(inv == braid_symmetry(braid_symmetry(w, Symmetry::Obverse), Symmetry::Reverse));

  auto fig8 = parse_braid_word("s1 s2^-1 s1 s2^-1");
  CHECK(poly(braid_to_long_wirtinger(braid_symmetry(fig8, Symmetry::Reverse)), g) ==
        poly(braid_to_long_wirtinger(fig8), g));

  CHECK(parse_symmetry("mirror") == Symmetry::Obverse);
  CHECK(symmetry_name(parse_symmetry("reverse")) == "rev");
  CHECK_THROWS_AS(parse_symmetry("flip"), ParseError);
}

TEST_CASE("code symmetries agree with braid symmetries")
{
  auto psl = build_named_group("PSL2_7");
  auto a7 = build_named_group("A7", "(1,2,3,4,5,6,7)");
  auto b = parse_braid_word("s1^-1 s1^-1 s2 s1^-1 s2 s1^-1 s3 s2^-1 s2^-1 s3 s3");
  auto w = braid_to_long_wirtinger(b);
  for (Symmetry s : {Symmetry::Inverse, Symmetry::Reverse, Symmetry::Obverse}) {
    auto ws = wirtinger_symmetry(w, s);
    CHECK(wirtinger_symmetry(ws, s) == w);
    auto from_braid = braid_to_long_wirtinger(braid_symmetry(b, s));
    CHECK(poly(ws, psl) == poly(from_braid, psl));
    CHECK(poly(ws, a7) == poly(from_braid, a7));
  }
  CHECK(wirtinger_symmetry(w, Symmetry::Inverse) ==
        wirtinger_symmetry(wirtinger_symmetry(w, Symmetry::Reverse), Symmetry::Obverse));
}

TEST_CASE("connected sums")
{
  auto g = a5();
  auto unknot = braid_to_long_wirtinger(parse_braid_word(""));
  auto left = braid_to_long_wirtinger(parse_braid_word("s1^-3"));
  auto right = braid_to_long_wirtinger(parse_braid_word("s1^3"));
  auto fig8 = braid_to_long_wirtinger(parse_braid_word("s1 s2^-1 s1 s2^-1"));
  CHECK(connected_sum(unknot, left) == left);
  CHECK(connected_sum(left, unknot) == left);
  CHECK(connected_sum(connected_sum(left, fig8), right) ==
        connected_sum(left, connected_sum(fig8, right)));

  const auto pl = poly(left, g);
  auto sum = connected_sum(left, left);
  CHECK(sum.crossings() == 6);
  CHECK(poly(sum, g) == from_powers(g, Terms{{0, 1}, {1, 10}, {2, 25}}));
  CHECK(poly(connected_sum(left, right), g) == pl * poly(right, g));
  CHECK(poly(connected_sum(left, fig8), g) == pl * poly(fig8, g));
}

TEST_CASE("bretzel knots")
{
  auto g = a5();
  CHECK(poly(bretzel_diagram(1, 1, 1), g) == from_powers(g, Terms{{0, 1}, {1, 5}}));
  CHECK(poly(bretzel_diagram(-1, -1, -1), g) == from_powers(g, Terms{{0, 1}, {-1, 5}}));
  CHECK(bretzel_diagram(3, 5, 7).crossings() == 15);
  CHECK(bretzel_pd(3, 5, 7).crossings.size() == 15);
  CHECK_THROWS_AS(bretzel_diagram(2, 5, 7), ParseError);
}

TEST_CASE("fixture files")
{
  const auto names = fixture_names();
  for (const char *n : {"unknot", "trefoil_left", "trefoil_right", "fig8", "kinoshita_terasaka",
                        "conway", "bretzel_3_5_7", "8_17"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  for (const auto &n : names) {
    auto f = load_fixture(n);
    CHECK(f.name == n);
    CHECK_FALSE(f.provenance.empty());
    validate(f.source().code);
    auto again = parse_fixture(format_fixture(f));
    CHECK(again.data == f.data);
    CHECK(again.calibration == f.calibration);
  }
  CHECK(load_fixture("unknot").source().code.crossings() == 0);
  CHECK(load_fixture("bretzel_3_5_7").source().code == bretzel_diagram(3, 5, 7));
  CHECK(load_fixture("conway").calibration == std::vector<Symmetry>{Symmetry::Reverse});
  CHECK(load_fixture("fig8").source().braid.has_value());
  CHECK_THROWS_AS(load_fixture("no_such_knot"), ParseError);
  CHECK_THROWS_AS(parse_fixture("name: x\nencoding: braid\n"), ParseError);
  CHECK_THROWS_AS(parse_fixture("name: x\nname: y\nencoding: braid\ndata: s1\n"), ParseError);
  CHECK_THROWS_AS(parse_fixture("name: x\nencoding: gauss\ndata: 1 -2\n").source(), ParseError);
}

TEST_CASE("fixture directory override")
{
  const auto dir = std::filesystem::temp_directory_path() / "knotcol_fixture_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "stevedore_like.knot");
    out << "# comment\nname: stevedore_like\nencoding: wirtinger\ndata: 2+ 0+ 1+\n"
           "provenance: hand written\ncalibration: obv\n";
  }
  setenv("KNOTCOL_FIXTURES", dir.c_str(), 1);
  CHECK(fixture_names() == std::vector<std::string>{"stevedore_like"});
  auto src = load_fixture("stevedore_like").source();
  CHECK(src.code == parse_wirtinger("2- 0- 1-"));
  CHECK_FALSE(src.braid);
  unsetenv("KNOTCOL_FIXTURES");
  std::filesystem::remove_all(dir);
  CHECK(fixture_names().size() >= 8);
}
