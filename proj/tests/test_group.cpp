#include "doctest.h"

#include <algorithm>

#include "knotcol/errors.hpp"
#include "knotcol/group.hpp"

using namespace knotcol;

namespace {

// brute-force oracles over the element list
std::size_t brute_class_size(const PointedGroup &g, Element x)
{
  std::vector<Perm> seen;
  for (const Perm &h : g.elements()) {
    Perm c = h.inverse() * g.element(x) * h;
    if (std::find(seen.begin(), seen.end(), c) == seen.end())
      seen.push_back(c);
  }
  return seen.size();
}

std::size_t brute_centralizer_size(const PointedGroup &g, Element x)
{
  std::size_t n = 0;
  for (const Perm &h : g.elements())
    if (h * g.element(x) == g.element(x) * h)
      ++n;
  return n;
}

void check_group_laws(const PointedGroup &g)
{
  for (Element a = 0; a < g.order(); ++a) {
    CHECK(g.multiply(a, g.inverse(a)) == g.identity());
    CHECK(g.multiply(g.identity(), a) == a);
  }
  const std::size_t step = std::max<std::size_t>(1, g.order() / 13);
  for (Element a = 0; a < g.order(); a += step)
    for (Element b = 0; b < g.order(); b += step)
      for (Element c = 0; c < g.order(); c += step)
        CHECK(g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c)));
}

} // namespace

TEST_CASE("permutations use the right action")
{
  Perm a = Perm::from_cycles("(1,2)", 3);
  Perm b = Perm::from_cycles("(2,3)", 3);
  // a then b: 1 -> 2 -> 3
  CHECK((a * b)[0] == 2);
  CHECK((a ^ b) == b.inverse() * a * b);
  CHECK(Perm::from_cycles("(abcdefghijk)", 11).order() == 11);
  CHECK(Perm::from_cycles("(1,2,3)(4,5)", 5).to_cycles() == "(1,2,3)(4,5)");
  CHECK(Perm::identity(4).to_cycles() == "()");
  CHECK_THROWS_AS(Perm::from_cycles("(1,2", 3), ParseError);
  CHECK_THROWS_AS(Perm::from_cycles("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(Perm::from_cycles("(1,2,1)", 3), ParseError);
}

TEST_CASE("alternating group A5")
{
  auto g = build_named_group("A5", "(1,2,3,4,5)");
  CHECK(g->order() == 60);
  CHECK(g->identity() == 0);
  CHECK(g->element(0).is_identity());
  CHECK(g->basepoint_class().size() == 12);
  CHECK(brute_class_size(*g, g->basepoint()) == 12);
  CHECK(g->basepoint_centralizer().order() == 5);
  CHECK(brute_centralizer_size(*g, g->basepoint()) == 5);
  CHECK(g->is_colouring_group());
  const auto &lam = g->longitude();
  CHECK(lam.subgroup.order() == 5);
  CHECK(lam.is_abelian);
  REQUIRE(lam.generator);
  CHECK(*lam.generator == g->basepoint());
  CHECK(conjugacy_class(*g, g->identity()).size() == 1);
  check_group_laws(*g);
}

TEST_CASE("class size times centralizer order is the group order")
{
  for (auto [d, b] : std::vector<std::pair<std::string, std::string>>{
           {"A5", ""}, {"S5", "(1,2)"}, {"PSL2_7", ""}, {"PSL2_7", "order:3"}, {"A7", ""},
           {"D10", ""}, {"Aff5", ""}, {"C6", ""}}) {
    auto g = build_named_group(d, b);
    CHECK(g->basepoint_class().size() * g->basepoint_centralizer().order() == g->order());
    CHECK(g->basepoint_class().size() == brute_class_size(*g, g->basepoint()));
  }
}

TEST_CASE("named group orders")
{
  CHECK(build_named_group("S1")->order() == 1);
  CHECK(build_named_group("S1")->basepoint() == 0);
  CHECK(build_named_group("S4")->order() == 24);
  CHECK(build_named_group("A7")->order() == 2520);
  CHECK(build_named_group("D6")->order() == 6);
  CHECK(build_named_group("C2")->order() == 2);
  CHECK(build_named_group("PSL2_5")->order() == 60);
  CHECK(build_named_group("PSL2_7")->order() == 168);
  CHECK(build_named_group("PSL2_11")->order() == 660);
  CHECK(build_named_group("Aff5")->order() == 20);
  CHECK(build_named_group("gens:(1,2,3);(1,2)")->order() == 6);
  CHECK_THROWS_AS(build_named_group("PSL2_8"), ParseError);
  CHECK_THROWS_AS(build_named_group("Q8"), ParseError);
  CHECK_THROWS_AS(build_named_group("A5", "(1,2)"), HypothesisError);
  CHECK_THROWS_AS(build_named_group("A5", "order:7"), HypothesisError);
}

TEST_CASE("psl2 basepoints")
{
  auto g = build_named_group("PSL2_7");
  CHECK(g->element_order(g->basepoint()) == 7);
  CHECK(g->longitude().subgroup.order() == 7);
  CHECK(*g->longitude().generator == g->basepoint());
  auto h = build_named_group("PSL2_7", "order:3");
  CHECK(h->element_order(h->basepoint()) == 3);
  auto m = build_named_group("PSL2_7", "matrix:0,1,-1,1");
  CHECK(m->element_order(m->basepoint()) == 3);
  CHECK(m->longitude().subgroup.order() == 3);
}

TEST_CASE("psl2 is perfect")
{
  for (const char *d : {"PSL2_5", "PSL2_7", "PSL2_11"}) {
    auto g = build_named_group(d);
    CHECK(g->commutator().order() == g->order());
  }
  CHECK(build_named_group("S4")->commutator().order() == 12);
  CHECK(build_named_group("A3")->longitude().subgroup.order() == 1);
}

TEST_CASE("Mathieu group M11")
{
  auto g = build_named_group("M11");
  CHECK(g->order() == 7920);
  CHECK_FALSE(g->has_dense_table());
  CHECK(g->is_colouring_group());
  CHECK(g->basepoint_class().size() == 720);
  CHECK(g->basepoint_centralizer().order() == 11);
  CHECK(g->commutator().order() == 7920);
  CHECK(g->longitude().subgroup.order() == 11);
  CHECK(*g->longitude().generator == g->basepoint());
  CHECK(g->format(g->basepoint()) == "(1,2,3,4,5,6,7,8,9,10,11)");
}

TEST_CASE("colouring core")
{
  auto s5 = build_named_group("S5", "(1,2,3,4,5)");
  CHECK_FALSE(s5->is_colouring_group());
  auto core = colouring_core(s5);
  CHECK(core->order() == 60);
  CHECK(core->is_colouring_group());
  CHECK(colouring_core(core)->order() == 60);
  auto a5 = build_named_group("A5");
  CHECK(colouring_core(a5)->order() == 60);
  auto triv = build_named_group("A5", "()");
  CHECK(colouring_core(triv)->order() == 1);
}

TEST_CASE("generated subgroups")
{
  auto g = build_named_group("S4");
  auto x = g->index_of(Perm::from_cycles("(1,2,3,4)", 4));
  CHECK(generated_subgroup(*g, {x}).order() == 4);
  CHECK(element_order(*g, x) == 4);
  CHECK(g->power(x, -1) == g->inverse(x));
  CHECK(g->power(x, 4) == g->identity());
}

TEST_CASE("obversions")
{
  SUBCASE("A7 by conjugation")
  {
    auto g = build_named_group("A7", "(1,2,3,4,5,6,7)");
    auto ob = find_obversion(g);
    REQUIRE(ob);
    CHECK(ob->obversion(g->basepoint()) == g->inverse(g->basepoint()));
    CHECK(ob->obversion.respects_products());
    CHECK(ob->obversion.is_bijective());
    CHECK(ob->reversion(g->basepoint()) == g->basepoint());
    CHECK(ob->reversion.respects_products());
  }
  SUBCASE("affine group of order 20 has none")
  {
    auto g = build_named_group("Aff5");
    CHECK(g->basepoint() != g->inverse(g->basepoint()));
    CHECK_FALSE(find_obversion(g));
  }
  SUBCASE("involution basepoint")
  {
    auto g = build_named_group("C2");
    auto ob = find_obversion(g);
    REQUIRE(ob);
    CHECK(ob->obversion(1) == 1);
  }
  SUBCASE("PSL2_7")
  {
    auto g = build_named_group("PSL2_7");
    auto ob = find_obversion(g);
    REQUIRE(ob);
    CHECK(ob->obversion.respects_products());
    CHECK(ob->obversion(g->basepoint()) == g->inverse(g->basepoint()));
  }
  SUBCASE("M11 exceeds the brute-force bound")
  {
    auto g = build_named_group("M11");
    CHECK_THROWS_AS(find_obversion(g), LimitExceeded);
  }
}
