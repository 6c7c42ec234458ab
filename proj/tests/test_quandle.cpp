#include "doctest.h"

#include <random>
#include <set>

#include "knotcol/errors.hpp"
#include "knotcol/quandle.hpp"

using namespace knotcol;

namespace {

using Index = FiniteQuandle::Index;

GroupPtr a5() { return build_named_group("A5", "(1,2,3,4,5)"); }

// delta^2 evaluated with group operations directly, independent of is_cocycle
bool brute_cocycle(const FiniteQuandle &q, const Cocycle2 &l)
{
  const PointedGroup &g = *l.group;
  for (Index a = 0; a < q.size(); ++a) {
    if (l(a, a) != g.identity())
      return false;
    for (Index b = 0; b < q.size(); ++b)
      for (Index c = 0; c < q.size(); ++c) {
        Element lhs = g.multiply(l(a, b), l(q.op(a, b), c));
        Element rhs = g.multiply(l(a, c), l(q.op(a, c), q.op(b, c)));
        if (lhs != rhs)
          return false;
      }
  }
  return true;
}

std::vector<Element> random_cochain(const FiniteQuandle &q, const PointedGroup &g, std::mt19937 &rng)
{
  const auto &m = g.longitude().subgroup.members;
  std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
  std::vector<Element> mu(q.size());
  for (auto &e : mu)
    e = m[pick(rng)];
  return mu;
}

} // namespace

TEST_CASE("conjugation quandles")
{
  auto g = a5();
  auto cq = conjugation_quandle(g);
  CHECK(cq.quandle.size() == 12);
  CHECK(is_connected(cq.quandle));
  CHECK(verify_quandle_axioms(cq.quandle).ok);
  REQUIRE(cq.quandle.basepoint());
  CHECK(cq.elements[*cq.quandle.basepoint()] == g->basepoint());
  for (Index a = 0; a < 12; ++a)
    for (Index b = 0; b < 12; ++b)
      CHECK(cq.elements[cq.quandle.op(a, b)] == g->conjugate(cq.elements[a], cq.elements[b]));

  auto trivial = conjugation_quandle(build_named_group("S1"));
  CHECK(trivial.quandle.size() == 1);
  CHECK(conjugation_quandle(build_named_group("M11")).quandle.size() == 720);
  // the class of (1,2,3) in S3 does not generate S3
  CHECK_THROWS_AS(conjugation_quandle(build_named_group("S3", "(1,2,3)")), HypothesisError);
}

TEST_CASE("axiom violations are reported")
{
  FiniteQuandle not_idempotent(2, {1, 1, 0, 0});
  auto r = verify_quandle_axioms(not_idempotent);
  CHECK_FALSE(r.ok);
  CHECK(r.violation.find("(Q1)") != std::string::npos);

  FiniteQuandle not_distributive(3, {0, 2, 1, 1, 1, 0, 2, 0, 2});
  auto d = verify_quandle_axioms(not_distributive);
  CHECK_FALSE(d.ok);
  CHECK(d.violation.find("(Q3)") != std::string::npos);

  // a*b not invertible in a
  CHECK_THROWS_AS(FiniteQuandle(2, {0, 0, 0, 1}), HypothesisError);
  CHECK_THROWS_AS(FiniteQuandle(2, {0, 1, 0}), HypothesisError);
}

TEST_CASE("inner groups and connectivity")
{
  auto one = trivial_quandle(1);
  CHECK(inner_group(one)->order() == 1);
  CHECK(is_connected(one));
  auto two = trivial_quandle(2);
  CHECK(verify_quandle_axioms(two).ok);
  CHECK_FALSE(is_connected(two));

  auto cq = conjugation_quandle(a5());
  auto inn = inner_group(cq.quandle);
  CHECK(inn->order() == 60);
  std::set<Perm::Point> orbit;
  for (const Perm &p : inn->elements())
    orbit.insert(p[0]);
  CHECK(orbit.size() == 12);
}

TEST_CASE("covering quandle of A5")
{
  auto g = a5();
  CoveringQuandle cov(g);
  CHECK(cov.size() == 60);
  const auto &base = cov.base();
  const Index x = *base.quandle.basepoint();
  const Index root = cov.section(x);
  CHECK(cov.g_part(root) == g->identity());
  CHECK(cov.projection(root) == x);

  std::vector<int> fibre(base.quandle.size(), 0);
  for (Index e = 0; e < cov.size(); ++e) {
    ++fibre[cov.projection(e)];
    // a = x^g
    CHECK(base.elements[cov.projection(e)] == g->conjugate(g->basepoint(), cov.g_part(e)));
  }
  for (int f : fibre)
    CHECK(f == 5);

  for (Element l : g->longitude().subgroup.members) {
    const Index moved = cov.deck(l, root);
    CHECK(cov.projection(moved) == x);
    CHECK(cov.g_part(moved) == l);
  }

  auto report = verify_covering(cov);
  CHECK(report.ok);
  auto full = cov.materialize();
  CHECK(verify_quandle_axioms(full).ok);
  CHECK(is_connected(full));
  for (Index e = 0; e < cov.size(); ++e)
    for (Index f = 0; f < cov.size(); ++f)
      CHECK(cov.projection(cov.op(e, f)) == base.quandle.op(cov.projection(e), cov.projection(f)));
  CHECK_THROWS_AS(cov.materialize(10), LimitExceeded);
}

TEST_CASE("cocycles from sections")
{
  for (auto [name, bp] : {std::pair{"A5", "(1,2,3,4,5)"}, std::pair{"PSL2_7", ""},
                          std::pair{"PSL2_7", "matrix:0,1,-1,1"}}) {
    auto g = build_named_group(name, bp);
    CoveringQuandle cov(g);
    const auto &q = cov.base().quandle;
    auto l = cocycle_from_section(cov);
    for (Index a = 0; a < q.size(); ++a)
      CHECK(l(a, a) == g->identity());
    CHECK(brute_cocycle(q, l));
    CHECK(is_cocycle(q, l));
    CHECK(verify_cocycle(q, l).ok);
  }
}

TEST_CASE("changing the section changes the cocycle by a coboundary")
{
  auto g = a5();
  CoveringQuandle cov(g);
  const auto &q = cov.base().quandle;
  auto l = cocycle_from_section(cov);
  std::mt19937 rng(11);
  auto mu = random_cochain(q, *g, rng);
  std::vector<CoveringQuandle::Index> section(q.size());
  for (Index a = 0; a < q.size(); ++a)
    section[a] = cov.deck(mu[a], cov.section(a));
  auto l2 = cocycle_from_section(cov, section);
  CHECK(brute_cocycle(q, l2));
  CHECK(l2 == cocycle_product(l, coboundary(q, g, mu)));
  for (Index a = 0; a < q.size(); ++a)
    CHECK(cov.fibre_coordinate(section[a]) == mu[a]);
  const auto &lambda = g->longitude().subgroup.members;
  CHECK(is_cohomologous(q, l, l2, lambda));
  auto witness = cohomology_witness(q, l, l2, lambda);
  REQUIRE(witness);
  CHECK(cocycle_product(l, coboundary(q, g, *witness)) == l2);
}

TEST_CASE("coboundaries")
{
  auto g = build_named_group("PSL2_7");
  auto cq = conjugation_quandle(g);
  const auto &q = cq.quandle;
  auto zero = coboundary(q, g, std::vector<Element>(q.size(), g->identity()));
  for (Element e : zero.values)
    CHECK(e == g->identity());
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    auto d = coboundary(q, g, random_cochain(q, *g, rng));
    CHECK(is_cocycle(q, d));
  }
  // the covering cocycle is not a coboundary: not cohomologous to zero
  CoveringQuandle cov(g);
  auto l = cocycle_from_section(cov);
  CHECK_FALSE(is_cohomologous(q, l, zero, g->longitude().subgroup.members));
  CHECK(is_cohomologous(q, zero, coboundary(q, g, random_cochain(q, *g, rng)),
                        g->longitude().subgroup.members));
}

TEST_CASE("non-abelian longitude group")
{
  auto g = build_named_group("A7", "(1,2,3)");
  CHECK_FALSE(g->longitude().is_abelian);
  CoveringQuandle cov(g);
  CHECK(cov.size() == g->commutator().order());
  CHECK_THROWS_AS(cocycle_from_section(cov), HypothesisError);
}

TEST_CASE("augmentations")
{
  for (auto [name, bp] : {std::pair{"A5", "(1,2,3,4,5)"}, std::pair{"D6", "(1,2)"},
                          std::pair{"S4", "(1,2,3,4)"}}) {
    auto cq = conjugation_quandle(build_named_group(name, bp));
    auto aug = inner_augmentation(cq.quandle);
    CHECK(verify_augmentation(aug).ok);
    auto broken = aug;
    std::swap(broken.phi[0], broken.phi[1]);
    CHECK_FALSE(verify_augmentation(broken).ok);
  }
  auto cov = CoveringQuandle(a5()).materialize();
  CHECK(verify_augmentation(inner_augmentation(cov)).ok);
}

TEST_CASE("CSV tables")
{
  auto g = a5();
  CoveringQuandle cov(g);
  const auto &q = cov.base().quandle;
  auto back = quandle_from_csv(quandle_to_csv(q));
  CHECK(back.op_table() == q.op_table());
  auto l = cocycle_from_section(cov);
  auto l2 = cocycle_from_csv(cocycle_to_csv(l), g);
  CHECK(l2 == l);
  CHECK_THROWS_AS(quandle_from_csv("0,1\n1"), ParseError);
  CHECK_THROWS_AS(cocycle_from_csv("\"(1,2)\"", g), ParseError);
}
