#include "knotcol/verify.hpp"

#include <random>
#include <stdexcept>

#include "knotcol/errors.hpp"
#include "knotcol/fixtures.hpp"
#include "knotcol/golden.hpp"
#include "knotcol/state_sum.hpp"
#include "knotcol/yang_baxter.hpp"

namespace knotcol {

void SuiteReport::add(std::string name, bool passed, std::string detail)
{
  checks.push_back({std::move(name), passed, std::move(detail)});
}

void SuiteReport::append(const SuiteReport &other)
{
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

int SuiteReport::passed() const
{
  int n = 0;
  for (const auto &c : checks)
    n += c.passed;
  return n;
}

int SuiteReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

nlohmann::json SuiteReport::to_json() const
{
  nlohmann::json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["failed"] = failed();
  j["checks"] = nlohmann::json::array();
  for (const auto &c : checks)
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return j;
}

namespace {

struct PointedCase {
  const char *label;
  const char *group;
  const char *basepoint;
};

// Groups with abelian Lambda used by the cocycle, trace and theorem checks.
const std::vector<PointedCase> &theorem_groups()
{
  static const std::vector<PointedCase> cases = {
      {"A5", "A5", "(1,2,3,4,5)"},
      {"PSL2_7 z", "PSL2_7", ""},
  };
  return cases;
}

std::string report_detail(const AxiomReport &r) { return r.ok ? "" : r.violation; }

std::vector<Element> random_cochain(const FiniteQuandle &q, const PointedGroup &g,
                                    std::mt19937_64 &rng)
{
  const auto &members = g.longitude().subgroup.members;
  std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
  std::vector<Element> mu(q.size());
  for (auto &m : mu)
    m = members[pick(rng)];
  return mu;
}

} // namespace

SuiteReport verify_axioms(const VerifyOptions &opt)
{
  SuiteReport r{"axioms", {}};
  GroupCache groups;
  std::vector<std::pair<std::string, GroupPtr>> cases = {
      {"A5", groups.get("A5", "(1,2,3,4,5)")},
      {"PSL2_7 z", groups.get("PSL2_7", "")},
      {"PSL2_7 order 3", groups.get("PSL2_7", "matrix:0,1,-1,1")},
      {"A7", groups.get("A7", "(1,2,3,4,5,6,7)")},
      {"S4", groups.get("S4", "(1,2)")},
      {"D10", groups.get("D10", "")},
  };
  if (opt.large)
    cases.push_back({"M11", groups.get("M11", "")});
  for (const auto &[name, g] : cases) {
    const auto cq = conjugation_quandle(g);
    r.add("conjugation quandle " + name, verify_quandle_axioms(cq.quandle).ok,
          report_detail(verify_quandle_axioms(cq.quandle)));
    if (g->order() <= 200) {
      const auto inn = inner_group(cq.quandle);
      r.add("inner group of " + name + " is generated by translations",
            inn->order() > 0 && inn->is_colouring_group());
    }
  }
  for (const auto &c : theorem_groups()) {
    const auto g = groups.get(c.group, c.basepoint);
    const CoveringQuandle cov(g);
    const auto full = cov.materialize();
    const auto rep = verify_quandle_axioms(full);
    r.add(std::string("covering quandle ") + c.label, rep.ok, report_detail(rep));
    const auto l = cocycle_from_section(cov);
    const auto ext = central_extension(cov.base().quandle, l, g->longitude().subgroup.members);
    const auto erep = verify_quandle_axioms(ext);
    r.add(std::string("central extension ") + c.label, erep.ok, report_detail(erep));
  }
  r.add("trivial quandle", verify_quandle_axioms(trivial_quandle(5)).ok);
  return r;
}

SuiteReport verify_cocycles(const VerifyOptions &opt)
{
  SuiteReport r{"cocycle", {}};
  GroupCache groups;
  std::mt19937_64 rng(opt.seed);
  for (const auto &c : theorem_groups()) {
    const std::string label = c.label;
    const auto g = groups.get(c.group, c.basepoint);
    const CoveringQuandle cov(g);
    const auto crep = verify_covering(cov);
    r.add("covering axioms " + label, crep.ok, crep.violation);

    const FiniteQuandle &q = cov.base().quandle;
    const auto l = cocycle_from_section(cov);
    const auto lrep = verify_cocycle(q, l);
    r.add("cocycle condition " + label, lrep.ok && is_cocycle(q, l), report_detail(lrep));

    int bad = 0;
    for (int t = 0; t < opt.coboundary_trials; ++t)
      if (!is_cocycle(q, coboundary(q, g, random_cochain(q, *g, rng))))
        ++bad;
    r.add("d2 d1 = 0 on " + std::to_string(opt.coboundary_trials) + " cochains " + label, bad == 0,
          bad ? std::to_string(bad) + " failures" : "");

    // any other section gives a cohomologous cocycle
    std::vector<CoveringQuandle::Index> section(q.size());
    const auto &lambda = g->longitude().subgroup.members;
    std::uniform_int_distribution<std::size_t> pick(0, lambda.size() - 1);
    for (FiniteQuandle::Index a = 0; a < q.size(); ++a)
      section[a] = cov.deck(lambda[pick(rng)], cov.section(a));
    const auto l2 = cocycle_from_section(cov, section);
    r.add("sections give cohomologous cocycles " + label, is_cohomologous(q, l, l2, lambda));

    for (const char *knot : {"trefoil_left", "fig8"}) {
      const auto w = load_fixture(knot).source().code;
      const auto base = state_sum(w, q, l, opt.search);
      int changed = 0;
      for (int t = 0; t < opt.gauge_trials; ++t) {
        const auto gauge = coboundary(q, g, random_cochain(q, *g, rng));
        if (!(state_sum(w, q, cocycle_product(l, gauge), opt.search) == base))
          ++changed;
      }
      r.add("gauge invariance " + label + " " + knot, changed == 0,
            changed ? std::to_string(changed) + " coboundaries changed the state sum" : "");
    }
  }
  return r;
}

SuiteReport verify_yb(const VerifyOptions &opt)
{
  SuiteReport r{"yb", {}};
  GroupCache groups;
  for (const auto &c : theorem_groups()) {
    const auto g = groups.get(c.group, c.basepoint);
    for (bool deformed : {false, true}) {
      const std::string label = std::string(deformed ? "deformed " : "plain ") + c.label;
      YBOperator op;
      try {
        op = build_yb_operator(g, deformed);
      } catch (const HypothesisError &e) {
        r.add("operator " + label, false, e.what());
        continue;
      }
      r.add("Yang-Baxter equation " + label, check_yang_baxter(op));
      r.add("far commutation " + label, check_far_commutation(op));
      r.add("trace condition " + label, check_trace_condition(op));
      for (const char *knot : {"trefoil_left", "fig8"}) {
        const auto b = *load_fixture(knot).source().braid;
        const auto m = markov_spot_check(b, op, opt.markov_trials, opt.seed);
        std::string detail;
        for (const auto &d : m.details)
          detail += (detail.empty() ? "" : "; ") + d;
        r.add("Markov moves " + label + " " + knot + " (" + std::to_string(m.checks) + " moves)",
              m.ok(), detail);
      }
    }
  }
  return r;
}

SuiteReport verify_theorems(const VerifyOptions &opt)
{
  SuiteReport r{"theorems", {}};
  GroupCache groups;
  for (const auto &c : theorem_groups()) {
    const auto g = groups.get(c.group, c.basepoint);
    const CoveringQuandle cov(g);
    const auto l = cocycle_from_section(cov);
    const auto op = build_yb_operator(g, true);
    const auto size = static_cast<RingElement::Coeff>(cov.base().quandle.size());
    for (const char *knot : {"trefoil_left", "fig8"}) {
      const std::string label = std::string(c.label) + " " + knot;
      const auto src = load_fixture(knot).source();
      const auto p = colouring_polynomial(src.code, g, opt.search).value;
      const auto expected = p * size;

      const auto ss = state_sum(src.code, cov.base().quandle, l, opt.search);
      r.add("state sum = P|Q| " + label, ss == expected, render(ss, "x"));
      const auto tr = closed_trace(*src.braid, op, opt.search);
      r.add("closed trace = P|Q| " + label, tr == expected, render(tr, "x"));
      const auto lt = long_partial_trace(*src.braid, g, opt.search);
      r.add("long trace = P " + label, lt == p, render(lt, "x"));
      const auto sp = specialize_ss_to_cp(cov.base().quandle, l, g->longitude().subgroup.members,
                                          src.code, opt.search);
      r.add("specialization " + label, sp.equal, render(sp.specialized, "x"));
    }
  }
  return r;
}

SuiteReport verify_lifting(const VerifyOptions &opt)
{
  SuiteReport r{"lifting", {}};
  const auto g = build_named_group("A5", "(1,2,3,4,5)");
  const auto cq = conjugation_quandle(g);
  const auto aug = inner_augmentation(cq.quandle);
  const auto q = *cq.quandle.basepoint();
  const auto inn = aug.group->with_basepoint(aug.phi[q]);
  r.add("inner augmentation verifies", verify_augmentation(aug).ok);
  for (const char *knot : {"trefoil_left", "fig8", "8_17"}) {
    const auto w = load_fixture(knot).source().code;
    const auto open = enumerate_quandle_colourings(w, cq.quandle, q, false, opt.search).size();
    const auto cols = enumerate_colourings(w, inn, opt.search);
    r.add(std::string("lifting bijection ") + knot, open == cols.size(),
          std::to_string(open) + " quandle vs " + std::to_string(cols.size()) + " group colourings");
    const auto closed = quandle_colourings(w, cq.quandle, q, opt.search);
    const auto kept = closed_lifting_filter(cols, aug, q).size();
    r.add(std::string("closed lifting ") + knot, closed == kept,
          std::to_string(closed) + " closed vs " + std::to_string(kept) + " filtered");
  }
  return r;
}

SuiteReport verify_golden(const VerifyOptions &opt)
{
  SuiteReport r{"golden", {}};
  GroupCache groups;
  for (const auto &v : golden_values()) {
    const auto g = groups.get(v.group, v.basepoint);
    const auto w = load_fixture(v.knot).source().variant(v.symmetry);
    const auto p = colouring_polynomial(w, g, opt.search).value;
    const auto expected = from_powers(g, v.terms);
    const std::string label = v.knot + "^" + symmetry_name(v.symmetry) + " over " + v.group +
                              (v.basepoint.empty() ? "" : " " + v.basepoint);
    r.add(label, p == expected, render(p, "x"));
    const auto pc = check_prime_congruence(p, *g);
    if (pc.hypothesis)
      r.add("prime congruence mod " + std::to_string(pc.prime) + " " + label, pc.holds);
  }
  return r;
}

const std::vector<std::string> &verify_suite_names()
{
  static const std::vector<std::string> names = {"axioms", "cocycle", "yb", "theorems", "golden", "all"};
  return names;
}

SuiteReport run_verify_suite(const std::string &name, const VerifyOptions &opt)
{
  if (name == "axioms")
    return verify_axioms(opt);
  if (name == "cocycle")
    return verify_cocycles(opt);
  if (name == "yb")
    return verify_yb(opt);
  if (name == "theorems") {
    SuiteReport r = verify_theorems(opt);
    r.append(verify_lifting(opt));
    return r;
  }
  if (name == "golden")
    return verify_golden(opt);
  if (name == "all") {
    SuiteReport r{"all", {}};
    for (const auto &n : verify_suite_names())
      if (n != "all")
        r.append(run_verify_suite(n, opt));
    return r;
  }
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

} // namespace knotcol
