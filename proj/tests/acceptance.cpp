// Prints one PASS/FAIL line per acceptance criterion; exits non-zero on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "knotcol/colouring.hpp"
#include "knotcol/errors.hpp"
#include "knotcol/fixtures.hpp"
#include "knotcol/golden.hpp"
#include "knotcol/verify.hpp"

using namespace knotcol;

namespace {

GroupCache groups;

bool golden_match(const std::function<bool(const GoldenValue &)> &select, std::string &detail)
{
  bool ok = true;
  int count = 0;
  for (const auto &v : golden_values()) {
    if (!select(v))
      continue;
    ++count;
    const auto g = groups.get(v.group, v.basepoint);
    const auto p = colouring_polynomial(load_fixture(v.knot).source().variant(v.symmetry), g).value;
    if (p != from_powers(g, v.terms)) {
      ok = false;
      detail += " " + v.knot + "^" + symmetry_name(v.symmetry) + " gave " + render(p, "x");
    }
  }
  if (count == 0) {
    detail += " no golden values selected";
    return false;
  }
  return ok;
}

auto pick(std::string group, std::string basepoint = "*", std::string knot = "*")
{
  return [=](const GoldenValue &v) {
    return v.group == group && (basepoint == "*" || v.basepoint == basepoint) &&
           (knot == "*" || v.knot == knot);
  };
}

bool suite_ok(const SuiteReport &r, std::string &detail)
{
  for (const auto &c : r.checks)
    if (!c.passed)
      detail += " [" + c.name + "]";
  return r.ok() && !r.checks.empty();
}

bool trefoils(std::string &d) { return golden_match(pick("A5", "(1,2,3,4,5)"), d); }
bool psl_z(std::string &d) { return golden_match(pick("PSL2_7", ""), d); }
bool psl_order3(std::string &d) { return golden_match(pick("PSL2_7", "matrix:0,1,-1,1"), d); }
bool a7(std::string &d) { return golden_match(pick("A7"), d); }
bool m11_kc(std::string &d)
{
  return golden_match(
      [](const GoldenValue &v) {
        return v.group == "M11" && (v.knot == "kinoshita_terasaka" || v.knot == "conway");
      },
      d);
}
bool bretzel(std::string &d) { return golden_match(pick("M11", "*", "bretzel_3_5_7"), d); }

bool knot_8_17(std::string &d)
{
  bool ok = golden_match(pick("M11", "*", "8_17"), d);
  const auto g = groups.get("M11", "");
  const auto src = load_fixture("8_17").source();
  const auto p = colouring_polynomial(src.code, g).value;
  const auto pinv = colouring_polynomial(src.variant(Symmetry::Inverse), g).value;
  if (pinv != apply_inversion(p)) {
    d += " inverse gave " + render(pinv, "x");
    ok = false;
  }
  return ok;
}

bool connected_sum_check(std::string &d)
{
  const auto g = groups.get("A5", "(1,2,3,4,5)");
  const auto t = load_fixture("trefoil_left").source().code;
  const auto sum = connected_sum(t, t);
  const auto p = colouring_polynomial(sum, g).value;
  const auto one = from_powers(g, {{0, 1}, {1, 5}});
  if (sum.crossings() != 6)
    d += " sum has " + std::to_string(sum.crossings()) + " crossings";
  if (p != one * one)
    d += " got " + render(p, "x");
  return sum.crossings() == 6 && p == one * one && p == from_powers(g, {{0, 1}, {1, 10}, {2, 25}});
}

bool theorems(std::string &d) { return suite_ok(verify_theorems(), d); }

bool properties(std::string &d)
{
  SuiteReport r{"properties", {}};
  r.append(verify_axioms());
  r.append(verify_cocycles());
  r.append(verify_yb());
  return suite_ok(r, d);
}

bool structure(std::string &d)
{
  bool ok = true;
  const auto m11 = groups.get("M11", "");
  if (m11->order() != 7920) {
    d += " |M11| = " + std::to_string(m11->order());
    ok = false;
  }
  const auto &lam = m11->longitude();
  if (lam.subgroup.order() != 11 || !lam.generator || *lam.generator != m11->basepoint() ||
      m11->element_order(m11->basepoint()) != 11) {
    d += " Lambda is not <x> of order 11";
    ok = false;
  }
  for (const auto &v : golden_values()) {
    const auto g = groups.get(v.group, v.basepoint);
    const auto pc = check_prime_congruence(from_powers(g, v.terms), *g);
    if (!pc.hypothesis || !pc.holds) {
      d += " congruence fails for " + v.knot + " over " + v.group;
      ok = false;
    }
  }
  const auto aff = build_named_group("Aff5");
  if (aff->basepoint() == aff->inverse(aff->basepoint()) || find_obversion(aff)) {
    d += " Aff5 has an obversion";
    ok = false;
  }
  return ok;
}

bool lifting(std::string &d) { return suite_ok(verify_lifting(), d); }

} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<bool(std::string &)>>> criteria = {
      {"trefoils over A5", trefoils},
      {"Kinoshita-Terasaka and Conway over PSL2(7), order 7", psl_z},
      {"Kinoshita-Terasaka and Conway over PSL2(7), order 3", psl_order3},
      {"Kinoshita-Terasaka and Conway over A7", a7},
      {"Kinoshita-Terasaka and Conway over M11", m11_kc},
      {"bretzel B(3,5,7) over M11", bretzel},
      {"8_17 over M11", knot_8_17},
      {"multiplicativity under connected sum", connected_sum_check},
      {"state sum and Yang-Baxter cross-checks", theorems},
      {"property suites", properties},
      {"structural facts", structure},
      {"lifting bijections", lifting},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].second(detail);
    } catch (const std::exception &e) {
      detail += std::string(" exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %s (%.2fs)%s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                secs, detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
