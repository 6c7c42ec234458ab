#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "knotcol/colouring.hpp"
#include "knotcol/diagram.hpp"
#include "knotcol/group_ring.hpp"
#include "knotcol/quandle.hpp"

namespace knotcol {

/// c(a (x) b) = lambda(a,b) b (x) (a*b) on the basis Q, with labels in Lambda.
/// The plain operator has all labels trivial. The inverse is
/// c^-1(a (x) b) = lambda(b/a, a)^-1 (b/a) (x) a.
struct YBOperator {
  FiniteQuandle quandle;
  GroupPtr group;              ///< carrier of the labels
  std::vector<Element> labels; ///< lambda(a,b), row-major
  bool deformed = false;

  Element label(FiniteQuandle::Index a, FiniteQuandle::Index b) const
  {
    return labels[a * quandle.size() + b];
  }
};

/// Plain c on the class x^G, or the deformed operator on the section basis
/// s(Q) of the covering quandle with labels from its cocycle. Verifies the
/// Yang-Baxter equation and the trace condition; throws HypothesisError on
/// failure or, for the deformed variant, when Lambda is not abelian.
YBOperator build_yb_operator(const GroupPtr &g, bool deformed);
/// Operator with the given quandle and cocycle (unchecked).
YBOperator yb_operator(const FiniteQuandle &q, const Cocycle2 &l);

struct LabelledTuple {
  std::vector<FiniteQuandle::Index> tuple;
  Element label = 0;
};

/// Image of a basis tuple under the braid, letters applied right to left.
LabelledTuple evaluate_braid(const BraidWord &b, const YBOperator &op,
                             const std::vector<FiniteQuandle::Index> &tuple);

/// Exhaustive checks on B^3 and B^4.
bool check_yang_baxter(const YBOperator &op);
bool check_far_commutation(const YBOperator &op);
/// tr_2(c) = id and tr_2(c^-1) = id, computed as matrix partial traces.
bool check_trace_condition(const YBOperator &op);

/// Sum of the labels of the basis tuples fixed by the braid.
RingElement closed_trace_serial(const BraidWord &b, const YBOperator &op,
                                const SearchOptions &opt = {});
RingElement closed_trace_parallel(const BraidWord &b, const YBOperator &op,
                                  const SearchOptions &opt = {});
RingElement closed_trace(const BraidWord &b, const YBOperator &op, const SearchOptions &opt = {});

/// Partial trace over factors 2..n of the plain operator on the covering
/// quandle Q~(G,x). Every start p = (a,g) must map to sum_l c_l (a, l g) with
/// the same coefficients; returns sum_l c_l l. Throws std::logic_error if the
/// result is not such a uniform scalar.
RingElement long_partial_trace(const BraidWord &b, const GroupPtr &g, const SearchOptions &opt = {});

struct MarkovReport {
  RingElement reference;
  int checks = 0;
  int failures = 0;
  std::vector<std::string> details;
  bool ok() const { return failures == 0; }
};

/// Recomputes the closed trace after `trials` random conjugations by
/// sigma_j^(+-1) and after both stabilizations.
MarkovReport markov_spot_check(const BraidWord &b, const YBOperator &op, int trials,
                               std::uint64_t seed = 1);

} // namespace knotcol
