#pragma once

#include <cstdint>
#include <vector>

#include "knotcol/colouring.hpp"
#include "knotcol/quandle.hpp"

namespace knotcol {

/// Product over crossings of lambda(a,b)^eps, where a is the colour with
/// a*b = c at the crossing: lambda(colour(i-1), colour(kappa)) for a positive
/// crossing and lambda(colour(i), colour(kappa))^-1 for a negative one.
Element colouring_weight(const WirtingerCode &w, const Cocycle2 &l, const QuandleColouring &f);

/// Sum of the weights of all closed colourings, as an element of Z[Lambda]
/// carried by l.group. Connected quandles use |Q| times the sum at one
/// basepoint; otherwise every basepoint is enumerated.
RingElement state_sum(const WirtingerCode &w, const FiniteQuandle &q, const Cocycle2 &l,
                      const SearchOptions &opt = {});
/// Weighted sum over closed colourings with arc 0 coloured a.
RingElement based_state_sum(const WirtingerCode &w, const FiniteQuandle &q, const Cocycle2 &l,
                            FiniteQuandle::Index a, const SearchOptions &opt = {});

/// The unique quandle colouring over `colouring` with arc 0 coloured q:
/// arc i gets q^(l_i) for the partial longitudes l_i. Throws HypothesisError
/// if the augmentation does not verify or the groups differ.
QuandleColouring lift_colouring(const WirtingerCode &w, const Colouring &colouring,
                                const Augmentation &aug, FiniteQuandle::Index q);

/// Colourings whose longitude fixes q.
std::vector<Colouring> closed_lifting_filter(const std::vector<Colouring> &colourings,
                                             const Augmentation &aug, FiniteQuandle::Index q);

struct Crosscheck {
  RingElement state_sum;
  RingElement expected; ///< P * |Q|
  bool equal = false;
};

/// state_sum(D; x^G, lambda from the covering section) = P_x^G(D) * |Q|.
/// Throws HypothesisError when Lambda is not abelian.
Crosscheck crosscheck_cp_equals_ss(const GroupPtr &g, const WirtingerCode &w,
                                   const SearchOptions &opt = {});

/// Central extension Q x Lambda of a cocycle, (a,l)*(b,m) = (a*b, l lambda(a,b)),
/// with point (a,l) numbered a * |Lambda| + position of l in `lambda_members`.
FiniteQuandle central_extension(const FiniteQuandle &q, const Cocycle2 &l,
                                const std::vector<Element> &lambda_members);

struct Specialization {
  GroupPtr inner;        ///< Inn of the extension, basepoint the translation by (q,1)
  RingElement polynomial; ///< P over `inner`
  RingElement specialized; ///< phi(P) * |Q| in Z[Lambda]
  RingElement state_sum;   ///< computed directly
  bool equal = false;
};

/// Rebuilds a colouring polynomial from (Q, lambda) and compares its
/// specialization with the state sum. Q must be connected with a basepoint.
Specialization specialize_ss_to_cp(const FiniteQuandle &q, const Cocycle2 &l,
                                   const std::vector<Element> &lambda_members,
                                   const WirtingerCode &w, const SearchOptions &opt = {});

} // namespace knotcol
