#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotcol/group.hpp"

namespace knotcol {

/// A finite quandle stored as dense tables: op(a,b) = a*b and inv(a,b) = a/b
/// with (a*b)/b = a.
class FiniteQuandle {
public:
  using Index = std::uint32_t;

  FiniteQuandle() = default;
  /// Builds from the a*b table (row-major, row a); the inverse table is
  /// derived. Throws HypothesisError if some right translation is not bijective.
  FiniteQuandle(std::size_t size, std::vector<Index> op, std::optional<Index> basepoint = {});

  std::size_t size() const { return size_; }
  Index op(Index a, Index b) const { return op_[a * size_ + b]; }
  Index inv(Index a, Index b) const { return inv_[a * size_ + b]; }
  /// a*b for sign +1, a/b for sign -1
  Index act(Index a, Index b, int sign) const { return sign > 0 ? op(a, b) : inv(a, b); }
  std::optional<Index> basepoint() const { return basepoint_; }
  void set_basepoint(std::optional<Index> q) { basepoint_ = q; }

  const std::vector<Index> &op_table() const { return op_; }

private:
  std::size_t size_ = 0;
  std::vector<Index> op_;
  std::vector<Index> inv_;
  std::optional<Index> basepoint_;
};

struct AxiomReport {
  bool ok = true;
  std::string violation; ///< first violation found, empty if ok
};

/// Exhaustive check of a*a = a, (a*b)/b = (a/b)*b = a, and
/// (a*b)*c = (a*c)*(b*c).
AxiomReport verify_quandle_axioms(const FiniteQuandle &q);

/// The class x^G with a*b = b^-1 a b. Index i stands for group element
/// elements[i]; the basepoint x has the index of x.
struct ConjugationQuandle {
  GroupPtr group;
  FiniteQuandle quandle;
  std::vector<Element> elements;   ///< class index -> group element (ascending)
  std::vector<std::int64_t> index; ///< group element -> class index or -1

  FiniteQuandle::Index index_of(Element g) const;
};

/// Conjugation quandle on the class of the basepoint. Throws HypothesisError
/// if (G, x) is not a colouring group.
ConjugationQuandle conjugation_quandle(const GroupPtr &g);
/// Same on the class of any element, without the colouring-group check.
ConjugationQuandle class_quandle(const GroupPtr &g, Element x);

/// Inn(Q) generated by the right translations b -> (a -> a*b), acting on
/// points 0..|Q|-1. The basepoint is the translation by the quandle basepoint
/// (or the identity when Q has none).
GroupPtr inner_group(const FiniteQuandle &q);
bool is_connected(const FiniteQuandle &q);

/// Disjoint union of trivial quandles a*b = a.
FiniteQuandle trivial_quandle(std::size_t size);

// --- covering quandle ----------------------------------------------------

/// Q~(G,x) = {(a,g) in G x G' : a = x^g}. Since a is determined by g, the
/// element (a,g) is stored as the index of g in G'. Operations:
///   (a,g)*(b,h) = (a*b, g a^-1 b),   (a,g)/(b,h) = (a/b, g a b^-1),
/// deck action l.(a,g) = (a, l g) for l in Lambda = C(x) & G'.
class CoveringQuandle {
public:
  using Index = std::uint32_t;

  explicit CoveringQuandle(const GroupPtr &g);

  const GroupPtr &group() const { return group_; }
  const ConjugationQuandle &base() const { return base_; }
  std::size_t size() const { return members_.size(); }

  Element g_part(Index e) const { return members_[e]; }
  /// Class index of the projection p(a,g) = a.
  FiniteQuandle::Index projection(Index e) const { return proj_[e]; }
  /// Element with second coordinate g (must lie in G').
  Index from_g(Element g) const;

  Index op(Index e, Index f) const;
  Index inv(Index e, Index f) const;
  Index act(Index e, Index f, int sign) const { return sign > 0 ? op(e, f) : inv(e, f); }
  Index deck(Element lambda, Index e) const;

  /// s(a): the element over a with smallest G-index g; s(x) = (x,1).
  Index section(FiniteQuandle::Index a) const { return section_[a]; }
  /// Lambda element l with e = l.s(p(e)).
  Element fibre_coordinate(Index e) const;

  /// Dense tables of the whole covering; refuses sizes above `limit`.
  FiniteQuandle materialize(std::size_t limit = 4096) const;

private:
  GroupPtr group_;
  ConjugationQuandle base_;
  std::vector<Element> members_;          ///< G' members, ascending
  std::vector<std::int64_t> member_index_; ///< G element -> covering index or -1
  std::vector<FiniteQuandle::Index> proj_;
  std::vector<Index> section_;
};

struct CoveringReport {
  bool ok = true;
  std::string violation;
};

/// Exhaustive: p is a quandle homomorphism, l.(e*f) = (l.e)*f, e*(l.f) = e*f,
/// Lambda acts freely and transitively on every fibre, G' acts transitively.
CoveringReport verify_covering(const CoveringQuandle &c);

// --- 2-cocycles ----------------------------------------------------------

/// Table lambda: Q x Q -> Lambda, with values group elements of `group`.
struct Cocycle2 {
  GroupPtr group;
  std::size_t size = 0;
  std::vector<Element> values; ///< row-major

  Element operator()(FiniteQuandle::Index a, FiniteQuandle::Index b) const
  {
    return values[a * size + b];
  }
  bool operator==(const Cocycle2 &o) const { return size == o.size && values == o.values; }
};

/// lambda(a,b) from s(a)*s(b) = lambda(a,b).s(a*b). Throws HypothesisError
/// when Lambda is not abelian.
Cocycle2 cocycle_from_section(const CoveringQuandle &c);
/// Same for an arbitrary section given as covering indices per class index.
Cocycle2 cocycle_from_section(const CoveringQuandle &c, const std::vector<CoveringQuandle::Index> &s);

/// Normalization lambda(a,a) = 1 and the cocycle condition
/// lambda(a,b) lambda(a*b,c) = lambda(a,c) lambda(a*c,b*c), exhaustively.
AxiomReport verify_cocycle(const FiniteQuandle &q, const Cocycle2 &l);

/// delta mu (a,b) = mu(a) mu(a*b)^-1
Cocycle2 coboundary(const FiniteQuandle &q, const GroupPtr &group, const std::vector<Element> &mu);
/// Pointwise product of two cocycles (Lambda is abelian).
Cocycle2 cocycle_product(const Cocycle2 &a, const Cocycle2 &b);
/// delta^2 lambda(a,b,c) = lambda(a,c) lambda(a,b)^-1 lambda(a*c,b*c) lambda(a*b,c)^-1
/// evaluated at every triple; true iff all are trivial.
bool is_cocycle(const FiniteQuandle &q, const Cocycle2 &l);

/// A 1-cochain mu with l2 = l1 * delta mu, if one exists. The search fixes mu
/// on one point per orbit and propagates, so it always decides.
std::optional<std::vector<Element>> cohomology_witness(const FiniteQuandle &q, const Cocycle2 &l1,
                                                       const Cocycle2 &l2,
                                                       const std::vector<Element> &lambda_members);
bool is_cohomologous(const FiniteQuandle &q, const Cocycle2 &l1, const Cocycle2 &l2,
                     const std::vector<Element> &lambda_members);

// --- augmentations -------------------------------------------------------

/// A quandle representation phi: Q -> G with an action of G on Q such that
/// a*b = a^phi(b) and phi(a^g) = phi(a)^g.
struct Augmentation {
  FiniteQuandle quandle;
  GroupPtr group;
  std::vector<Element> phi;
  std::vector<FiniteQuandle::Index> action; ///< action[a * |G| + g] = a^g

  FiniteQuandle::Index act(FiniteQuandle::Index a, Element g) const
  {
    return action[a * group->order() + g];
  }
};

/// phi(b) = right translation by b, G = Inn(Q) acting on its points.
Augmentation inner_augmentation(const FiniteQuandle &q);
AxiomReport verify_augmentation(const Augmentation &aug);

// --- text tables ---------------------------------------------------------

/// Rows a, columns b, entries a*b as indices.
std::string quandle_to_csv(const FiniteQuandle &q);
FiniteQuandle quandle_from_csv(std::string_view text);
/// Entries are Lambda elements in quoted cycle notation.
std::string cocycle_to_csv(const Cocycle2 &l);
Cocycle2 cocycle_from_csv(std::string_view text, const GroupPtr &group);

} // namespace knotcol
