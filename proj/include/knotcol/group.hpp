#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "knotcol/perm.hpp"

namespace knotcol {

/// Index of an element inside a PointedGroup's element list.
using Element = std::size_t;

class PointedGroup;
using GroupPtr = std::shared_ptr<const PointedGroup>;

/// A subset of a parent group that is closed under products and inverses.
struct Subgroup {
  std::vector<Element> members; ///< sorted ascending
  std::vector<bool> mask;       ///< indexed by parent element

  std::size_t order() const { return members.size(); }
  bool contains(Element g) const { return g < mask.size() && mask[g]; }
  bool operator==(const Subgroup &o) const { return members == o.members; }
};

/// Lambda = C(x) ∩ G', the subgroup that houses every longitude image.
struct LongitudeGroup {
  Subgroup subgroup;
  bool is_abelian = false;
  /// Chosen generator when the subgroup is cyclic: the basepoint itself if it
  /// generates, otherwise the smallest-index element of maximal order.
  std::optional<Element> generator;
  std::size_t generator_order = 0;
};

/// A finite permutation group with a distinguished basepoint x.
///
/// Elements are stored sorted lexicographically by image array, so index 0 is
/// always the identity and "smallest element" has a reproducible meaning.
/// Derived data (class of x, C(x), G', Lambda) is computed at construction; the
/// object is immutable afterwards and safe to share between threads.
class PointedGroup {
public:
  /// Groups up to this order carry a dense multiplication table.
  static constexpr std::size_t kDenseTableLimit = 1024;

  /// Closes `generators` under multiplication. The basepoint must lie in the
  /// generated group (HypothesisError otherwise).
  static GroupPtr from_generators(std::string name, const std::vector<Perm> &generators,
                                  const Perm &basepoint, std::size_t degree = 0);

  /// Same group, different basepoint (caches are recomputed).
  GroupPtr with_basepoint(Element x) const;

  const std::string &name() const { return name_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }

  const Perm &element(Element g) const { return elements_.at(g); }
  const std::vector<Perm> &elements() const { return elements_; }
  std::optional<Element> find(const Perm &p) const;
  Element index_of(const Perm &p) const;

  Element identity() const { return 0; }
  Element basepoint() const { return basepoint_; }
  const std::vector<Element> &generators() const { return generators_; }

  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const { return inverses_[a]; }
  /// b^-1 a b
  Element conjugate(Element a, Element b) const;
  Element power(Element a, long long k) const;
  std::size_t element_order(Element a) const { return orders_[a]; }
  bool has_dense_table() const { return !table_.empty(); }

  /// x^G, sorted ascending.
  const std::vector<Element> &basepoint_class() const { return basepoint_class_; }
  const Subgroup &basepoint_centralizer() const { return centralizer_; }
  const Subgroup &commutator() const { return commutator_; }
  const LongitudeGroup &longitude() const { return longitude_; }
  /// <x^G> = G
  bool is_colouring_group() const { return colouring_group_; }

  /// 1-based cycle notation of an element.
  std::string format(Element g) const { return element(g).to_cycles(); }

private:
  PointedGroup() = default;
  void build_index();
  void populate_caches();

  std::string name_;
  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, Element, PermHash> index_;
  std::vector<Element> generators_;
  std::vector<Element> inverses_;
  std::vector<std::size_t> orders_;
  std::vector<std::uint32_t> table_;
  Element basepoint_ = 0;

  std::vector<Element> basepoint_class_;
  Subgroup centralizer_;
  Subgroup commutator_;
  LongitudeGroup longitude_;
  bool colouring_group_ = false;
};

/// Element map between groups, e.g. an obversion or a reversion.
struct GroupMap {
  enum class Kind { Homomorphism, AntiHomomorphism };

  GroupPtr source;
  GroupPtr target;
  std::vector<Element> image;
  Kind kind = Kind::Homomorphism;

  Element operator()(Element g) const { return image.at(g); }
  /// Checks the (anti-)homomorphism law on all (element, generator) pairs,
  /// which implies it for all pairs.
  bool respects_products() const;
  bool is_bijective() const;
};

struct Obversion {
  GroupMap obversion; ///< automorphism with x -> x^-1
  GroupMap reversion; ///< anti-automorphism with x -> x
};

// --- construction --------------------------------------------------------

/// Parses a descriptor (`A5`, `S7`, `D6`, `C2`, `PSL2_7`, `M11`, `Aff5`,
/// `gens:(1,2,3);(1,2)`) and a basepoint descriptor (cycle notation such as
/// `(1,2,3,4,5)`, `order:7`, `matrix:0,1,-1,1` for PSL2 groups, or empty for
/// the family default).
GroupPtr build_named_group(std::string_view descriptor, std::string_view basepoint = {});

/// The matrix [[a,b],[c,d]] acting on row vectors of the projective line over
/// F_p, i.e. t -> (a t + c) / (b t + d). Points 0..p-1 are field elements and p
/// is infinity. Row vectors make this a homomorphism for the right action.
Perm psl2_element(int p, long a, long b, long c, long d);

// --- subgroup machinery --------------------------------------------------

std::vector<Element> conjugacy_class(const PointedGroup &g, Element x);
Subgroup centralizer(const PointedGroup &g, Element x);
Subgroup generated_subgroup(const PointedGroup &g, const std::vector<Element> &gens);
Subgroup commutator_subgroup(const PointedGroup &g);
std::size_t element_order(const PointedGroup &g, Element x);
const LongitudeGroup &longitude_subgroup(const PointedGroup &g);

/// Stable member of the chain G_{i+1} = <x^{G_i}>; always a colouring group.
GroupPtr colouring_core(const GroupPtr &g);

/// Restriction of `g` to a subgroup containing the basepoint, as a group of its own.
GroupPtr subgroup_as_group(const PointedGroup &g, const Subgroup &h, std::string name);

/// Searches for an automorphism with x -> x^-1. Tries conjugations in the
/// full symmetric group first, then brute force over generator images when
/// |G| <= search_bound. Throws LimitExceeded if neither applies.
std::optional<Obversion> find_obversion(const GroupPtr &g, std::size_t search_bound = 2000);

} // namespace knotcol
