#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "knotcol/diagram.hpp"
#include "knotcol/group.hpp"
#include "knotcol/group_ring.hpp"
#include "knotcol/quandle.hpp"

namespace knotcol {

struct SearchOptions {
  std::uint64_t node_cap = 10'000'000'000ULL; ///< propagation steps before LimitExceeded
  int workers = 1;                             ///< 1 = serial reference, 0 = all threads
};

// --- quandle colouring engine --------------------------------------------

/// Arc colours 0..n, as quandle indices.
using QuandleColouring = std::vector<FiniteQuandle::Index>;

/// Colourings of a long-knot code with crossing rule colour(i) =
/// colour(i-1) * colour(kappa)  (sign +1) or colour(i-1) / colour(kappa)
/// (sign -1). Arc 0 gets `arc0`; with `closed` only colourings with
/// colour(n) = colour(0) are kept. Results come in lexicographic order.
std::vector<QuandleColouring> enumerate_quandle_colourings_serial(const WirtingerCode &w,
                                                                  const FiniteQuandle &q,
                                                                  FiniteQuandle::Index arc0,
                                                                  bool closed,
                                                                  const SearchOptions &opt = {});
/// OpenMP version, split over the first branching choice. Returns the same
/// list in the same order as the serial version.
std::vector<QuandleColouring> enumerate_quandle_colourings_parallel(const WirtingerCode &w,
                                                                    const FiniteQuandle &q,
                                                                    FiniteQuandle::Index arc0,
                                                                    bool closed,
                                                                    const SearchOptions &opt = {});
/// Dispatches on opt.workers.
std::vector<QuandleColouring> enumerate_quandle_colourings(const WirtingerCode &w,
                                                           const FiniteQuandle &q,
                                                           FiniteQuandle::Index arc0, bool closed,
                                                           const SearchOptions &opt = {});

/// True iff every crossing relation holds.
bool is_quandle_colouring(const WirtingerCode &w, const FiniteQuandle &q, const QuandleColouring &c);

/// Number of closed quandle colourings with arc 0 coloured q, or summed over
/// all q when `basepoint` is empty.
std::uint64_t quandle_colourings(const WirtingerCode &w, const FiniteQuandle &q,
                                 std::optional<FiniteQuandle::Index> basepoint,
                                 const SearchOptions &opt = {});

// --- group colourings ----------------------------------------------------

struct Colouring {
  std::vector<Element> arcs; ///< arc colours 0..n
  Element longitude = 0;
};

/// Longitude prod_i colour(i-1)^-eps colour(kappa)^eps and its prefixes
/// l_0 = 1, l_1, ..., l_n = longitude.
std::vector<Element> partial_longitudes(const WirtingerCode &w, const PointedGroup &g,
                                        const std::vector<Element> &arcs);

/// All colourings sending arc 0 (and arc n) to x, searched inside the class
/// of x. Deterministic order.
std::vector<Colouring> enumerate_colourings(const WirtingerCode &w, const GroupPtr &g,
                                            const SearchOptions &opt = {});
/// Same with an explicit meridian colour x.
std::vector<Colouring> enumerate_colourings(const WirtingerCode &w, const GroupPtr &g, Element x,
                                            const SearchOptions &opt = {});

bool is_group_colouring(const WirtingerCode &w, const PointedGroup &g, const Colouring &c);

struct ColouringPolynomial {
  RingElement value;
  bool in_longitude_group = true; ///< support inside Lambda = C(x) & G'
};

ColouringPolynomial colouring_polynomial(const WirtingerCode &w, const GroupPtr &g,
                                         const SearchOptions &opt = {});

/// F = number of colourings with meridian x.
std::uint64_t colouring_number(const WirtingerCode &w, const GroupPtr &g,
                               const SearchOptions &opt = {});
/// T = number of all colourings, summed class by class.
std::uint64_t total_colouring_number(const WirtingerCode &w, const GroupPtr &g,
                                     const SearchOptions &opt = {});

struct PrimeCongruence {
  bool hypothesis = false; ///< conjugation by x has prime power order p^k
  std::uint64_t prime = 0;
  std::uint64_t inner_order = 0;
  bool holds = false;      ///< identity coefficient = 1 and all others = 0 mod p
};

/// Checks P = 1 mod p when conjugation by x has order p^k. When the order is
/// not a prime power, `hypothesis` is false and `holds` is not meaningful.
PrimeCongruence check_prime_congruence(const RingElement &poly, const PointedGroup &g);

} // namespace knotcol
