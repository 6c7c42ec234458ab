#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knotcol {

enum class Symmetry { Identity, Inverse, Reverse, Obverse };

Symmetry parse_symmetry(std::string_view name);
std::string symmetry_name(Symmetry s);

// --- braids --------------------------------------------------------------

struct BraidLetter {
  int index = 1; ///< sigma_index, 1-based
  int sign = 1;  ///< +1 or -1

  bool operator==(const BraidLetter &) const = default;
};

/// Letters act right to left: the rightmost letter is applied first.
struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  bool operator==(const BraidWord &) const = default;
};

/// Accepts `s1 s2^-1 s1^3`, the compact letter form `aAbB` (a = s1, A = s1^-1),
/// and integer lists `[1,1,-2]`. The strand count is the largest index plus
/// one, or `strands` if that is larger.
BraidWord parse_braid_word(std::string_view text, int strands = 0);
std::string format_braid_word(const BraidWord &b);

/// Image of each position under the underlying permutation of the word.
std::vector<int> closure_permutation(const BraidWord &b);
bool closes_to_knot(const BraidWord &b);

BraidWord braid_symmetry(const BraidWord &b, Symmetry op);

/// Appends sigma_n^sign on a new strand.
BraidWord stabilize(const BraidWord &b, int sign);

// --- Wirtinger codes -----------------------------------------------------

/// Long-knot Wirtinger code. Arcs are numbered 0..n along the knot. At
/// crossing i (1-based) arc i-1 ends by undercrossing arc kappa(i), and the
/// colours obey x_i = x_kappa^-eps x_{i-1} x_kappa^eps.
struct WirtingerCode {
  std::vector<std::size_t> kappa;   ///< kappa[i-1] for crossing i
  std::vector<int> epsilon;         ///< epsilon[i-1] for crossing i

  std::size_t crossings() const { return kappa.size(); }
  std::size_t arcs() const { return kappa.size() + 1; }
  bool operator==(const WirtingerCode &) const = default;
};

/// Checks ranges of kappa and epsilon; throws ParseError on violation.
void validate(const WirtingerCode &w);

/// Space separated tokens `<kappa><sign>`, e.g. `2+ 0+ 1+`.
WirtingerCode parse_wirtinger(std::string_view text);
std::string format_wirtinger(const WirtingerCode &w);

/// Closes strands 2..n and cuts strand 1 open. Throws ParseError for
/// multi-component closures.
WirtingerCode braid_to_long_wirtinger(const BraidWord &b);

/// obv flips all signs, rev walks the knot backwards, inv does both.
WirtingerCode wirtinger_symmetry(const WirtingerCode &w, Symmetry op);

WirtingerCode connected_sum(const WirtingerCode &a, const WirtingerCode &b);

// --- PD codes ------------------------------------------------------------

/// X[i,j,k,l]: i is the incoming under-strand, the other labels follow
/// counterclockwise, so the under-strand runs i -> k. The crossing is
/// positive when the over-strand runs l -> j.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
};

/// Accepts `X[1,5,2,4] X[3,1,4,6] ...`, `PD[X[...], ...]` and `[[1,5,2,4],...]`.
PDCode parse_pd_code(std::string_view text);
std::string format_pd_code(const PDCode &pd);

/// Cuts the knot open in the middle of edge `cut_edge` (default: the smallest
/// label); the part after the cut becomes arc 0. The orientation is the one
/// given by the under-strands. Throws ParseError on inconsistent codes or
/// multiple components.
WirtingerCode pd_to_long_wirtinger(const PDCode &pd, std::optional<int> cut_edge = {});

/// All edge labels of the code, ascending.
std::vector<int> pd_edge_labels(const PDCode &pd);

/// Pretzel knot with three twist columns of p1, p2, p3 half twists.
PDCode bretzel_pd(int p1, int p2, int p3);
WirtingerCode bretzel_diagram(int p1, int p2, int p3);

} // namespace knotcol
