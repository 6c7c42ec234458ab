#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "knotcol/diagram.hpp"

namespace knotcol {

/// A knot given either as a braid (symmetries act on the word) or as a
/// Wirtinger code (symmetries act on the code).
struct KnotSource {
  std::optional<BraidWord> braid;
  WirtingerCode code;

  static KnotSource from_braid(BraidWord b);
  static KnotSource from_code(WirtingerCode w);

  /// Long-knot code of the given symmetry variant.
  WirtingerCode variant(Symmetry op) const;
  /// Braid of the given variant; throws HypothesisError for code sources.
  BraidWord braid_variant(Symmetry op) const;
};

/// One `.knot` file: `key: value` lines for name, encoding (braid | pd |
/// wirtinger), data, provenance and calibration; `#` starts a comment line.
struct KnotFixture {
  std::string name;
  std::string encoding;
  std::string data;
  std::string provenance;
  std::vector<Symmetry> calibration;

  /// Decoded diagram with the calibration applied.
  KnotSource source() const;
};

KnotFixture parse_fixture(std::string_view text);
std::string format_fixture(const KnotFixture &f);

/// $KNOTCOL_FIXTURES if set, else the directory shipped with the sources.
std::filesystem::path fixture_directory();
/// Names of all `.knot` files in the fixture directory, sorted.
std::vector<std::string> fixture_names();
/// Throws ParseError for unknown names and corrupt files.
KnotFixture load_fixture(const std::string &name);

} // namespace knotcol
