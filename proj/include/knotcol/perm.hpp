#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace knotcol {

/// A permutation of {0, ..., degree-1}, stored as its image array.
///
/// Products follow the right-action convention: `a * b` applies `a` first,
/// then `b`, so `(a * b)[i] == b[a[i]]`. Conjugation is `a ^ b = b^-1 a b`.
class Perm {
public:
  using Point = std::uint16_t;

  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }

  /// Parses 1-based cycle notation such as "(1,2,3)(4,5)" or "()".
  /// Points may also be written as lower-case letters a, b, c, ... (a = 1).
  static Perm from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  std::size_t order() const;

  friend Perm operator*(const Perm &a, const Perm &b);
  /// b^-1 a b
  friend Perm operator^(const Perm &a, const Perm &b);

  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &, const Perm &) = default;

  /// 1-based cycle notation; "()" for the identity.
  std::string to_cycles() const;

private:
  std::vector<Point> images_;
};

struct PermHash {
  std::size_t operator()(const Perm &p) const noexcept;
};

} // namespace knotcol
