#include "knotcol/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "knotcol/errors.hpp"

namespace knotcol {

Perm::Perm(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw std::invalid_argument("image array is not a bijection");
    seen[p] = true;
  }
}

Perm Perm::from_cycles(std::string_view text, std::size_t degree)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](const std::string &msg) {
    throw ParseError("cycle notation '" + std::string(text) + "' at position " +
                     std::to_string(pos) + ": " + msg);
  };

  skip_space();
  if (pos == text.size())
    fail("empty input");

  while (true) {
    skip_space();
    if (pos == text.size())
      break;
    if (text[pos] != '(')
      fail("expected '('");
    ++pos;
    std::vector<std::size_t> cycle;
    while (true) {
      skip_space();
      if (pos == text.size())
        fail("unterminated cycle");
      char c = text[pos];
      if (c == ')') {
        ++pos;
        break;
      }
      if (c == ',') {
        ++pos;
        continue;
      }
      std::size_t point = 0;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
          point = point * 10 + static_cast<std::size_t>(text[pos++] - '0');
      } else if (c >= 'a' && c <= 'z') {
        point = static_cast<std::size_t>(c - 'a') + 1;
        ++pos;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      if (point == 0 || point > degree)
        fail("point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      if (used[point - 1])
        fail("point " + std::to_string(point) + " repeated");
      used[point - 1] = true;
      cycle.push_back(point - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Perm Perm::inverse() const
{
  Perm r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::size_t Perm::order() const
{
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Perm operator*(const Perm &a, const Perm &b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  Perm r(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i)
    r.images_[i] = b.images_[a.images_[i]];
  return r;
}

Perm operator^(const Perm &a, const Perm &b)
{
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch in conjugation");
  // b^-1 a b maps b[i] to b[a[i]]
  Perm r(a.degree());
  for (std::size_t i = 0; i < a.degree(); ++i)
    r.images_[b.images_[i]] = b.images_[a.images_[i]];
  return r;
}

std::string Perm::to_cycles() const
{
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i)
      continue;
    any = true;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i)
        out << ',';
      out << j + 1;
    }
    out << ')';
  }
  if (!any)
    return "()";
  return out.str();
}

std::size_t PermHash::operator()(const Perm &p) const noexcept
{
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 0x100000001b3ull;
  }
  return h;
}

} // namespace knotcol
