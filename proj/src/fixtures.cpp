#include "knotcol/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "knotcol/errors.hpp"

namespace knotcol {

namespace {

std::string trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Symmetry> parse_calibration(const std::string &text)
{
  std::vector<Symmetry> r;
  std::string item;
  std::istringstream in(text);
  while (in >> item) {
    if (item.back() == ',')
      item.pop_back();
    const Symmetry s = parse_symmetry(item);
    if (s != Symmetry::Identity)
      r.push_back(s);
  }
  return r;
}

} // namespace

KnotSource KnotSource::from_braid(BraidWord b)
{
  KnotSource s;
  s.code = braid_to_long_wirtinger(b);
  s.braid = std::move(b);
  return s;
}

KnotSource KnotSource::from_code(WirtingerCode w)
{
  validate(w);
  KnotSource s;
  s.code = std::move(w);
  return s;
}

WirtingerCode KnotSource::variant(Symmetry op) const
{
  if (braid)
    return braid_to_long_wirtinger(braid_symmetry(*braid, op));
  return wirtinger_symmetry(code, op);
}

BraidWord KnotSource::braid_variant(Symmetry op) const
{
  if (!braid)
    throw HypothesisError("this knot was not given as a braid");
  return braid_symmetry(*braid, op);
}

KnotSource KnotFixture::source() const
{
  KnotSource s;
  if (encoding == "braid")
    s = KnotSource::from_braid(parse_braid_word(data));
  else if (encoding == "pd")
    s = KnotSource::from_code(pd_to_long_wirtinger(parse_pd_code(data)));
  else if (encoding == "wirtinger")
    s = KnotSource::from_code(parse_wirtinger(data));
  else
    throw ParseError("unknown fixture encoding '" + encoding + "'");
  for (Symmetry c : calibration) {
    if (s.braid)
      s = KnotSource::from_braid(braid_symmetry(*s.braid, c));
    else
      s.code = wirtinger_symmetry(s.code, c);
  }
  return s;
}

KnotFixture parse_fixture(std::string_view text)
{
  std::map<std::string, std::string> fields;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#')
      continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos)
      throw ParseError("fixture line " + std::to_string(number) + ": expected 'key: value'");
    const std::string key = trim(std::string_view(t).substr(0, colon));
    if (!fields.emplace(key, trim(std::string_view(t).substr(colon + 1))).second)
      throw ParseError("fixture line " + std::to_string(number) + ": duplicate key '" + key + "'");
  }
  for (const char *key : {"name", "encoding", "data"})
    if (!fields.count(key))
      throw ParseError(std::string("fixture is missing '") + key + "'");
  KnotFixture f;
  f.name = fields["name"];
  f.encoding = fields["encoding"];
  f.data = fields["data"];
  f.provenance = fields["provenance"];
  f.calibration = parse_calibration(fields["calibration"]);
  return f;
}

std::string format_fixture(const KnotFixture &f)
{
  std::string cal;
  for (Symmetry s : f.calibration)
    cal += (cal.empty() ? "" : " ") + symmetry_name(s);
  std::ostringstream out;
  out << "name: " << f.name << "\nencoding: " << f.encoding << "\ndata: " << f.data
      << "\nprovenance: " << f.provenance << "\ncalibration: " << (cal.empty() ? "identity" : cal)
      << "\n";
  return out.str();
}

std::filesystem::path fixture_directory()
{
  if (const char *env = std::getenv("KNOTCOL_FIXTURES"); env && *env)
    return env;
  return KNOTCOL_FIXTURE_DIR;
}

std::vector<std::string> fixture_names()
{
  std::vector<std::string> names;
  const auto dir = fixture_directory();
  if (!std::filesystem::is_directory(dir))
    throw std::runtime_error("fixture directory " + dir.string() + " does not exist");
  for (const auto &entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".knot")
      names.push_back(entry.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

KnotFixture load_fixture(const std::string &name)
{
  const auto path = fixture_directory() / (name + ".knot");
  std::ifstream in(path);
  if (!in)
    throw ParseError("unknown fixture '" + name + "' (no file " + path.string() + ")");
  std::ostringstream text;
  text << in.rdbuf();
  KnotFixture f = parse_fixture(text.str());
  if (f.name != name)
    throw ParseError("fixture file " + path.string() + " declares name '" + f.name + "'");
  return f;
}

} // namespace knotcol
