#include "cyh/polytope_file.hpp"

#include <charconv>
#include <numeric>
#include <optional>
#include <vector>

#include "cyh/errors.hpp"

namespace cyh {

namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool looks_fractional(std::string_view s) {
  return s.find('.') != std::string_view::npos || s.find('/') != std::string_view::npos ||
         s.find('e') != std::string_view::npos || s.find('E') != std::string_view::npos;
}

}  // namespace

HalfSpaceSpec parse_polytope_file(std::string_view text, const ParseOptions& options) {
  std::optional<int> dim;
  std::string name;
  std::vector<Facet> facets;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (eol == text.size()) break;
      continue;
    }

    const auto& keyword = tokens[0];
    if (keyword.text == "name") {
      if (!name.empty())
        throw ParseError("duplicate name line", line_no, keyword.column);
      if (tokens.size() < 2) throw ParseError("name needs a value", line_no, keyword.column);
      const auto start = static_cast<std::size_t>(tokens[1].column - 1);
      const auto& last = tokens.back();
      name = std::string(line.substr(start, static_cast<std::size_t>(last.column - 1) +
                                                last.text.size() - start));
    } else if (keyword.text == "dim") {
      if (dim) throw ParseError("duplicate dim line", line_no, keyword.column);
      if (tokens.size() != 2)
        throw ParseError("dim takes exactly one value", line_no, keyword.column);
      auto v = to_int(tokens[1].text);
      if (!v || *v < 1 || *v > 32)
        throw ParseError("dim must be an integer in 1..32", line_no, tokens[1].column);
      dim = static_cast<int>(*v);
    } else if (keyword.text == "facet") {
      if (!dim) throw ParseError("facet before dim", line_no, keyword.column);
      const auto fields = tokens.size() - 1;
      const auto need = static_cast<std::size_t>(*dim) + 1;
      if (fields != need)
        throw DimMismatchError(std::to_string(need) + " fields required for dim " +
                                   std::to_string(*dim) + ", got " + std::to_string(fields),
                               line_no, keyword.column);
      Facet f;
      for (std::size_t i = 1; i <= static_cast<std::size_t>(*dim); ++i) {
        auto v = to_int(tokens[i].text);
        if (!v)
          throw ParseError("normal entry '" + std::string(tokens[i].text) +
                               "' is not an integer",
                           line_no, tokens[i].column);
        f.normal.push_back(*v);
      }
      const auto& off = tokens.back();
      auto offset = to_int(off.text);
      if (!offset) {
        if (looks_fractional(off.text))
          throw NonIntegerOffsetError("offset '" + std::string(off.text) +
                                          "' is not an integer",
                                      line_no, off.column);
        throw ParseError("offset '" + std::string(off.text) + "' is not an integer",
                         line_no, off.column);
      }
      f.offset = *offset;

      std::int64_t g = 0;
      for (auto v : f.normal) g = std::gcd(g, v);
      if (g == 0) throw ParseError("zero normal", line_no, tokens[1].column);
      if (g != 1) {
        if (!options.normalize)
          throw NonPrimitiveNormalError(
              "normal is not primitive (gcd " + std::to_string(g) + ")", line_no,
              tokens[1].column);
        if (f.offset % g != 0)
          throw NonIntegerOffsetError("offset " + std::to_string(f.offset) +
                                          " not divisible by normal gcd " +
                                          std::to_string(g),
                                      line_no, off.column);
        for (auto& v : f.normal) v /= g;
        f.offset /= g;
      }
      facets.push_back(std::move(f));
    } else {
      throw ParseError("unknown keyword '" + std::string(keyword.text) + "'", line_no,
                       keyword.column);
    }
    if (eol == text.size()) break;
  }

  if (!dim) throw ParseError("missing dim line", line_no, 1);
  if (facets.size() < static_cast<std::size_t>(*dim) + 1)
    throw ParseError("dim " + std::to_string(*dim) + " needs at least " +
                         std::to_string(*dim + 1) + " facets, got " +
                         std::to_string(facets.size()),
                     line_no, 1);
  if (facets.size() > kMaxFacets) throw ParseError("more than 64 facets", line_no, 1);
  return HalfSpaceSpec(*dim, std::move(facets), std::move(name));
}

std::string serialize_polytope_file(const HalfSpaceSpec& spec) {
  std::string out;
  if (!spec.name().empty()) out += "name " + spec.name() + "\n";
  out += "dim " + std::to_string(spec.dim()) + "\n";
  for (const auto& f : spec.facets()) {
    out += "facet";
    for (auto v : f.normal) out += " " + std::to_string(v);
    out += " " + std::to_string(f.offset) + "\n";
  }
  return out;
}

}  // namespace cyh
