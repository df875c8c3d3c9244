#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyh/polytope.hpp"
#include "cyh/polytope_file.hpp"

namespace cyh::test {

inline std::filesystem::path corpus_dir() { return CYH_CORPUS_DIR; }

inline std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline HalfSpaceSpec load(const std::string& stem) {
  return parse_polytope_file(read_text(corpus_dir() / (stem + ".poly")));
}

inline HalfSpaceSpec load_invalid(const std::string& stem) {
  return parse_polytope_file(read_text(corpus_dir() / "invalid" / (stem + ".poly")));
}

// Every valid corpus file, sorted by name.
inline std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir()))
    if (entry.path().extension() == ".poly") out.push_back(entry.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Scalar> scalars(std::initializer_list<std::int64_t> xs) {
  return {xs.begin(), xs.end()};
}

inline Scalar q(std::int64_t num, std::int64_t den) { return Scalar(Integer(num), Integer(den)); }

// Small random rationals and polynomials for property tests.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  Scalar rational() {
    return Scalar(Integer(integer(-20, 20)), Integer(integer(1, 9)));
  }

  MultiPoly poly(std::size_t nv, int max_deg, int max_terms) {
    MultiPoly p(nv);
    const auto n = integer(0, max_terms);
    for (std::int64_t t = 0; t < n; ++t) {
      Exponent e(nv, 0);
      auto budget = integer(0, max_deg);
      for (std::size_t i = 0; i < nv && budget > 0; ++i) {
        const auto take = integer(0, budget);
        e[i] = static_cast<std::uint32_t>(take);
        budget -= take;
      }
      p.add_term(e, rational());
    }
    return p;
  }

  std::vector<Scalar> point(std::size_t nv) {
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < nv; ++i) out.push_back(rational());
    return out;
  }

 private:
  std::mt19937 rng_;
};

}  // namespace cyh::test
