// Serial vs OpenMP lattice-point enumeration on dilated corpus polytopes.
//
//   bench_count [threads] [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "cyh/lattice_oracle.hpp"
#include "cyh/polytope_file.hpp"

namespace {

cyh::HalfSpaceSpec load(const std::string& stem) {
  std::ifstream in(std::string(CYH_CORPUS_DIR) + "/" + stem + ".poly");
  std::ostringstream ss;
  ss << in.rdbuf();
  return cyh::parse_polytope_file(ss.str());
}

template <typename Fn>
double best_of(int repeats, Fn&& fn) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s < best) best = s;
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
  omp_set_num_threads(threads);

  struct Case {
    const char* stem;
    std::int64_t k;
  };
  const Case cases[] = {{"simplex4", 50}, {"cube_cut", 100}, {"prism3x1", 40}, {"hirzebruch_b", 3000}};

  std::printf("%-14s %5s %12s %14s %10s %10s %8s\n", "polytope", "k", "box", "points",
              "serial_s", "omp_s", "speedup");
  for (const auto& c : cases) {
    const auto spec = load(c.stem);
    const auto lattice = cyh::build_face_lattice(spec);
    const auto box = cyh::dilated_box(lattice, c.k);
    const auto region = cyh::RegionSpec::boundary();

    std::uint64_t serial = 0, parallel = 0;
    const double ts = best_of(repeats, [&] {
      serial = cyh::kernels::count_serial(spec, box, c.k, region);
    });
    const double tp = best_of(repeats, [&] {
      parallel = cyh::kernels::count_parallel(spec, box, c.k, region);
    });
    if (serial != parallel) {
      std::fprintf(stderr, "%s: serial %llu != parallel %llu\n", c.stem,
                   static_cast<unsigned long long>(serial),
                   static_cast<unsigned long long>(parallel));
      return 1;
    }
    std::printf("%-14s %5lld %12llu %14llu %10.4f %10.4f %8.2f\n", c.stem,
                static_cast<long long>(c.k), static_cast<unsigned long long>(box.size()),
                static_cast<unsigned long long>(serial), ts, tp, ts / tp);
  }
  std::printf("threads: %d\n", threads);
  return 0;
}
