// cyhilbert: lattice-point counts, Ehrhart polynomials and boundary
// (Calabi-Yau hypersurface) Hilbert polynomials of Delzant polytopes.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "cyh/cli.hpp"

namespace {

bool read_input(const std::string& path, std::string& text) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace cyh::cli;

  CLI::App app{"Exact lattice-point counting for Delzant polytopes"};
  app.require_subcommand(1);

  std::string path;
  std::int64_t k = 1;
  std::string region = "full";
  std::string kind = "full";
  std::string method = "oracle";
  std::string format = "text";
  std::uint64_t budget = 0;
  bool normalize = false;

  const std::pair<const char*, const char*> commands[] = {
      {"validate", "check simplicity, boundedness and the Delzant condition"},
      {"faces", "list the face lattice"},
      {"volume-poly", "volume and boundary-volume polynomials in the offsets"},
      {"count", "brute-force lattice-point count in k*P"},
      {"ehrhart", "Ehrhart polynomial (oracle interpolation or operator formula)"},
      {"khovanskii", "lattice-point count via Todd operators on the volume"},
      {"boundary-formula", "boundary count via Ahat operators on the boundary volume"},
      {"hilbert-cy", "boundary Ehrhart polynomial computed three ways"},
      {"cross-check", "three-way report plus every invariant check"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("polytope", path, "polytope file ('-' for stdin)")->required();
    sub->add_option("--k", k, "dilation factor (count)");
    sub->add_option("--region", region, "full|interior|boundary|face:i,j,...");
    sub->add_option("--kind", kind, "full|interior|boundary|face (ehrhart)");
    sub->add_option("--method", method, "oracle|operator (ehrhart)");
    sub->add_option("--format", format, "text|json|tsv");
    sub->add_option("--budget", budget,
                    "max lattice points to classify (env CYHILBERT_BUDGET)");
    sub->add_flag("--normalize", normalize, "divide non-primitive normals by their gcd");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsageError;
  }

  CommandConfig config;
  try {
    config.command = *parse_command(app.get_subcommands().front()->get_name());
    config.k = k;
    config.region = parse_region(region);
    config.kind = parse_kind(kind);
    config.method = parse_method(method);
    config.format = parse_format(format);
    config.normalize = normalize;
    if (budget != 0) {
      config.budget = budget;
    } else if (const char* env = std::getenv("CYHILBERT_BUDGET")) {
      config.budget = std::stoull(env);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }

  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return kIoError;
  }
  return run_cli(config, text, std::cout, std::cerr);
}
