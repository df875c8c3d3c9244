#include "cyh/cli.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

#include "cyh/cross_check.hpp"
#include "cyh/cy_hilbert.hpp"
#include "cyh/errors.hpp"
#include "cyh/operators.hpp"
#include "cyh/polytope_file.hpp"
#include "cyh/volume.hpp"

namespace cyh::cli {

using nlohmann::json;

namespace {

struct Outcome {
  json body = json::object();
  std::string text;
  int exit = kOk;
};

json facet_set_json(FacetSet set) {
  json a = json::array();
  for (auto i : facet_indices(set)) a.push_back(i + 1);
  return a;
}

json point_json(const std::vector<Scalar>& p) {
  json a = json::array();
  for (const auto& x : p) a.push_back(x.to_string());
  return a;
}

std::string point_text(const std::vector<Scalar>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + p[i].to_string();
  return s + ")";
}

json poly_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"coefficient", c.to_string()}, {"exponent", e}});
  json vars = json::array();
  for (std::size_t i = 0; i < p.num_vars(); ++i) vars.push_back("l" + std::to_string(i + 1));
  return {{"text", p.to_string()}, {"variables", vars}, {"terms", terms}};
}

json ehrhart_json(const EhrhartPoly& e) {
  json coeffs = json::array();
  const int deg = e.poly.total_degree();
  for (int j = 0; j <= deg; ++j)
    coeffs.push_back(e.poly.coefficient(Exponent{static_cast<std::uint32_t>(j)}).to_string());
  return {{"text", e.to_string()}, {"kind", to_string(e.kind)}, {"coefficients", coeffs}};
}

json envelope(const CommandConfig& config, const HalfSpaceSpec& spec) {
  return {{"command", command_name(config.command)},
          {"polytope", spec.name()},
          {"dim", spec.dim()},
          {"facets", spec.num_facets()}};
}

void flatten(const json& j, const std::string& path, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      flatten(j[i], path + "." + std::to_string(i), out);
  } else {
    out << path << '\t' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

OracleOptions oracle_options(const CommandConfig& config) {
  return OracleOptions{config.budget, true};
}

Outcome do_validate(const HalfSpaceSpec& spec) {
  Outcome o;
  const auto vertices = enumerate_vertices(spec);
  const auto report = validate_delzant(vertices);
  json vs = json::array();
  for (const auto& v : vertices)
    vs.push_back({{"point", point_json(v.point)},
                  {"active", facet_set_json(v.active)},
                  {"det", v.det.get_str()}});
  json failures = json::array();
  std::ostringstream text;
  for (const auto& f : report.failures) {
    failures.push_back({{"vertex", point_json(f.vertex)},
                        {"active", facet_set_json(f.active)},
                        {"det", f.det.get_str()}});
    text << "vertex " << point_text(f.vertex) << ": det " << f.det.get_str()
         << " ≠ ±1\n";
  }
  o.body["delzant"] = report.passed;
  o.body["vertices"] = vs;
  o.body["failures"] = failures;
  if (report.passed)
    text << "Delzant: pass (" << vertices.size() << " vertices)\n";
  else
    text << "Delzant: fail\n";
  o.text = text.str();
  o.exit = report.passed ? kOk : kValidationFailure;
  return o;
}

Outcome do_faces(const HalfSpaceSpec& spec) {
  Outcome o;
  const FaceLattice lattice = build_face_lattice(spec);
  json faces = json::array();
  std::ostringstream text;
  for (const auto& [set, face] : lattice.faces()) {
    json verts = json::array();
    std::string vtext;
    for (auto v : face.vertices) {
      verts.push_back(point_json(lattice.vertices()[v].point));
      vtext += " " + point_text(lattice.vertices()[v].point);
    }
    faces.push_back({{"active", facet_set_json(set)}, {"dim", face.dim}, {"vertices", verts}});
    text << "dim " << face.dim << " " << facet_set_string(set) << ":" << vtext << "\n";
  }
  o.body["faces"] = faces;
  o.body["f_vector"] = lattice.f_vector();
  o.body["euler_sum"] = lattice.euler_sum();
  text << "f-vector:";
  for (auto f : lattice.f_vector()) text << " " << f;
  text << "\n";
  o.text = text.str();
  return o;
}

Outcome do_volume(const HalfSpaceSpec& spec) {
  Outcome o;
  const FaceLattice lattice = build_face_lattice(spec);
  const auto vol = volume_polynomial(spec, lattice);
  const auto bvol = boundary_volume_polynomial(vol);
  const auto anchor = spec.anchor();
  json per_facet = json::array();
  for (const auto& p : bvol.per_facet) per_facet.push_back(poly_json(p));
  o.body["volume"] = poly_json(vol.poly);
  o.body["boundary_volume"] = poly_json(bvol.poly);
  o.body["per_facet"] = per_facet;
  o.body["volume_at_anchor"] = vol.poly.evaluate(anchor).to_string();
  o.body["boundary_volume_at_anchor"] = bvol.poly.evaluate(anchor).to_string();
  o.text = "volume: " + vol.poly.to_string() + "\nboundary volume: " +
           bvol.poly.to_string() + "\nvolume at lambda0: " +
           vol.poly.evaluate(anchor).to_string() + "\nboundary volume at lambda0: " +
           bvol.poly.evaluate(anchor).to_string() + "\n";
  return o;
}

Outcome do_count(const CommandConfig& config, const HalfSpaceSpec& spec) {
  Outcome o;
  const FaceLattice lattice = build_face_lattice(spec);
  const auto n = count_points(spec, lattice, config.k, config.region, oracle_options(config));
  o.body["k"] = config.k;
  o.body["region"] = to_string(config.region);
  o.body["count"] = n;
  o.text = std::to_string(n) + "\n";
  return o;
}

Outcome do_ehrhart(const CommandConfig& config, const HalfSpaceSpec& spec) {
  Outcome o;
  const FaceLattice lattice = build_face_lattice(spec);
  EhrhartPoly poly;
  if (config.method == Method::operator_formula) {
    poly = symbolic_ehrhart(spec, volume_polynomial(spec, lattice), config.kind);
  } else {
    poly = ehrhart_interpolate(spec, lattice, config.kind,
                               config.kind == EhrhartKind::face ? config.region.face : 0,
                               oracle_options(config));
  }
  o.body["method"] = config.method == Method::oracle ? "oracle" : "operator";
  o.body["polynomial"] = ehrhart_json(poly);
  if (config.kind == EhrhartKind::face) o.body["face"] = facet_set_json(config.region.face);
  o.text = to_string(config.kind) + " Ehrhart: " + poly.to_string() + "\n";
  return o;
}

Outcome do_formula(const CommandConfig& config, const HalfSpaceSpec& spec) {
  Outcome o;
  const FaceLattice lattice = build_face_lattice(spec);
  const auto vol = volume_polynomial(spec, lattice);
  const bool boundary = config.command == Command::boundary_formula;
  const FormulaResult r =
      boundary ? boundary_count_formula(spec, vol) : khovanskii_count(spec, vol);
  o.body["count"] = r.value.to_string();
  o.body["operand"] = poly_json(boundary ? boundary_volume_polynomial(vol).poly : vol.poly);
  o.body["applied"] = poly_json(r.applied);
  o.text = r.value.to_string() + "\n";
  return o;
}

json hilbert_json(const HilbertReport& r, const FaceLattice& lattice) {
  json per_face = json::array();
  for (const auto& [set, poly] : r.per_face)
    per_face.push_back({{"active", facet_set_json(set)},
                        {"dim", lattice.resolve(set)->dim},
                        {"polynomial", ehrhart_json(poly)}});
  return {{"inclusion_exclusion", ehrhart_json(r.by_inclusion_exclusion)},
          {"operator_formula", ehrhart_json(r.by_operator_formula)},
          {"oracle", ehrhart_json(r.by_oracle)},
          {"agree", r.agree},
          {"per_face", per_face}};
}

Outcome do_hilbert(const CommandConfig& config, const HalfSpaceSpec& spec) {
  Outcome o;
  const FaceLattice lattice = build_face_lattice(spec);
  HilbertOptions options;
  options.oracle = oracle_options(config);
  const HilbertReport r = compute_hilbert_report(spec, lattice, options);
  if (!r.agree) throw DisagreementError(describe(r));
  o.body["hilbert"] = hilbert_json(r, lattice);
  o.text = "boundary Ehrhart: " + r.by_oracle.to_string() + "\n" + describe(r);
  return o;
}

Outcome do_cross_check(const CommandConfig& config, const HalfSpaceSpec& spec) {
  Outcome o;
  const FaceLattice lattice = build_face_lattice(spec);
  CrossCheckOptions options;
  options.hilbert.oracle = oracle_options(config);
  const CrossCheckReport r = cross_check(spec, options);
  json checks = json::array();
  std::ostringstream text;
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    std::string detail = c.detail;
    if (auto nl = detail.find('\n'); nl != std::string::npos) detail.resize(nl);
    text << (c.passed ? "[PASS] " : "[FAIL] ") << c.name
         << (detail.empty() ? "" : ": " + detail) << "\n";
  }
  o.body["hilbert"] = hilbert_json(r.hilbert, lattice);
  o.body["checks"] = checks;
  o.body["passed"] = r.all_passed();
  text << "boundary Ehrhart: " << r.hilbert.by_oracle.to_string() << "\n"
       << (r.all_passed() ? "cross-check: pass" : "cross-check: FAIL") << "\n";
  o.text = text.str();
  o.exit = r.all_passed() ? kOk : kFormulaViolation;
  return o;
}

Outcome dispatch(const CommandConfig& config, const HalfSpaceSpec& spec) {
  switch (config.command) {
    case Command::validate: return do_validate(spec);
    case Command::faces: return do_faces(spec);
    case Command::volume_poly: return do_volume(spec);
    case Command::count: return do_count(config, spec);
    case Command::ehrhart: return do_ehrhart(config, spec);
    case Command::khovanskii:
    case Command::boundary_formula: return do_formula(config, spec);
    case Command::hilbert_cy: return do_hilbert(config, spec);
    case Command::cross_check: return do_cross_check(config, spec);
  }
  throw std::logic_error("unhandled command");
}

void emit(const CommandConfig& config, const json& body, const std::string& text,
          std::ostream& out) {
  switch (config.format) {
    case OutputFormat::json: out << body.dump(2) << "\n"; break;
    case OutputFormat::tsv: flatten(body, "", out); break;
    case OutputFormat::text: out << text; break;
  }
}

std::string error_kind(int exit) {
  switch (exit) {
    case kUsageError: return "usage";
    case kParseError: return "parse";
    case kValidationFailure: return "validation";
    case kFormulaViolation: return "formula";
    case kBudgetExceeded: return "budget";
    case kIoError: return "io";
    default: return "internal";
  }
}

int report_error(const CommandConfig& config, int exit, const std::string& message,
                 std::ostream& out, std::ostream& err) {
  err << "error: " << message << "\n";
  if (config.format == OutputFormat::json) {
    json body = {{"command", command_name(config.command)},
                 {"error", {{"kind", error_kind(exit)}, {"message", message}}}};
    out << body.dump(2) << "\n";
  }
  return exit;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  static const std::pair<std::string_view, Command> table[] = {
      {"validate", Command::validate},
      {"faces", Command::faces},
      {"volume-poly", Command::volume_poly},
      {"count", Command::count},
      {"ehrhart", Command::ehrhart},
      {"khovanskii", Command::khovanskii},
      {"boundary-formula", Command::boundary_formula},
      {"hilbert-cy", Command::hilbert_cy},
      {"cross-check", Command::cross_check},
  };
  for (const auto& [n, c] : table)
    if (n == name) return c;
  return std::nullopt;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::validate: return "validate";
    case Command::faces: return "faces";
    case Command::volume_poly: return "volume-poly";
    case Command::count: return "count";
    case Command::ehrhart: return "ehrhart";
    case Command::khovanskii: return "khovanskii";
    case Command::boundary_formula: return "boundary-formula";
    case Command::hilbert_cy: return "hilbert-cy";
    case Command::cross_check: return "cross-check";
  }
  return "?";
}

RegionSpec parse_region(std::string_view text) {
  if (text == "full") return RegionSpec::full();
  if (text == "interior") return RegionSpec::interior();
  if (text == "boundary") return RegionSpec::boundary();
  if (text.starts_with("face:")) {
    std::vector<std::size_t> indices;
    std::string_view rest = text.substr(5);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      auto item = rest.substr(0, comma);
      std::size_t v = 0;
      for (char ch : item) {
        if (ch < '0' || ch > '9') throw UsageError("bad facet index in region '" + std::string(text) + "'");
        v = v * 10 + static_cast<std::size_t>(ch - '0');
      }
      if (item.empty() || v == 0 || v > kMaxFacets)
        throw UsageError("facet indices are 1-based, got '" + std::string(item) + "'");
      indices.push_back(v - 1);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (indices.empty()) throw UsageError("face region needs at least one facet");
    return RegionSpec::of_face(make_facet_set(indices));
  }
  throw UsageError("unknown region '" + std::string(text) +
                   "' (full|interior|boundary|face:i,j,...)");
}

EhrhartKind parse_kind(std::string_view text) {
  if (text == "full") return EhrhartKind::full;
  if (text == "interior") return EhrhartKind::interior;
  if (text == "boundary") return EhrhartKind::boundary;
  if (text == "face") return EhrhartKind::face;
  throw UsageError("unknown kind '" + std::string(text) + "' (full|interior|boundary|face)");
}

Method parse_method(std::string_view text) {
  if (text == "oracle") return Method::oracle;
  if (text == "operator") return Method::operator_formula;
  throw UsageError("unknown method '" + std::string(text) + "' (oracle|operator)");
}

OutputFormat parse_format(std::string_view text) {
  if (text == "text") return OutputFormat::text;
  if (text == "json") return OutputFormat::json;
  if (text == "tsv") return OutputFormat::tsv;
  throw UsageError("unknown format '" + std::string(text) + "' (text|json|tsv)");
}

void validate_config(const CommandConfig& config) {
  if (config.k < 1) throw UsageError("--k must be a positive integer");
  if (config.budget == 0) throw UsageError("--budget must be positive");
  if (config.command == Command::ehrhart) {
    if (config.method == Method::operator_formula && config.kind != EhrhartKind::full &&
        config.kind != EhrhartKind::boundary)
      throw UsageError("--method operator supports --kind full or boundary only");
    if (config.kind == EhrhartKind::face && config.region.kind != RegionKind::face)
      throw UsageError("--kind face needs --region face:i,j,...");
  }
}

int run_command(const CommandConfig& config, const HalfSpaceSpec& spec,
                std::ostream& out, std::ostream& err) {
  try {
    validate_config(config);
    if (config.region.kind == RegionKind::face && spec.num_facets() < kMaxFacets &&
        (config.region.face >> spec.num_facets()) != 0)
      throw UsageError("face region names a facet beyond " +
                       std::to_string(spec.num_facets()));
    Outcome o = dispatch(config, spec);
    json body = envelope(config, spec);
    body.update(o.body);
    emit(config, body, o.text, out);
    return o.exit;
  } catch (const UsageError& e) {
    return report_error(config, kUsageError, e.what(), out, err);
  } catch (const ValidationError& e) {
    return report_error(config, kValidationFailure, e.what(), out, err);
  } catch (const BudgetExceededError& e) {
    return report_error(config, kBudgetExceeded, e.what(), out, err);
  } catch (const FormulaViolationError& e) {
    return report_error(config, kFormulaViolation, e.what(), out, err);
  } catch (const Error& e) {
    return report_error(config, kInternalError, e.what(), out, err);
  }
}

int run_cli(const CommandConfig& config, std::string_view polytope_text,
            std::ostream& out, std::ostream& err) {
  try {
    validate_config(config);
    const HalfSpaceSpec spec =
        parse_polytope_file(polytope_text, ParseOptions{config.normalize});
    return run_command(config, spec, out, err);
  } catch (const UsageError& e) {
    return report_error(config, kUsageError, e.what(), out, err);
  } catch (const ParseError& e) {
    return report_error(config, kParseError, e.what(), out, err);
  } catch (const DimensionError& e) {
    return report_error(config, kParseError, e.what(), out, err);
  }
}

}  // namespace cyh::cli
