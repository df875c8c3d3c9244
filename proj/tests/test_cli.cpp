#include <set>
#include <sstream>

#include "cyh/cli.hpp"
#include "cyh/errors.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

using namespace cyh;
using namespace cyh::cli;
using nlohmann::json;
using cyh::test::load;
using cyh::test::read_text;

namespace {

// Subset of JSON Schema used by the checked-in schemas: type, enum, required,
// properties, additionalProperties (false only), items, and local $ref.
class SchemaChecker {
 public:
  explicit SchemaChecker(json root) : root_(std::move(root)) {}

  std::vector<std::string> check(const json& doc) {
    errors_.clear();
    visit(root_, doc, "$");
    return errors_;
  }

 private:
  const json& resolve(const json& schema) const {
    if (!schema.contains("$ref")) return schema;
    const auto ref = schema["$ref"].get<std::string>();
    const std::string prefix = "#/definitions/";
    if (ref.rfind(prefix, 0) != 0) throw std::runtime_error("unsupported $ref " + ref);
    return resolve(root_.at("definitions").at(ref.substr(prefix.size())));
  }

  static bool type_ok(const std::string& type, const json& v) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "integer") return v.is_number_integer();
    if (type == "number") return v.is_number();
    if (type == "boolean") return v.is_boolean();
    if (type == "null") return v.is_null();
    return false;
  }

  void visit(const json& raw, const json& v, const std::string& path) {
    const json& s = resolve(raw);
    if (s.contains("type") && !type_ok(s["type"].get<std::string>(), v)) {
      errors_.push_back(path + ": expected " + s["type"].get<std::string>());
      return;
    }
    if (s.contains("enum") &&
        std::find(s["enum"].begin(), s["enum"].end(), v) == s["enum"].end())
      errors_.push_back(path + ": " + v.dump() + " not in enum");
    if (v.is_object()) {
      if (s.contains("required"))
        for (const auto& key : s["required"])
          if (!v.contains(key.get<std::string>()))
            errors_.push_back(path + ": missing " + key.get<std::string>());
      const json props = s.value("properties", json::object());
      for (const auto& [key, value] : v.items()) {
        if (props.contains(key))
          visit(props[key], value, path + "." + key);
        else if (s.contains("additionalProperties") && !s["additionalProperties"].get<bool>())
          errors_.push_back(path + ": unexpected " + key);
      }
    }
    if (v.is_array() && s.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i)
        visit(s["items"], v[i], path + "[" + std::to_string(i) + "]");
  }

  json root_;
  std::vector<std::string> errors_;
};

json load_schema(const std::string& name) {
  return json::parse(read_text(std::filesystem::path(CYH_SCHEMA_DIR) / (name + ".schema.json")));
}

struct Run {
  int exit = -1;
  std::string out;
  std::string err;
};

Run run(const CommandConfig& config, const std::string& text) {
  std::ostringstream out, err;
  Run r;
  r.exit = run_cli(config, text, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

Run run_corpus(const CommandConfig& config, const std::string& stem) {
  return run(config, read_text(test::corpus_dir() / (stem + ".poly")));
}

CommandConfig cfg(Command c, OutputFormat f = OutputFormat::text) {
  CommandConfig config;
  config.command = c;
  config.format = f;
  return config;
}

const char* kSimplex2 = "dim 2\nfacet -1 0 0\nfacet 0 -1 0\nfacet 1 1 1\n";

}  // namespace

TEST_SUITE("polytope file") {
  TEST_CASE("parse examples") {
    const auto spec = parse_polytope_file(kSimplex2);
    CHECK(spec.dim() == 2);
    CHECK(spec.num_facets() == 3);
    CHECK(spec.facet(2) == Facet{{1, 1}, 1});
    CHECK(spec == HalfSpaceSpec(2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 1}, 1}}));

    try {
      parse_polytope_file("dim 2\nfacet 2 2 2\nfacet -1 0 0\nfacet 0 -1 0\n");
      FAIL("expected NonPrimitiveNormalError");
    } catch (const NonPrimitiveNormalError& e) {
      CHECK(e.line() == 2);
    }
    try {
      parse_polytope_file("dim 2\nfacet -1 0\n");
      FAIL("expected DimMismatchError");
    } catch (const DimMismatchError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("3 fields required for dim 2, got 2") !=
            std::string::npos);
    }
  }

  TEST_CASE("normalize") {
    const ParseOptions normalize{true};
    const auto spec =
        parse_polytope_file("dim 2\nfacet 2 2 2\nfacet -1 0 0\nfacet 0 -1 0\n", normalize);
    CHECK(spec.facet(0) == Facet{{1, 1}, 1});
    CHECK_THROWS_AS(
        parse_polytope_file("dim 2\nfacet 2 2 3\nfacet -1 0 0\nfacet 0 -1 0\n", normalize),
        NonIntegerOffsetError);
  }

  TEST_CASE("syntax errors carry positions") {
    const std::pair<const char*, int> bad[] = {
        {"facet 1 1\n", 1},
        {"dim 2\ndim 2\n", 2},
        {"dim 0\n", 1},
        {"dim two\n", 1},
        {"dim 2\nfacet -1 0 0\nfacet 0 -1 0\nfacet 1 x 1\n", 4},
        {"dim 2\nface -1 0 0\n", 2},
        {"dim 2\nfacet 0 0 0\nfacet -1 0 0\nfacet 0 -1 0\n", 2},
    };
    for (const auto& [text, line] : bad) {
      CAPTURE(text);
      try {
        parse_polytope_file(text);
        FAIL("expected ParseError");
      } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() >= 1);
      }
    }
    CHECK_THROWS_AS(parse_polytope_file("dim 2\nfacet -1 0 1/2\n"), NonIntegerOffsetError);
    CHECK_THROWS_AS(parse_polytope_file("dim 2\nfacet -1 0 0\nfacet 0 -1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_polytope_file(""), ParseError);
  }

  TEST_CASE("comments, blank lines and names") {
    const auto spec = parse_polytope_file(
        "# header\n\nname  unit   triangle\ndim 2  # inline\n\tfacet -1 0 0\n"
        "facet 0 -1 0\r\nfacet +1 1 1");
    CHECK(spec.name() == "unit   triangle");
    CHECK(spec.facet(2) == Facet{{1, 1}, 1});
  }

  TEST_CASE("parse-serialize fixpoint over the corpus") {
    for (const auto& name : test::corpus_names()) {
      CAPTURE(name);
      const auto first = load(name);
      const auto text = serialize_polytope_file(first);
      const auto second = parse_polytope_file(text);
      CHECK(first == second);
      CHECK(serialize_polytope_file(second) == text);
      // the serialized form is the file itself minus comments and blank lines
      std::istringstream src(read_text(test::corpus_dir() / (name + ".poly")));
      std::string line, stripped;
      while (std::getline(src, line))
        if (!line.empty() && line[0] != '#') stripped += line + "\n";
      CHECK(stripped == text);
    }
  }
}

TEST_SUITE("cli") {
  TEST_CASE("argument parsing") {
    CHECK(parse_command("hilbert-cy") == Command::hilbert_cy);
    CHECK_FALSE(parse_command("hilbert").has_value());
    for (auto c : {Command::validate, Command::faces, Command::volume_poly, Command::count,
                   Command::ehrhart, Command::khovanskii, Command::boundary_formula,
                   Command::hilbert_cy, Command::cross_check})
      CHECK(parse_command(command_name(c)) == c);
    const auto face = parse_region("face:1,3");
    CHECK(face.kind == RegionKind::face);
    CHECK(face.face == 0b101);
    CHECK(parse_region("interior").kind == RegionKind::interior);
    CHECK_THROWS_AS(parse_region("face:0"), UsageError);
    CHECK_THROWS_AS(parse_region("face:"), UsageError);
    CHECK_THROWS_AS(parse_region("edge"), UsageError);
    CHECK(parse_kind("boundary") == EhrhartKind::boundary);
    CHECK(parse_method("operator") == Method::operator_formula);
    CHECK(parse_format("tsv") == OutputFormat::tsv);
    CHECK_THROWS_AS(parse_format("xml"), UsageError);
  }

  TEST_CASE("flag combinations are rejected before computing") {
    auto c = cfg(Command::ehrhart);
    c.method = Method::operator_formula;
    c.kind = EhrhartKind::interior;
    CHECK_THROWS_AS(validate_config(c), UsageError);
    c.kind = EhrhartKind::face;
    CHECK_THROWS_AS(validate_config(c), UsageError);
    auto k = cfg(Command::count);
    k.k = 0;
    CHECK(run(k, kSimplex2).exit == kUsageError);
    // usage errors win over a broken polytope
    CHECK(run(k, "garbage").exit == kUsageError);
    auto f = cfg(Command::count);
    f.region = parse_region("face:4");
    CHECK(run(f, kSimplex2).exit == kUsageError);
  }

  TEST_CASE("command examples") {
    auto r = run_corpus(cfg(Command::hilbert_cy), "simplex3");
    CHECK(r.exit == kOk);
    CHECK(r.out.rfind("boundary Ehrhart: 2k^2 + 2\n", 0) == 0);

    r = run_corpus(cfg(Command::validate), "invalid/det2_triangle");
    CHECK(r.exit == kValidationFailure);
    CHECK(r.out.find("vertex (1,0): det 2 ≠ ±1") != std::string::npos);

    auto count = cfg(Command::count);
    count.k = 2;
    count.region = RegionSpec::boundary();
    r = run_corpus(count, "simplex2");
    CHECK(r.exit == kOk);
    CHECK(r.out == "6\n");

    auto eh = cfg(Command::ehrhart);
    eh.kind = EhrhartKind::face;
    eh.region = parse_region("face:1");
    r = run_corpus(eh, "simplex2");
    CHECK(r.exit == kOk);
    CHECK(r.out == "face Ehrhart: k + 1\n");
    eh = cfg(Command::ehrhart);
    eh.method = Method::operator_formula;
    r = run_corpus(eh, "simplex2");
    CHECK(r.out == "full Ehrhart: (1/2)k^2 + (3/2)k + 1\n");
  }

  TEST_CASE("exit codes are disjoint") {
    const std::set<int> codes{kOk,
                              kInternalError,
                              kUsageError,
                              kParseError,
                              kValidationFailure,
                              kFormulaViolation,
                              kBudgetExceeded,
                              kIoError};
    CHECK(codes.size() == 8);

    CHECK(run(cfg(Command::validate), "dim 2\nfacet -1 0\n").exit == kParseError);
    CHECK(run_corpus(cfg(Command::validate), "invalid/square_pyramid").exit ==
          kValidationFailure);
    CHECK(run_corpus(cfg(Command::faces), "invalid/det2_triangle").exit == kValidationFailure);
    auto big = cfg(Command::count);
    big.k = 50;
    big.budget = 1000;
    CHECK(run_corpus(big, "cube").exit == kBudgetExceeded);
    CHECK(run_corpus(cfg(Command::cross_check), "simplex2").exit == kOk);
  }

  TEST_CASE("every command's JSON validates against its schema") {
    std::vector<CommandConfig> configs;
    for (auto c : {Command::validate, Command::faces, Command::volume_poly, Command::count,
                   Command::ehrhart, Command::khovanskii, Command::boundary_formula,
                   Command::hilbert_cy, Command::cross_check})
      configs.push_back(cfg(c, OutputFormat::json));
    auto face = cfg(Command::ehrhart, OutputFormat::json);
    face.kind = EhrhartKind::face;
    face.region = parse_region("face:1");
    configs.push_back(face);

    for (const char* stem : {"simplex2", "hirzebruch_a", "prism2x1", "segment",
                             "invalid/det2_triangle"}) {
      for (const auto& config : configs) {
        CAPTURE(stem);
        CAPTURE(command_name(config.command));
        const auto r = run_corpus(config, stem);
        const auto doc = json::parse(r.out);
        const bool is_error = doc.contains("error");
        if (is_error)
          CHECK(r.exit != kOk);
        else if (doc.value("delzant", true))
          CHECK(r.exit == kOk);
        else
          CHECK(r.exit == kValidationFailure);
        SchemaChecker checker(load_schema(is_error ? "error" : command_name(config.command)));
        const auto errors = checker.check(doc);
        for (const auto& e : errors) MESSAGE(e);
        CHECK(errors.empty());
        if (!is_error) CHECK(doc["command"] == command_name(config.command));
      }
    }

    const auto bad = run(cfg(Command::faces, OutputFormat::json), "dim 2\nfacet -1 0\n");
    CHECK(bad.exit == kParseError);
    const auto doc = json::parse(bad.out);
    CHECK(doc["error"]["kind"] == "parse");
    CHECK(SchemaChecker(load_schema("error")).check(doc).empty());
  }

  TEST_CASE("the schema checker rejects malformed documents") {
    SchemaChecker checker(load_schema("count"));
    json doc = {{"command", "count"}, {"polytope", ""}, {"dim", 2}, {"facets", 3},
                {"k", 1},             {"region", "full"}, {"count", 3}};
    CHECK(checker.check(doc).empty());
    doc["count"] = "3";
    CHECK_FALSE(checker.check(doc).empty());
    doc["count"] = 3;
    doc["extra"] = true;
    CHECK_FALSE(checker.check(doc).empty());
    doc.erase("extra");
    doc.erase("k");
    CHECK_FALSE(checker.check(doc).empty());
  }

  TEST_CASE("tsv output") {
    auto c = cfg(Command::count, OutputFormat::tsv);
    c.k = 3;
    const auto r = run_corpus(c, "simplex2");
    CHECK(r.exit == kOk);
    CHECK(r.out.find("count\t10\n") != std::string::npos);
    CHECK(r.out.find("command\tcount\n") != std::string::npos);
  }

  TEST_CASE("cross-check exit status follows agreement") {
    for (const auto& name : test::corpus_names()) {
      CAPTURE(name);
      const auto r = run_corpus(cfg(Command::cross_check, OutputFormat::json), name);
      const auto doc = json::parse(r.out);
      CHECK((r.exit == kOk) == doc["hilbert"]["agree"].get<bool>());
      CHECK(doc["passed"].get<bool>());
    }
  }
}
