// Acceptance suite: one line per criterion, exit status 0 only if all pass.
//
// Criterion 10 includes a mutation run: the Bernoulli number B_2 is replaced
// by a wrong value, every series derived from it is rebuilt, and criteria 2-4
// are re-run with the corrupted table. Each must then fail. The inclusion-
// exclusion count itself uses no series constants, so for criterion 4 the
// mutation is detected through the three-way report, whose operator-formula
// polynomial no longer matches the inclusion-exclusion one.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "cyh/cli.hpp"
#include "cyh/cross_check.hpp"
#include "cyh/cy_hilbert.hpp"
#include "cyh/errors.hpp"
#include "cyh/operators.hpp"
#include "cyh/volume.hpp"
#include "support.hpp"

using namespace cyh;

namespace {

struct Entry {
  std::string name;
  HalfSpaceSpec spec;
  FaceLattice lattice;
  VolumePolynomial vol;
};

std::vector<Entry> load_corpus() {
  std::vector<Entry> out;
  for (const auto& name : test::corpus_names()) {
    auto spec = test::load(name);
    auto lattice = build_face_lattice(spec);
    auto vol = volume_polynomial(spec, lattice);
    out.push_back({name, std::move(spec), std::move(lattice), std::move(vol)});
  }
  return out;
}

Scalar as_scalar(std::uint64_t n) { return Scalar(static_cast<std::int64_t>(n)); }

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& what) {
    if (passed) detail = what;
    passed = false;
  }
};

// Series tables rebuilt from a (possibly corrupted) list of Bernoulli numbers.
// Ahat's degree-2n coefficient is (2^(1-2n) - 1) B_2n / (2n)!.
SeriesTable table_from_bernoulli(const std::vector<Scalar>& b, int order) {
  SeriesTable t;
  t.td.name = SeriesName::td;
  t.ahat.name = SeriesName::ahat;
  t.inv_ahat.name = SeriesName::inv_ahat;
  for (int j = 0; j <= order; ++j) {
    const auto uj = static_cast<unsigned>(j);
    const Scalar c = b[uj] / Scalar(factorial(uj));
    t.td.coefficients.push_back(j % 2 == 0 ? c : -c);
    if (j % 2 == 1) {
      t.ahat.coefficients.emplace_back(0);
    } else if (j == 0) {
      t.ahat.coefficients.push_back(c);
    } else {
      const Scalar two_pow = pow(Scalar(2), uj - 1);
      t.ahat.coefficients.push_back((Scalar(1) / two_pow - Scalar(1)) * c);
    }
  }
  t.inv_ahat.coefficients = invert_series(t.ahat.coefficients, order);
  return t;
}

constexpr int kSeriesOrder = 8;

// -- criteria 2-4, parameterised by the series table ---------------------------

Outcome todd_counts(const std::vector<Entry>& corpus, const SeriesTable& table) {
  Outcome o;
  for (const auto& e : corpus) {
    const auto counted = count_points(e.spec, e.lattice, 1, RegionSpec::full());
    try {
      const auto formula = khovanskii_count(e.spec, e.vol, table);
      if (formula.value != as_scalar(counted))
        o.fail(e.name + ": formula " + formula.value.to_string() + ", counted " +
               std::to_string(counted));
    } catch (const FormulaViolationError& err) {
      o.fail(e.name + ": " + err.what());
    }
  }
  return o;
}

Outcome boundary_counts(const std::vector<Entry>& corpus, const SeriesTable& table) {
  Outcome o;
  for (const auto& e : corpus) {
    const auto counted = count_points(e.spec, e.lattice, 1, RegionSpec::boundary());
    try {
      const auto formula = boundary_count_formula(e.spec, e.vol, table);
      if (formula.value != as_scalar(counted))
        o.fail(e.name + ": formula " + formula.value.to_string() + ", counted " +
               std::to_string(counted));
    } catch (const FormulaViolationError& err) {
      o.fail(e.name + ": " + err.what());
    }
  }
  return o;
}

Outcome inclusion_exclusion(const std::vector<Entry>& corpus,
                            const std::optional<SeriesTable>& table) {
  Outcome o;
  for (const auto& e : corpus) {
    for (std::int64_t k = 1; k <= 5; ++k) {
      const auto ie = inclusion_exclusion_count(e.spec, e.lattice, k);
      const auto counted = count_points(e.spec, e.lattice, k, RegionSpec::boundary());
      if (ie != counted)
        o.fail(e.name + " k=" + std::to_string(k) + ": " + std::to_string(ie) + " vs " +
               std::to_string(counted));
    }
    if (table) {
      HilbertOptions options;
      options.series = table;
      try {
        const auto report = compute_hilbert_report(e.spec, e.lattice, options);
        if (!report.agree) o.fail(e.name + ": " + describe(report));
      } catch (const FormulaViolationError& err) {
        o.fail(e.name + ": " + err.what());
      }
    }
  }
  return o;
}

// -- the remaining criteria ---------------------------------------------------------

Outcome unit_simplices() {
  Outcome o;
  const std::pair<const char*, const char*> cases[] = {
      {"simplex2", "3k"}, {"simplex3", "2k^2 + 2"}, {"simplex4", "(5/6)k^3 + (25/6)k"}};
  for (const auto& [name, expected] : cases) {
    const auto r = cy_hilbert_polynomial(test::load(name));
    for (const auto* p : {&r.by_inclusion_exclusion, &r.by_operator_formula, &r.by_oracle})
      if (p->to_string() != expected)
        o.fail(std::string(name) + ": got " + p->to_string() + ", want " + expected);
    if (!r.agree) o.fail(std::string(name) + ": paths disagree");
  }
  return o;
}

Outcome corpus_shape(const std::vector<Entry>& corpus) {
  Outcome o;
  int lo = 99, hi = 0;
  for (const auto& e : corpus) {
    lo = std::min(lo, e.spec.dim());
    hi = std::max(hi, e.spec.dim());
    if (!validate_delzant(e.spec).passed) o.fail(e.name + " is not Delzant");
  }
  if (corpus.size() < 10) o.fail("corpus has only " + std::to_string(corpus.size()) + " polytopes");
  if (lo != 1 || hi != 4) o.fail("corpus dimensions span " + std::to_string(lo) + ".." + std::to_string(hi));
  return o;
}

Outcome euler_identity() {
  Outcome o;
  for (int n = 1; n <= 10; ++n)
    if (!euler_expansion_identity(n)) o.fail("n=" + std::to_string(n));
  return o;
}

Outcome reciprocity(const std::vector<Entry>& corpus) {
  Outcome o;
  for (const auto& e : corpus) {
    const auto full = ehrhart_interpolate(e.spec, e.lattice, EhrhartKind::full);
    const Scalar sign(e.spec.dim() % 2 == 0 ? 1 : -1);
    for (std::int64_t k = 1; k <= 5; ++k) {
      const auto interior = count_points(e.spec, e.lattice, k, RegionSpec::interior());
      if (sign * full(-k) != as_scalar(interior))
        o.fail(e.name + " k=" + std::to_string(k) + ": " + (sign * full(-k)).to_string() +
               " vs " + std::to_string(interior));
    }
  }
  return o;
}

Outcome derivative_identity(const std::vector<Entry>& corpus) {
  Outcome o;
  for (const auto& e : corpus) {
    const auto anchor = e.spec.anchor();
    MultiPoly sum(e.spec.num_facets());
    for (std::size_t i = 0; i < e.spec.num_facets(); ++i) sum += differentiate(e.vol.poly, i);
    Scalar direct(0);
    for (std::size_t i = 0; i < e.spec.num_facets(); ++i)
      direct += lattice_face_volume(e.spec, e.lattice, FacetSet{1} << i);
    if (sum.evaluate(anchor) != direct)
      o.fail(e.name + ": " + sum.evaluate(anchor).to_string() + " vs " + direct.to_string());
  }
  return o;
}

Outcome series_constants() {
  Outcome o;
  const std::vector<Scalar> expected{Scalar(1), test::q(1, 2), test::q(1, 12), Scalar(0),
                                     test::q(-1, 720), Scalar(0), test::q(1, 30240)};
  const auto td = series_coefficients(SeriesName::td, 6).coefficients;
  const auto oracle = invert_series(todd_denominator_series(6), 6);
  if (td != expected) o.fail("Td coefficients differ from the literal list");
  if (oracle != expected) o.fail("inversion oracle differs from the literal list");

  const auto ahat = series_coefficients(SeriesName::ahat, 10).coefficients;
  const auto inv = series_coefficients(SeriesName::inv_ahat, 10).coefficients;
  const auto product = multiply_series(ahat, inv, 10);
  for (std::size_t j = 0; j < product.size(); ++j)
    if (product[j] != Scalar(j == 0 ? 1 : 0)) o.fail("Ahat * invAhat != 1 at order " + std::to_string(j));
  for (unsigned j = 0; j <= 5; ++j) {
    const Scalar want = Scalar(1) / (pow(Scalar(2), 2 * j) * Scalar(factorial(2 * j + 1)));
    if (inv[2 * j] != want) o.fail("invAhat coefficient " + std::to_string(2 * j));
  }
  return o;
}

Outcome volume_oracle(const std::vector<Entry>& corpus) {
  Outcome o;
  for (const auto& e : corpus) {
    const auto m = static_cast<unsigned>(e.spec.dim());
    const auto need =
        binomial(static_cast<std::int64_t>(e.spec.num_facets()) + m, m).get_ui();
    const auto samples = chamber_samples(e.spec, e.lattice, need);
    if (samples.size() < need) o.fail(e.name + ": too few samples");
    for (const auto& s : samples)
      if (e.vol.poly.evaluate(s) != numeric_volume_at(e.spec, e.lattice, s))
        o.fail(e.name + ": volume polynomial disagrees with the numeric oracle");
  }
  return o;
}

Outcome negative_paths(const std::vector<Entry>& corpus) {
  Outcome o;
  {
    cli::CommandConfig config;
    config.command = cli::Command::validate;
    std::ostringstream out, err;
    const auto text = test::read_text(test::corpus_dir() / "invalid" / "det2_triangle.poly");
    const int code = cli::run_cli(config, text, out, err);
    if (code != cli::kValidationFailure) o.fail("det-2 triangle: exit " + std::to_string(code));
    if (out.str().find("vertex (1,0): det 2") == std::string::npos)
      o.fail("det-2 triangle: offending vertex not reported");
  }
  try {
    enumerate_vertices(test::load_invalid("square_pyramid"));
    o.fail("square pyramid accepted");
  } catch (const NonSimpleError&) {
  }

  auto bernoulli = bernoulli_numbers(kSeriesOrder);
  if (table_from_bernoulli(bernoulli, kSeriesOrder).td.coefficients !=
          SeriesTable::standard(kSeriesOrder).td.coefficients ||
      table_from_bernoulli(bernoulli, kSeriesOrder).ahat.coefficients !=
          SeriesTable::standard(kSeriesOrder).ahat.coefficients)
    o.fail("rebuilt series table differs from the standard one");
  bernoulli[2] = test::q(1, 5);
  const auto corrupted = table_from_bernoulli(bernoulli, kSeriesOrder);
  if (todd_counts(corpus, corrupted).passed) o.fail("mutation survived criterion 2");
  if (boundary_counts(corpus, corrupted).passed) o.fail("mutation survived criterion 3");
  if (inclusion_exclusion(corpus, corrupted).passed) o.fail("mutation survived criterion 4");
  if (o.passed) o.detail = "corrupted B_2 = 1/5 fails criteria 2, 3 and 4";
  return o;
}

int failures = 0;

void report(const std::string& label, double limit_seconds, const std::function<Outcome()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && secs > limit_seconds)
    o.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s");
  if (!o.passed) ++failures;
  std::printf("[%s] %s (%.2f s)%s%s\n", o.passed ? "PASS" : "FAIL", label.c_str(), secs,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const auto corpus = load_corpus();
  const auto standard = SeriesTable::standard(kSeriesOrder);

  report("corpus", 0, [&] { return corpus_shape(corpus); });
  report("criterion 1", 5, unit_simplices);
  report("criterion 2", 30, [&] { return todd_counts(corpus, standard); });
  report("criterion 3", 30, [&] { return boundary_counts(corpus, standard); });
  report("criterion 4", 60, [&] { return inclusion_exclusion(corpus, std::nullopt); });
  report("criterion 5", 5, euler_identity);
  report("criterion 6", 0, [&] { return reciprocity(corpus); });
  report("criterion 7", 0, [&] { return derivative_identity(corpus); });
  report("criterion 8", 0, series_constants);
  report("criterion 9", 0, [&] { return volume_oracle(corpus); });
  report("criterion 10", 0, [&] { return negative_paths(corpus); });

  std::printf("%s: %d failing\n", failures == 0 ? "acceptance passed" : "acceptance FAILED",
              failures);
  return failures == 0 ? 0 : 1;
}
