#include "cyh/cross_check.hpp"

#include <algorithm>
#include <sstream>

#include "cyh/errors.hpp"
#include "cyh/operators.hpp"
#include "cyh/volume.hpp"

namespace cyh {

bool CrossCheckReport::all_passed() const {
  return hilbert.agree && std::all_of(checks.begin(), checks.end(),
                                      [](const CheckResult& c) { return c.passed; });
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

  // Runs fn; a thrown library error counts as failure with its message.
  template <typename Fn>
  void run(std::string name, Fn&& fn) {
    CheckResult r{std::move(name), false, {}};
    try {
      std::ostringstream detail;
      r.passed = fn(detail);
      r.detail = detail.str();
    } catch (const Error& e) {
      r.detail = std::string("error: ") + e.what();
    }
    out_.push_back(std::move(r));
  }

 private:
  std::vector<CheckResult>& out_;
};

Scalar sign_power(int m) { return Scalar(m % 2 == 0 ? 1 : -1); }

}  // namespace

CrossCheckReport cross_check(const HalfSpaceSpec& spec,
                             const CrossCheckOptions& options) {
  const FaceLattice lattice = build_face_lattice(spec);
  const OracleOptions& oracle = options.hilbert.oracle;
  const int m = spec.dim();
  const std::size_t d = spec.num_facets();
  const auto anchor = spec.anchor();

  CrossCheckReport report;
  report.hilbert = compute_hilbert_report(spec, lattice, options.hilbert);
  Recorder check(report.checks);

  check.run("three-way boundary polynomial", [&](std::ostream& os) {
    os << describe(report.hilbert);
    return report.hilbert.agree;
  });

  // -- face lattice and vertex charts --------------------------------------
  check.run("euler relation", [&](std::ostream& os) {
    os << "sum (-1)^dim = " << lattice.euler_sum();
    return lattice.euler_sum() == 1;
  });
  check.run("integral vertices", [&](std::ostream& os) {
    for (const auto& v : lattice.vertices())
      for (const auto& x : v.point)
        if (!x.is_integer()) {
          os << "fractional coordinate " << x;
          return false;
        }
    return true;
  });
  check.run("unimodular edge basis", [&](std::ostream& os) {
    for (const auto& v : lattice.vertices()) {
      const Integer det = int_det(v.primitive_edges());
      if (abs(Scalar(det)) != Scalar(1)) {
        os << "edge determinant " << det.get_str() << " at "
           << facet_set_string(v.active);
        return false;
      }
    }
    return true;
  });
  check.run("symbolic vertices", [&](std::ostream& os) {
    for (const auto& v : lattice.vertices()) {
      const auto forms = v.symbolic(d);
      for (std::size_t i = 0; i < forms.size(); ++i)
        if (forms[i].evaluate(anchor) != v.point[i]) {
          os << "mismatch at " << facet_set_string(v.active);
          return false;
        }
    }
    return true;
  });
  check.run("dilated vertices", [&](std::ostream&) {
    for (std::int64_t k = 1; k <= 3; ++k) {
      std::vector<Scalar> scaled;
      for (const auto& a : anchor) scaled.push_back(a * Scalar(k));
      const auto charts = enumerate_vertices(spec, scaled);
      if (charts.size() != lattice.vertices().size()) return false;
      for (std::size_t i = 0; i < charts.size(); ++i)
        for (std::size_t c = 0; c < charts[i].point.size(); ++c)
          if (charts[i].point[c] != lattice.vertices()[i].point[c] * Scalar(k))
            return false;
    }
    return true;
  });

  // -- volume ----------------------------------------------------------------
  const VolumePolynomial vol = volume_polynomial(spec, lattice);
  const BoundaryVolumePolynomial bvol = boundary_volume_polynomial(vol);

  check.run("volume homogeneity", [&](std::ostream& os) {
    os << "vol = " << vol.poly.to_string();
    return vol.poly.is_homogeneous(m) && vol.poly.total_degree() == m;
  });
  check.run("triangulation independence", [&](std::ostream&) {
    return volume_polynomial(spec, lattice, ApexRule::greatest).poly == vol.poly;
  });
  check.run("volume oracle agreement", [&](std::ostream& os) {
    const auto needed = static_cast<std::size_t>(
        binomial(static_cast<std::int64_t>(d) + m, static_cast<unsigned>(m)).get_ui());
    const auto samples = chamber_samples(spec, lattice, needed);
    for (const auto& s : samples)
      if (numeric_volume_at(spec, lattice, s) != vol.poly.evaluate(s)) return false;
    os << samples.size() << " samples";
    return true;
  });
  check.run("facet volume identity", [&](std::ostream& os) {
    Scalar direct(0);
    for (std::size_t i = 0; i < d; ++i) {
      const Scalar fv = lattice_face_volume(spec, lattice, FacetSet{1} << i);
      if (bvol.per_facet[i].evaluate(anchor) != fv) {
        os << "facet " << i + 1 << ": derivative "
           << bvol.per_facet[i].evaluate(anchor) << " vs direct " << fv;
        return false;
      }
      direct += fv;
    }
    os << "boundary volume " << direct;
    return bvol.poly.evaluate(anchor) == direct;
  });
  check.run("boundary volume degree", [&](std::ostream&) {
    return bvol.poly.total_degree() == m - 1;
  });

  // -- series ----------------------------------------------------------------
  check.run("series constants", [&](std::ostream& os) {
    constexpr int order = 10;
    const auto ahat = series_coefficients(SeriesName::ahat, order).coefficients;
    const auto inv = series_coefficients(SeriesName::inv_ahat, order).coefficients;
    auto product = multiply_series(ahat, inv, order);
    std::vector<Scalar> one(order + 1, Scalar(0));
    one[0] = Scalar(1);
    const auto td = series_coefficients(SeriesName::td, 11).coefficients;
    for (int j = 3; j <= 11; j += 2)
      if (!td[static_cast<std::size_t>(j)].is_zero()) {
        os << "Td odd coefficient " << j << " nonzero";
        return false;
      }
    return todd_routes_agree(order) && product == one;
  });

  // -- operator formulas against brute force ---------------------------------
  check.run("Todd operator count", [&](std::ostream& os) {
    const auto formula = khovanskii_count(spec, vol);
    const auto counted = count_points(spec, lattice, 1, RegionSpec::full(), oracle);
    os << formula.value << " vs " << counted;
    return formula.value == Scalar(static_cast<std::int64_t>(counted));
  });
  check.run("Ahat operator boundary count", [&](std::ostream& os) {
    const auto formula = boundary_count_formula(spec, vol);
    const auto counted = count_points(spec, lattice, 1, RegionSpec::boundary(), oracle);
    os << formula.value << " vs " << counted;
    return formula.value == Scalar(static_cast<std::int64_t>(counted));
  });

  const EhrhartPoly full = ehrhart_interpolate(spec, lattice, EhrhartKind::full, 0, oracle);
  check.run("full Ehrhart polynomial", [&](std::ostream& os) {
    const auto symbolic = symbolic_ehrhart(spec, vol, EhrhartKind::full);
    os << full.to_string();
    const Scalar zero[] = {Scalar(0)};
    Exponent top{static_cast<std::uint32_t>(m)};
    return symbolic.poly == full.poly && full.poly.evaluate(zero) == Scalar(1) &&
           full.poly.coefficient(top) == vol.poly.evaluate(anchor);
  });
  check.run("boundary Ehrhart at zero", [&](std::ostream& os) {
    const Scalar value = report.hilbert.by_oracle(0);
    os << value;
    return value == Scalar(1) - sign_power(m);
  });

  // -- reciprocity and inclusion-exclusion -------------------------------------
  check.run("Ehrhart reciprocity", [&](std::ostream& os) {
    for (std::int64_t k = 1; k <= options.max_k; ++k) {
      const auto counts = count_report(spec, lattice, k, oracle);
      const Scalar interior = sign_power(m) * full(-k);
      if (interior != Scalar(static_cast<std::int64_t>(counts.interior)) ||
          full(k) - interior != Scalar(static_cast<std::int64_t>(counts.boundary))) {
        os << "k=" << k << ": reciprocity gives " << interior << ", counted "
           << counts.interior;
        return false;
      }
    }
    return true;
  });
  check.run("inclusion-exclusion", [&](std::ostream& os) {
    for (std::int64_t k = 1; k <= options.max_k; ++k) {
      const auto counts = count_report(spec, lattice, k, oracle);
      const auto ie = inclusion_exclusion_count(spec, lattice, k, oracle);
      if (ie != counts.boundary || counts.total - counts.interior != counts.boundary) {
        os << "k=" << k << ": " << ie << " vs " << counts.boundary;
        return false;
      }
    }
    return true;
  });
  check.run("inclusion-exclusion signs", [&](std::ostream&) {
    const auto breakdown = inclusion_exclusion_breakdown(spec, lattice, 1, oracle);
    const auto coeffs = euler_class_coefficients(static_cast<int>(std::min<std::size_t>(d, 12)));
    for (std::size_t l = 0; l < coeffs.size(); ++l)
      if (coeffs[l] != Scalar(breakdown.terms[l].sign)) return false;
    return true;
  });
  check.run("face count monotonicity", [&](std::ostream&) {
    const auto counts = count_report(spec, lattice, 2, oracle);
    for (const auto& [big, nb] : counts.per_face)
      for (const auto& [small, ns] : counts.per_face)
        if ((small & big) == big && ns > nb) return false;
    return true;
  });
  check.run("serial and parallel kernels", [&](std::ostream&) {
    for (std::int64_t k = 1; k <= 3; ++k) {
      const BoundingBox box = dilated_box(lattice, k);
      if (box.size() > oracle.budget) throw BudgetExceededError(box.size(), oracle.budget);
      if (kernels::histogram_serial(spec, box, k) != kernels::histogram_parallel(spec, box, k))
        return false;
    }
    return true;
  });

  return report;
}

}  // namespace cyh
