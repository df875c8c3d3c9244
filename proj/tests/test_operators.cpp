#include "cyh/errors.hpp"
#include "cyh/lattice_oracle.hpp"
#include "cyh/operators.hpp"
#include "cyh/volume.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cyh;
using cyh::test::Gen;
using cyh::test::load;
using cyh::test::q;

namespace {

MultiPoly var(std::size_t nv, std::size_t i) { return MultiPoly::variable(nv, i); }

std::vector<Scalar> coeffs(SeriesName n, int order) {
  return series_coefficients(n, order).coefficients;
}

struct Loaded {
  HalfSpaceSpec spec;
  FaceLattice lattice;
  VolumePolynomial vol;
  explicit Loaded(const std::string& name)
      : spec(load(name)),
        lattice(build_face_lattice(spec)),
        vol(volume_polynomial(spec, lattice)) {}
};

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("coefficient examples") {
    CHECK(coeffs(SeriesName::td, 4) ==
          std::vector<Scalar>{Scalar(1), q(1, 2), q(1, 12), Scalar(0), q(-1, 720)});
    CHECK(coeffs(SeriesName::inv_ahat, 4) ==
          std::vector<Scalar>{Scalar(1), Scalar(0), q(1, 24), Scalar(0), q(1, 1920)});
    CHECK(coeffs(SeriesName::ahat, 4) ==
          std::vector<Scalar>{Scalar(1), Scalar(0), q(-1, 24), Scalar(0), q(7, 5760)});
    CHECK(coeffs(SeriesName::td, 6)[6] == q(1, 30240));
    CHECK(to_string(SeriesName::inv_ahat) == "invAhat");
  }

  TEST_CASE("Bernoulli numbers") {
    const auto b = bernoulli_numbers(12);
    CHECK(b[0] == Scalar(1));
    CHECK(b[1] == q(-1, 2));
    CHECK(b[2] == q(1, 6));
    CHECK(b[4] == q(-1, 30));
    CHECK(b[12] == q(-691, 2730));
    for (int j = 3; j <= 11; j += 2) CHECK(b[static_cast<std::size_t>(j)].is_zero());
  }

  TEST_CASE("series identities") {
    constexpr int order = 12;
    CHECK(todd_routes_agree(order));
    const auto td = coeffs(SeriesName::td, order);
    const auto denom = todd_denominator_series(order);
    auto one = multiply_series(td, denom, order);
    std::vector<Scalar> unit(order + 1, Scalar(0));
    unit[0] = Scalar(1);
    CHECK(one == unit);
    CHECK(invert_series(denom, order) == td);

    const auto ahat = coeffs(SeriesName::ahat, order);
    const auto inv = coeffs(SeriesName::inv_ahat, order);
    CHECK(multiply_series(ahat, inv, order) == unit);
    for (int j = 0; 2 * j <= order; ++j) {
      CHECK(inv[2 * j] == Scalar(1) / Scalar(pow(Scalar(2), 2 * j) *
                                             Scalar(factorial(2 * j + 1))));
      if (2 * j + 1 <= order) {
        CHECK(inv[2 * j + 1].is_zero());
        CHECK(ahat[2 * j + 1].is_zero());
      }
    }
    // Td(x) - x/2 is even
    for (int j = 3; j <= order; j += 2) CHECK(td[static_cast<std::size_t>(j)].is_zero());
  }

  TEST_CASE("inversion requires a unit constant term") {
    const std::vector<Scalar> a{Scalar(0), Scalar(1)};
    CHECK_THROWS(invert_series(a, 3));
  }
}

TEST_SUITE("operator application") {
  TEST_CASE("examples") {
    const auto table = SeriesTable::standard(4);
    const auto s = var(3, 0) + var(3, 1) + var(3, 2);
    const auto p = s * s * q(1, 2);
    const auto applied = apply_operator_product(todd_operator(3, table, 2), p);
    CHECK(applied == p + s * q(3, 2) + MultiPoly::constant(3, Scalar(1)));
    CHECK(apply_operator_product(todd_operator(3, table, 2), MultiPoly(3)).is_zero());
    const auto seg = var(2, 0) + var(2, 1);
    CHECK(apply_operator_product(todd_operator(2, table, 1), seg) ==
          seg + MultiPoly::constant(2, Scalar(1)));
  }

  TEST_CASE("truncation below the degree is rejected") {
    const auto table = SeriesTable::standard(4);
    const auto p = pow(var(2, 0), 3);
    CHECK_THROWS_AS(apply_operator_product(todd_operator(2, table, 2), p), TruncationError);
  }

  TEST_CASE("linearity and per-variable factorisation (random)") {
    Gen g(31);
    const auto table = SeriesTable::standard(6);
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = g.poly(3, 4, 5), b = g.poly(3, 4, 5);
      const auto c = g.rational();
      for (const auto& op : {todd_operator(3, table, 4), boundary_operator(3, table, 4)}) {
        CHECK(apply_operator_product(op, a + b * c) ==
              apply_operator_product(op, a) + apply_operator_product(op, b) * c);
      }
      // the operator on a product of single-variable factors factorises
      const auto x = g.poly(1, 3, 3), y = g.poly(1, 3, 3);
      MultiPoly xe(2), ye(2);
      for (const auto& [e, v] : x.terms()) xe.add_term({e[0], 0}, v);
      for (const auto& [e, v] : y.terms()) ye.add_term({0, e[0]}, v);
      const auto lhs = apply_operator_product(todd_operator(2, table, 6), xe * ye);
      MultiPoly tx(2), ty(2);
      const auto ax = apply_operator_product(todd_operator(1, table, 6), x);
      const auto ay = apply_operator_product(todd_operator(1, table, 6), y);
      for (const auto& [e, v] : ax.terms()) tx.add_term({e[0], 0}, v);
      for (const auto& [e, v] : ay.terms()) ty.add_term({0, e[0]}, v);
      CHECK(lhs == tx * ty);
    }
  }
}

TEST_SUITE("formulas") {
  TEST_CASE("Todd count examples") {
    CHECK(khovanskii_count(Loaded("simplex2").spec, Loaded("simplex2").vol).value == Scalar(3));
    Loaded seg("segment");
    CHECK(khovanskii_count(seg.spec, seg.vol).value == Scalar(2));
    Loaded sq("square");
    CHECK(khovanskii_count(sq.spec, sq.vol).value == Scalar(4));
  }

  TEST_CASE("boundary count examples") {
    for (const auto& [name, expected] :
         std::vector<std::pair<std::string, std::int64_t>>{
             {"simplex2", 3}, {"square", 4}, {"simplex3", 4}}) {
      CAPTURE(name);
      Loaded p(name);
      CHECK(boundary_count_formula(p.spec, p.vol).value == Scalar(expected));
    }
  }

  TEST_CASE("symbolic Ehrhart examples") {
    Loaded tri("simplex2");
    CHECK(symbolic_ehrhart(tri.spec, tri.vol, EhrhartKind::full).to_string() ==
          "(1/2)k^2 + (3/2)k + 1");
    Loaded tet("simplex3");
    CHECK(symbolic_ehrhart(tet.spec, tet.vol, EhrhartKind::boundary).to_string() == "2k^2 + 2");
    Loaded s4("simplex4");
    CHECK(symbolic_ehrhart(s4.spec, s4.vol, EhrhartKind::boundary).to_string() ==
          "(5/6)k^3 + (25/6)k");
    CHECK_THROWS(symbolic_ehrhart(s4.spec, s4.vol, EhrhartKind::interior));
  }

  TEST_CASE("formulas match brute force on the corpus") {
    for (const auto& name : test::corpus_names()) {
      CAPTURE(name);
      Loaded p(name);
      const auto full = count_points(p.spec, p.lattice, 1, RegionSpec::full());
      const auto bd = count_points(p.spec, p.lattice, 1, RegionSpec::boundary());
      CHECK(khovanskii_count(p.spec, p.vol).value == Scalar(static_cast<std::int64_t>(full)));
      CHECK(boundary_count_formula(p.spec, p.vol).value ==
            Scalar(static_cast<std::int64_t>(bd)));
      CHECK(symbolic_ehrhart(p.spec, p.vol, EhrhartKind::full).poly ==
            ehrhart_interpolate(p.spec, p.lattice, EhrhartKind::full).poly);
    }
  }

  TEST_CASE("a corrupted Todd constant is caught") {
    // products of linear factors (boxes) never see the second coefficient
    Loaded tet("simplex3");
    auto table = SeriesTable::standard(8);
    table.td.coefficients[2] = q(1, 10);
    const auto full = count_points(tet.spec, tet.lattice, 1, RegionSpec::full());
    bool caught = false;
    try {
      caught = khovanskii_count(tet.spec, tet.vol, table).value !=
               Scalar(static_cast<std::int64_t>(full));
    } catch (const FormulaViolationError&) {
      caught = true;
    }
    CHECK(caught);
  }
}
