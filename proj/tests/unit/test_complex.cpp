#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "fcw/complex.hpp"
#include "fcw/error.hpp"
#include "fcw/invariants.hpp"
#include "random_complex.hpp"
#include "test_helpers.hpp"

using namespace fcw;
using fcw::testing::q;

namespace {

const Exponent kNegInf = Exponent::neg_inf();

std::vector<ViolationKind> kinds(const FilteredComplex& x) {
  std::vector<ViolationKind> out;
  for (const auto& v : validate(x)) out.push_back(v.kind);
  return out;
}

bool has(const std::vector<ViolationKind>& ks, ViolationKind k) {
  return std::find(ks.begin(), ks.end(), k) != ks.end();
}

std::vector<std::string> ids(const FilteredComplex& x) {
  std::vector<std::string> out;
  for (const auto& c : x.cells()) out.push_back(c.id);
  std::sort(out.begin(), out.end());
  return out;
}

FilteredComplex via(const FilteredComplex& x, const std::map<std::string, std::string>& table) {
  return x.renamed([&](const std::string& id) { return table.at(id); });
}

}  // namespace

TEST_CASE("validate accepts the torus and eternal 0-cells") {
  CHECK(validate(torus(q(1), q(2), q(4))).empty());
  FilteredComplex two_points("pt", {{"pt", 0, kNegInf, {}}, {"v", 0, kNegInf, {}}});
  CHECK(validate(two_points).empty());
}

TEST_CASE("validate reports each kind of violation with the cell id") {
  SUBCASE("weight monotonicity") {
    FilteredComplex x("pt", {{"pt", 0, kNegInf, {}}, {"m", 1, q(2), {}}, {"d", 2, q(1), {"m"}}});
    auto v = validate(x);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == ViolationKind::WeightMonotonicityViolation);
    CHECK(v[0].cell == "d");
  }
  SUBCASE("unresolved boundary") {
    FilteredComplex x("pt", {{"pt", 0, kNegInf, {}}, {"d", 2, q(1), {"ghost"}}});
    CHECK(kinds(x) == std::vector{ViolationKind::UnresolvedBoundary});
  }
  SUBCASE("boundary dimension") {
    FilteredComplex x("pt", {{"pt", 0, kNegInf, {}}, {"d", 2, q(1), {"pt"}}});
    CHECK(kinds(x) == std::vector{ViolationKind::BoundaryDimensionMismatch});
  }
  SUBCASE("boundary of boundary") {
    FilteredComplex x("pt", {{"pt", 0, kNegInf, {}},
                             {"v", 0, q(0), {}},
                             {"e", 1, q(1), {"pt", "v"}},
                             {"d", 2, q(2), {"e"}}});
    CHECK(kinds(x) == std::vector{ViolationKind::BoundaryNotClosed});
  }
  SUBCASE("basepoint") {
    CHECK(kinds(FilteredComplex("nope", {{"pt", 0, kNegInf, {}}})) == std::vector{ViolationKind::MissingBasepoint});
    CHECK(kinds(FilteredComplex("pt", {{"pt", 0, q(0), {}}})) ==
          std::vector{ViolationKind::BasepointNotEternalPoint});
    CHECK(kinds(FilteredComplex("pt", {{"pt", 1, kNegInf, {}}})) ==
          std::vector{ViolationKind::BasepointNotEternalPoint});
  }
  SUBCASE("ids, dimensions and weights") {
    auto ks = kinds(FilteredComplex("pt", {{"pt", 0, kNegInf, {}},
                                           {"a b", 1, q(1), {}},
                                           {"x", 1, q(1), {}},
                                           {"x", 1, q(2), {}},
                                           {"n", -1, q(1), {}},
                                           {"w", 1, Exponent::pos_inf(), {}}}));
    CHECK(has(ks, ViolationKind::InvalidCellId));
    CHECK(has(ks, ViolationKind::DuplicateCellId));
    CHECK(has(ks, ViolationKind::NegativeDimension));
    CHECK(has(ks, ViolationKind::InfiniteWeight));
  }
}

TEST_CASE("boundaries are reduced mod 2 on construction") {
  FilteredComplex x("pt", {{"pt", 0, kNegInf, {}}, {"e", 1, q(1), {"pt", "pt"}}});
  CHECK(x.find("e")->boundary.empty());
}

TEST_CASE("sublevel") {
  auto t = torus(q(1), q(2), q(4));
  CHECK(ids(sublevel(t, q(3, 2))) == std::vector<std::string>{"a", "pt"});
  CHECK(ids(sublevel(t, q(1))) == std::vector<std::string>{"a", "pt"});
  CHECK(ids(sublevel(t, kNegInf)) == std::vector<std::string>{"pt"});
  CHECK(sublevel(t, q(4)) == t);
  CHECK(sublevel(t, q(10)) == t);
}

TEST_CASE("spectrum") {
  CHECK(spectrum(torus(q(1), q(2), q(4))) == std::vector<Rational>{q(1), q(2), q(4)});
  CHECK(spectrum(sphere(3, kNegInf)).empty());
  CHECK(spectrum(sphere(2, q(5, 3))) == std::vector<Rational>{q(5, 3)});
}

TEST_CASE("shift") {
  CHECK(shift(sphere(2, q(0)), q(3, 2)) == sphere(2, q(3, 2)));
  auto t = torus(q(1), q(2), q(4));
  CHECK(shift(t, 0) == t);
  CHECK(shift(shift(t, q(7, 3)), q(-7, 3)) == t);
  CHECK(shift(sphere(1, kNegInf), 5) == sphere(1, kNegInf));
}

TEST_CASE("cutoff") {
  CHECK(cutoff(sphere(3, kNegInf), 0) == sphere(3, q(0)));
  auto t = torus(q(1), q(2), q(4));
  CHECK(cutoff(t, q(1, 2)) == t);
  CHECK(cutoff(t, q(3)) == torus(q(3), q(3), q(4)));
  CHECK(cutoff(t, q(3)).find("pt")->weight == kNegInf);
}

TEST_CASE("wedge") {
  auto w = wedge(sphere(1, q(1)), sphere(1, q(2)));
  CHECK(validate(w).empty());
  CHECK(w.basepoint() == "pt");
  REQUIRE(w.size() == 3);
  CHECK(w.find("l.e")->weight == Exponent(q(1)));
  CHECK(w.find("r.e")->weight == Exponent(q(2)));
  CHECK(w.find("l.e")->dim == 1);

  auto t = torus(q(1), q(2), q(4));
  CHECK(wedge(t, point()) == via(t, {{"pt", "pt"}, {"a", "l.a"}, {"b", "l.b"}, {"f", "l.f"}}));

  FilteredComplex interval("v0", {{"v0", 0, kNegInf, {}}, {"v1", 0, q(0), {}}, {"e", 1, q(1), {"v0", "v1"}}});
  auto wi = wedge(point(), interval);
  CHECK(wi.find("r.e")->boundary == std::vector<std::string>{"pt", "r.v1"});
}

TEST_CASE("product") {
  auto x = torus(q(1), q(2), q(4));
  auto y = sphere(2, q(1, 2));
  auto naive = product(x, y, ProductVariant::naive);
  auto filtered = product(x, y, ProductVariant::filtered);
  CHECK(naive.size() == x.size() * y.size());
  CHECK(naive.basepoint() == "(pt*pt)");
  CHECK(filtered.find("(a*pt)")->weight == kNegInf);
  CHECK(filtered.find("(pt*e)")->weight == kNegInf);
  CHECK(filtered.find("(f*e)")->weight == Exponent(q(9, 2)));
  CHECK(naive.find("(f*e)")->weight == Exponent(q(4)));
  CHECK(naive.find("(a*pt)")->weight == Exponent(q(1)));
  CHECK(filtered.find("(f*e)")->dim == 4);

  std::map<std::string, std::string> table;
  for (const auto& c : y.cells()) table[c.id] = "(pt*" + c.id + ")";
  CHECK(product(point(), y, ProductVariant::naive) == via(y, table));
}

TEST_CASE("product boundary follows the Leibniz rule mod 2") {
  FilteredComplex interval("v0", {{"v0", 0, kNegInf, {}}, {"v1", 0, q(0), {}}, {"e", 1, q(1), {"v0", "v1"}}});
  auto square = product(interval, interval, ProductVariant::filtered);
  CHECK(validate(square).empty());
  CHECK(square.find("(e*e)")->boundary ==
        std::vector<std::string>{"(e*v0)", "(e*v1)", "(v0*e)", "(v1*e)"});
  CHECK(square.find("(e*e)")->weight == Exponent(q(2)));
  CHECK(square.find("(e*v0)")->weight == kNegInf);
}

TEST_CASE("product rejects ambiguous pair ids") {
  FilteredComplex x("pt", {{"pt", 0, kNegInf, {}}, {"a*b", 0, q(0), {}}, {"a", 0, q(0), {}}});
  FilteredComplex y("pt", {{"pt", 0, kNegInf, {}}, {"b*c", 0, q(0), {}}, {"c", 0, q(0), {}}});
  // (a*b*c) arises from (a*b, c) and (a, b*c)
  CHECK_THROWS_AS(product(x, y, ProductVariant::naive), IdCollision);
}

TEST_CASE("smash") {
  auto s = smash(sphere(2, q(1, 2)), sphere(3, q(5, 4)), ProductVariant::filtered);
  CHECK(s == via(sphere(5, q(7, 4)), {{"pt", "pt"}, {"e", "(e*e)"}}));

  FilteredComplex interval("v0", {{"v0", 0, kNegInf, {}}, {"v1", 0, q(0), {}}, {"e", 1, q(1), {"v0", "v1"}}});
  auto sm = smash(interval, interval, ProductVariant::naive);
  CHECK(validate(sm).empty());
  CHECK(sm.find("(e*e)")->boundary == std::vector<std::string>{"(e*v1)", "(v1*e)"});
  CHECK(sm.find("(e*v1)")->boundary == std::vector<std::string>{"(v1*v1)"});
  CHECK(sm.find("(e*e)")->weight == Exponent(q(1)));
}

TEST_CASE("suspend") {
  CHECK(suspend(sphere(2, q(3))) == sphere(3, q(3)));
  CHECK(suspend(point()) == point());
  FilteredComplex interval("v0", {{"v0", 0, kNegInf, {}}, {"v1", 0, q(0), {}}, {"e", 1, q(1), {"v0", "v1"}}});
  auto s = suspend(interval);
  CHECK(s.find("e")->dim == 2);
  CHECK(s.find("e")->boundary == std::vector<std::string>{"v1"});
}

TEST_CASE("sphere and point") {
  auto s = sphere(2, q(1));
  REQUIRE(s.size() == 2);
  CHECK(s.find("e")->dim == 2);
  CHECK(s.find("e")->weight == Exponent(q(1)));
  CHECK(s.find("e")->boundary.empty());
  CHECK(sphere(0, q(0)).find("e")->dim == 0);
  CHECK(sphere(4, kNegInf).find("e")->weight == kNegInf);
  CHECK(validate(point()).empty());
}

TEST_CASE("euler_char_sublevel") {
  auto t = torus(q(1), q(2), q(4));
  CHECK(euler_char_sublevel(t, q(4)) == 0);
  CHECK(euler_char_sublevel(t, kNegInf) == 1);
  auto s = sphere(2, q(1));
  CHECK(euler_char_sublevel(s, q(1, 2)) == 1);
  CHECK(euler_char_sublevel(s, q(1)) == 2);
  CHECK(euler_char_sublevel(s, q(3)) == 2);
}

TEST_CASE("random generator produces valid complexes") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    auto x = fcw::testing::random_complex(rng);
    CHECK(validate(x).empty());
    CHECK(x.size() <= 12);
  }
}

TEST_CASE("construction properties on random complexes") {
  std::mt19937_64 rng(42);
  fcw::testing::ComplexShape small;
  small.max_cells = 7;
  for (int trial = 0; trial < 150; ++trial) {
    CAPTURE(trial);
    auto x = fcw::testing::random_complex(rng, small);
    auto y = fcw::testing::random_complex(rng, small);
    const Rational a = fcw::testing::random_rational(rng, -8, 8, 3);

    // closure
    CHECK(validate(wedge(x, y)).empty());
    CHECK(validate(product(x, y, ProductVariant::naive)).empty());
    CHECK(validate(product(x, y, ProductVariant::filtered)).empty());
    CHECK(validate(smash(x, y, ProductVariant::naive)).empty());
    CHECK(validate(smash(x, y, ProductVariant::filtered)).empty());
    CHECK(validate(suspend(x)).empty());
    CHECK(validate(shift(x, a)).empty());
    CHECK(validate(cutoff(x, a)).empty());
    CHECK(validate(sublevel(x, Exponent(a))).empty());

    // sublevel monotonicity
    const Exponent r(a);
    const Exponent s(Rational(a + fcw::testing::random_rational(rng, 0, 8, 2)));
    auto small_ids = ids(sublevel(x, r));
    auto big_ids = ids(sublevel(x, s));
    CHECK(std::includes(big_ids.begin(), big_ids.end(), small_ids.begin(), small_ids.end()));

    // weight rules, cell by cell
    auto naive = product(x, y, ProductVariant::naive);
    auto filtered = product(x, y, ProductVariant::filtered);
    for (const auto& cx : x.cells()) {
      for (const auto& cy : y.cells()) {
        const std::string id = "(" + cx.id + "*" + cy.id + ")";
        REQUIRE(naive.find(id) != nullptr);
        CHECK(naive.find(id)->weight == std::max(cx.weight, cy.weight));
        CHECK(naive.find(id)->dim == cx.dim + cy.dim);
        Exponent sum = (cx.weight.is_neg_inf() || cy.weight.is_neg_inf())
                           ? kNegInf
                           : Exponent(Rational(cx.weight.value() + cy.weight.value()));
        CHECK(filtered.find(id)->weight == sum);
      }
    }

    // smash commutes with shifting
    CHECK(smash(shift(x, a), y, ProductVariant::filtered) == shift(smash(x, y, ProductVariant::filtered), a));

    // suspension agrees with smashing by the level-0 circle
    std::map<std::string, std::string> table{{"pt", x.basepoint()}};
    for (const auto& c : x.cells()) table["(e*" + c.id + ")"] = c.id;
    CHECK(via(smash(sphere(1, q(0)), x, ProductVariant::filtered), table) == suspend(x));

    // smash distributes over the wedge
    auto lhs = smash(x, wedge(y, x), ProductVariant::filtered);
    auto rhs = wedge(smash(x, y, ProductVariant::filtered), smash(x, x, ProductVariant::filtered));
    std::map<std::string, std::string> dist{{"pt", "pt"}};
    for (const auto& c : x.cells()) {
      for (const auto& d : y.cells()) dist["(" + c.id + "*l." + d.id + ")"] = "l.(" + c.id + "*" + d.id + ")";
      for (const auto& d : x.cells()) dist["(" + c.id + "*r." + d.id + ")"] = "r.(" + c.id + "*" + d.id + ")";
    }
    CHECK(via(lhs, dist) == rhs);

    // shift round trip
    CHECK(shift(shift(x, a), -a) == x);
  }
}

TEST_CASE("unreduced Euler characteristic matches the truncated Euler polynomial") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = fcw::testing::random_complex(rng);
    std::vector<Exponent> levels{kNegInf};
    for (const auto& r : spectrum(x)) levels.emplace_back(r);
    levels.emplace_back(fcw::testing::random_rational(rng, -4, 12, 5));
    for (const auto& r : levels) {
      CHECK(Rational(euler_char_sublevel(x, r) - euler_char_sublevel(x, kNegInf)) ==
            eval_at_one(truncate_leq(euler_polynomial(x), r)));
    }
  }
}
