#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "hc/bounds.hpp"
#include "hc/hardcore.hpp"
#include "hc/lp.hpp"

using namespace hc;

namespace {

const std::vector<Rat> kGrid = {
    Rat(1, 100), Rat(1, 10), Rat(1, 8), Rat(1, 4), Rat(1, 3), Rat(1, 2),
    Rat(2, 3),   Rat(1),     Rat(3, 2), Rat(2),    Rat(5, 2), Rat(3),
    Rat(4),      Rat(5),     Rat(7),    Rat(10),   Rat(20),   Rat(50),
    Rat(100),    Rat(1000)};

std::vector<Rat> tf_primal(const TfBound& b) {
  std::vector<Rat> y(b.d + 1, Rat(0));
  y[0] = b.y0;
  y[b.branch] += b.yi;
  y[b.branch + 1] += b.yi1;
  return y;
}

}  // namespace

TEST_CASE("branch index") {
  CHECK(branch_index(3, Rat(1)) == 1);
  CHECK(branch_index(3, Rat(1, 4)) == 2);
  CHECK(branch_index(4, Rat(1)) == 1);  // boundary lambda = m_1 joins branch 1
  CHECK(branch_index(3, Rat(1, 1000)) == 2);
  CHECK(branch_index(8, Rat(1, 1000000)) == 7);  // tiny lambda: branch d-1
  CHECK(branch_index(8, Rat(1000)) == 1);
  CHECK(branch_index(2, Rat(1, 100)) == 1);  // d=2 has only branch 1
  CHECK_THROWS_AS(branch_index(1, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(branch_index(3, Rat(0)), std::invalid_argument);
}

TEST_CASE("branch index satisfies the defining inequalities") {
  for (int d : {2, 3, 4, 5, 6, 7, 8})
    for (const Rat& l : kGrid) {
      int i = branch_index(d, l);
      CHECK(i >= 1);
      CHECK(i <= d - 1);
      CHECK((i + 1) * rat_pow(1 + l, i) >= d);
      if (i > 1) CHECK(i * rat_pow(1 + l, i - 1) < d);
    }
}

TEST_CASE("breakpoints decrease in i") {
  CHECK(breakpoint(3, 0) == std::numeric_limits<double>::infinity());
  CHECK(breakpoint(3, 1) == doctest::Approx(0.5));
  CHECK(breakpoint(3, 2) == doctest::Approx(0.0));  // (3/3)^(1/2) - 1
  CHECK(breakpoint(6, 2) == doctest::Approx(std::sqrt(2.0) - 1));
  for (int d = 3; d <= 10; ++d)
    for (int i = 1; i + 1 < d; ++i) CHECK(breakpoint(d, i) > breakpoint(d, i + 1));
  CHECK_THROWS_AS(breakpoint(3, 3), std::invalid_argument);
}

TEST_CASE("tf_bound at d=3, lambda=1") {
  TfBound b = tf_bound(3, Rat(1));
  CHECK(b.branch == 1);
  CHECK(b.y0 == Rat(3, 13));
  CHECK(b.yi == Rat(2, 13));
  CHECK(b.yi1 == Rat(8, 13));
  CHECK(b.dual_s == Rat(18, 13));
  CHECK(b.dual_m == Rat(8, 13));
  CHECK(b.dual_a == Rat(6, 13));
  CHECK(b.objective() == Rat(18, 13));
  CHECK(tf_alpha_bound(3, Rat(1)) == Rat(3, 13));
}

TEST_CASE("tf_bound at d=3, lambda=1/4 (branch 2)") {
  TfBound b = tf_bound(3, Rat(1, 4));
  CHECK(b.branch == 2);
  CHECK(b.y0 == Rat(28, 213));
  CHECK(b.yi == rat_parse("135/213"));
  CHECK(b.yi1 == Rat(50, 213));
}

TEST_CASE("tf_bound invariants and degenerate breakpoint") {
  for (int d : {2, 3, 4, 5, 6, 7, 8})
    for (const Rat& l : kGrid) {
      TfBound b = tf_bound(d, l);
      CHECK(b.y0 + b.yi + b.yi1 == 1);
      CHECK(b.y0 > 0);
      CHECK(b.yi >= 0);
      CHECK(b.yi1 >= 0);
      CHECK(b.objective() == b.dual_s);
      CHECK(b.dual_m > 0);
      CHECK(b.dual_a >= 0);
    }
  TfBound boundary = tf_bound(4, Rat(1));
  CHECK(boundary.yi == 0);
  CHECK(boundary.y0 == Rat(1, 5));
  CHECK(boundary.yi1 == Rat(4, 5));
  CHECK(boundary.objective() == Rat(8, 5));
}

TEST_CASE("tf_bound certifies the LP optimum via complementary slackness") {
  for (int d : {2, 3, 4, 5, 6, 7, 8})
    for (const Rat& l : kGrid) {
      TfBound b = tf_bound(d, l);
      LpProblem p = build_lp_trianglefree(d, l);
      SlacknessReport rep = check_complementary_slackness(
          p, tf_primal(b), {b.dual_s, b.dual_m, b.dual_a});
      CHECK(rep.violations() == 0);
      CHECK(rep.primal_objective == b.objective());
      CHECK(rep.dual_objective == b.objective());
      CHECK(simplex_solve(p).objective == b.objective());
    }
}

TEST_CASE("t3 polynomial") {
  Polynomial expect(std::vector<Int>{Int(1), Int(10), Int(36), Int(60), Int(50),
                                     Int(24), Int(7), Int(1)});
  CHECK(t3_polynomial() == expect);
  CHECK(t3_polynomial() == independence_polynomial(t3_tree()));
  CHECK(t3_polynomial().eval(Rat(1)) == 189);
}

TEST_CASE("cubic_bound at lambda=1") {
  CubicBound b = cubic_bound(Rat(1));
  CHECK(b.big_lambda == Rat(8, 189));
  CHECK(b.y0 == Rat(571, 2457));
  CHECK(b.y1 == rat_parse("450/2457"));
  CHECK(b.y2 == rat_parse("1332/2457"));
  CHECK(b.y3 == rat_parse("104/2457"));
  CHECK(b.dual_s == Rat(18, 13));
  CHECK(b.dual_m == Rat(8, 13));
  CHECK(b.dual_a == Rat(6, 13));
  CHECK(b.dual_b == Rat(3, 13));
  CHECK(b.objective() == rat_parse("3426/2457"));
}

TEST_CASE("cubic_bound certifies the cubic LP with everything tight") {
  for (const Rat& l : kGrid) {
    CubicBound b = cubic_bound(l);
    CHECK(b.y0 + b.y1 + b.y2 + b.y3 == 1);
    CHECK(b.y0 > 0);
    CHECK(b.y1 >= 0);
    CHECK(b.y2 >= 0);
    CHECK(b.y3 == b.big_lambda);

    LpProblem p = build_lp_cubic(l, t3_polynomial());
    SlacknessReport rep = check_complementary_slackness(
        p, {b.y0, b.y1, b.y2, b.y3}, {b.dual_s, b.dual_m, b.dual_a, b.dual_b});
    CHECK(rep.violations() == 0);
    for (const auto& pair : rep.variable_pairs) CHECK(pair.tight);
    for (const auto& pair : rep.row_pairs) CHECK(pair.tight);
    CHECK(simplex_solve(p).objective == b.objective());
  }
}

TEST_CASE("cubic bound dominates the triangle-free bound at d=3") {
  for (const Rat& l : kGrid) {
    CHECK(cubic_bound(l).y0 >= tf_bound(3, l).y0);
    CHECK(cubic_bound(l).objective() >= tf_bound(3, l).objective());
  }
  CHECK(cubic_bound(Rat(1)).y0 > tf_bound(3, Rat(1)).y0);
}

TEST_CASE("large-lambda limit of the alpha bound is 2/(d+3)") {
  for (int d : {3, 4, 5}) {
    Rat limit = Rat(2) / (d + 3);
    Rat near = tf_bound(d, rat_pow(Rat(10), 6)).y0;
    Rat far = tf_bound(d, rat_pow(Rat(10), 3)).y0;
    CHECK(abs(near - limit) < Rat(1, 10000));
    CHECK(abs(near - limit) < abs(far - limit));
    CHECK(near < limit);
  }
}

TEST_CASE("reference occupancies") {
  for (int d : {1, 2, 3, 4})
    for (const Rat& l : {Rat(1, 4), Rat(1), Rat(4)}) {
      CHECK(reference_occupancy(ReferenceKind::Clique, d, l) ==
            occupancy_fraction(complete_graph(d + 1), l));
      CHECK(reference_occupancy(ReferenceKind::Biclique, d, l) ==
            occupancy_fraction(biclique_graph(d), l));
    }
  CHECK(reference_occupancy(ReferenceKind::Biclique, 3, Rat(1)) == Rat(4, 15));
  CHECK(reference_occupancy(ReferenceKind::Clique, 3, Rat(1)) == Rat(1, 5));
  CHECK_THROWS_AS(reference_occupancy(ReferenceKind::Clique, 0, Rat(1)),
                  std::invalid_argument);
}

TEST_CASE("shearer recurrence") {
  CHECK(shearer(0) == 1);
  CHECK(shearer(1) == Rat(1, 2));
  CHECK(shearer(2) == Rat(2, 5));
  CHECK(shearer(3) == Rat(17, 50));
  CHECK(shearer(4) == Rat(127, 425));
  // f(d) ~ log d / d: decreasing and positive.
  Rat prev = shearer(0);
  for (int d = 1; d <= 20; ++d) {
    Rat cur = shearer(d);
    CHECK(cur > 0);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK_THROWS_AS(shearer(-1), std::invalid_argument);
}

TEST_CASE("lambert W") {
  CHECK(lambert_w(0) == 0.0);
  CHECK(lambert_w(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lambert_w(1.0) == doctest::Approx(0.5671432904097838).epsilon(1e-12));
  for (double x : {0.1, 0.5, 2.0, 10.0, 1e6}) {
    double w = lambert_w(x);
    CHECK(w * std::exp(w) == doctest::Approx(x).epsilon(1e-11));
  }
  CHECK_THROWS_AS(lambert_w(-0.5), std::domain_error);
}

TEST_CASE("log partition bounds by quadrature") {
  double cubic = log_partition_bound(BoundModel::Cubic, 3, 1.0, 1e-10);
  CHECK(std::exp(cubic) == doctest::Approx(1.5383390790521962).epsilon(1e-9));
  double tfree = log_partition_bound(BoundModel::TriangleFree, 3, 1.0, 1e-10);
  CHECK(std::exp(tfree) == doctest::Approx(1.5353974195797482).epsilon(1e-9));
  CHECK(cubic > tfree);
  // Below the conjectured Petersen value 76^{1/10}.
  CHECK(std::exp(cubic) < std::pow(76.0, 0.1));
  // Deterministic.
  CHECK(log_partition_bound(BoundModel::Cubic, 3, 1.0, 1e-10) == cubic);
  // Coarser tolerance still lands nearby.
  CHECK(std::exp(log_partition_bound(BoundModel::Cubic, 3, 1.0, 1e-6)) ==
        doctest::Approx(1.5383390790521962).epsilon(1e-5));

  CHECK_THROWS_AS(log_partition_bound(BoundModel::Cubic, 4, 1.0, 1e-10),
                  std::invalid_argument);
  CHECK_THROWS_AS(log_partition_bound(BoundModel::TriangleFree, 1, 1.0, 1e-10),
                  std::invalid_argument);
  CHECK_THROWS_AS(log_partition_bound(BoundModel::Cubic, 3, 0.0, 1e-10),
                  std::invalid_argument);
  CHECK_THROWS_AS(log_partition_bound(BoundModel::Cubic, 3, 1.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("conjecture reference") {
  Polynomial p52 = independence_polynomial(generalized_petersen(5, 2));
  Polynomial p72 = independence_polynomial(generalized_petersen(7, 2));
  CHECK(p72.coeffs() == std::vector<Int>{Int(1), Int(14), Int(70), Int(154),
                                         Int(147), Int(49)});
  CHECK(p72.eval_int(Int(1)) == 435);
  for (const Rat& l : {Rat(1, 4), Rat(1), Rat(4)}) {
    double a = std::pow(rat_d(p52.eval(l)), 0.1);
    double b = std::pow(rat_d(p72.eval(l)), 1.0 / 14);
    CHECK(conjecture_reference(l) == std::min(a, b));
  }
  // At lambda = 1 the Petersen arm wins: 76^(1/10) < 435^(1/14).
  CHECK(conjecture_reference(Rat(1)) ==
        doctest::Approx(std::pow(76.0, 0.1)).epsilon(1e-14));
  CHECK(conjecture_reference(Rat(1)) == doctest::Approx(1.5419893).epsilon(1e-7));
  // At large lambda the GP(7,2) arm takes over (degree 5 over 14 vertices
  // grows slower than degree 4 over 10).
  CHECK(conjecture_reference(Rat(1000)) ==
        doctest::Approx(std::pow(rat_d(p72.eval(Rat(1000))), 1.0 / 14)));
  CHECK_THROWS_AS(conjecture_reference(Rat(0)), std::invalid_argument);
}
