#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "opinion/model.hpp"
#include "opinion/rng.hpp"
#include "opinion/stats.hpp"

using namespace opinion;

namespace {

double sorted_median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

double two_pass_sd(const std::vector<double>& v) {
  long double mean = 0;
  for (double x : v) mean += x;
  mean /= v.size();
  long double ss = 0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return static_cast<double>(std::sqrt(ss / v.size()));
}

std::vector<TickRecord> records_from(const std::vector<double>& medians,
                                     const std::vector<double>& sds) {
  std::vector<TickRecord> out(medians.size());
  for (std::size_t i = 0; i < medians.size(); ++i) {
    out[i].tick = i + 1;
    out[i].median_belief = medians[i];
    out[i].law = medians[i];
    out[i].belief_sd = sds[i];
  }
  return out;
}

double trapezoid(const DensityEstimate& d) {
  double sum = 0.0;
  for (std::size_t i = 1; i < d.grid.size(); ++i) {
    sum += 0.5 * (d.density[i] + d.density[i - 1]) * (d.grid[i] - d.grid[i - 1]);
  }
  return sum;
}

// Exhaustive pairwise majority over grid points 0..10 with voters preferring
// the nearer alternative. Returns -1 if no Condorcet winner exists.
int condorcet_winner(const std::vector<int>& ideals) {
  for (int x = 0; x <= 10; ++x) {
    bool beats_all = true;
    for (int y = 0; y <= 10 && beats_all; ++y) {
      if (x == y) continue;
      int for_x = 0, for_y = 0;
      for (int v : ideals) {
        const int dx = std::abs(x - v), dy = std::abs(y - v);
        for_x += dx < dy;
        for_y += dy < dx;
      }
      beats_all = for_x > for_y;
    }
    if (beats_all) return x;
  }
  return -1;
}

}  // namespace

TEST_CASE("median and standard deviation examples") {
  const std::vector<double> v{0, 0, 0, 1};
  CHECK(median(v) == 0.0);
  CHECK(std_dev(v) == doctest::Approx(std::sqrt(3.0 / 16.0)).epsilon(1e-15));
  CHECK(std_dev(v) == doctest::Approx(0.4330).epsilon(1e-4));
  CHECK(std_dev(std::vector<double>(7, 0.3)) == doctest::Approx(0.0));
  CHECK(median(std::vector<double>{0, 1}) == 0.5);
  CHECK_THROWS_AS(median(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(std_dev(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("median and std agree with sort-based references") {
  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 60);
    std::vector<double> v(n);
    for (double& x : v) x = std::round(uniform_unit(rng) * 10) / 10;
    CHECK(median(v) == sorted_median(v));
    CHECK(std_dev(v) == doctest::Approx(two_pass_sd(v)).epsilon(1e-12));
  }
}

TEST_CASE("steady summary") {
  const auto zeros = records_from(std::vector<double>(10, 0.0), std::vector<double>(10, 0.2));
  CHECK(steady_summary(zeros, {1, 10}).median == 0.0);
  CHECK(steady_summary(zeros, {1, 10}).sd == doctest::Approx(0.2));

  const auto ramp = records_from({0.1, 0.2, 0.3, 0.4}, {0.5, 0.6, 0.7, 0.8});
  CHECK(steady_summary(ramp, {3, 3}).median == 0.3);
  CHECK(steady_summary(ramp, {3, 3}).sd == 0.7);

  const auto alternating = records_from({0.2, 0.4, 0.2, 0.4, 0.2, 0.4}, std::vector<double>(6, 0));
  CHECK(steady_summary(alternating, {3, 6}).median == doctest::Approx(0.3).epsilon(1e-15));

  CHECK_THROWS_AS(steady_summary(ramp, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(steady_summary(ramp, {3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(steady_summary(ramp, {2, 5}), std::invalid_argument);
}

TEST_CASE("default steady window is the last tenth") {
  CHECK(default_window(5000) == TickWindow{4501, 5000});
  CHECK(default_window(50000) == TickWindow{45001, 50000});
  CHECK(default_window(5) == TickWindow{5, 5});
}

TEST_CASE("cross-run quantiles") {
  const std::vector<std::vector<double>> single{{0.1, 0.5, 0.7}};
  const std::vector<double> qs{0.0, 0.3, 1.0};
  for (const auto& s : cross_run_quantiles(single, qs)) CHECK(s == single[0]);

  const std::vector<std::vector<double>> three{{0.1, 0.1}, {0.2, 0.2}, {0.9, 0.9}};
  const std::vector<double> mid{0.5};
  CHECK(cross_run_quantiles(three, mid)[0] == std::vector<double>{0.2, 0.2});
  const std::vector<double> ends{0.0, 1.0};
  const auto e = cross_run_quantiles(three, ends);
  CHECK(e[0][0] == 0.1);
  CHECK(e[1][1] == 0.9);
  // Linear interpolation: q = 0.75 sits halfway between 0.2 and 0.9.
  const std::vector<double> q75{0.75};
  CHECK(cross_run_quantiles(three, q75)[0][0] == doctest::Approx(0.55));

  const std::vector<std::vector<double>> ragged{{0.1}, {0.2, 0.3}};
  CHECK_THROWS_AS(cross_run_quantiles(ragged, mid), std::invalid_argument);
  const std::vector<double> bad{1.5};
  CHECK_THROWS_AS(cross_run_quantiles(three, bad), std::invalid_argument);
}

TEST_CASE("cross-run quantiles are monotone in q") {
  Rng rng(3);
  std::vector<std::vector<double>> runs(17, std::vector<double>(40));
  for (auto& r : runs)
    for (double& x : r) x = uniform_unit(rng);
  std::vector<double> qs;
  for (int i = 0; i <= 20; ++i) qs.push_back(i / 20.0);
  const auto out = cross_run_quantiles(runs, qs);
  for (std::size_t k = 1; k < qs.size(); ++k)
    for (std::size_t t = 0; t < 40; ++t) CHECK(out[k][t] >= out[k - 1][t]);
}

TEST_CASE("kde of a degenerate sample peaks at its value with the floor bandwidth") {
  const DensityEstimate d = kde(std::vector<double>(100, 0.5));
  CHECK(d.bandwidth == kKdeMinBandwidth);
  REQUIRE(d.grid.size() == kKdeGridPoints);
  const auto peak = std::max_element(d.density.begin(), d.density.end()) - d.density.begin();
  CHECK(std::abs(d.grid[static_cast<std::size_t>(peak)] - 0.5) < 1.0 / 511);
  for (double x : d.density) CHECK(x >= 0.0);
}

TEST_CASE("kde of a two-point mixture is symmetric and bimodal") {
  std::vector<double> v(200, 0.0);
  std::fill(v.begin() + 100, v.end(), 1.0);
  const DensityEstimate d = kde(v);
  for (std::size_t i = 0; i < kKdeGridPoints; ++i) {
    CHECK(d.density[i] == doctest::Approx(d.density[kKdeGridPoints - 1 - i]).epsilon(1e-9));
  }
  CHECK(d.density.front() > 10 * d.density[kKdeGridPoints / 2]);
  CHECK(trapezoid(d) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("kde of a uniform sample is close to 1 in the interior") {
  Rng rng(2718);
  std::vector<double> v(1000);
  for (double& x : v) x = uniform_unit(rng);
  const DensityEstimate d = kde(v);
  for (std::size_t i = 0; i < kKdeGridPoints; ++i) {
    if (d.grid[i] >= 0.1 && d.grid[i] <= 0.9) CHECK(std::abs(d.density[i] - 1.0) <= 0.15);
    CHECK(d.density[i] >= 0.0);
  }
  const double mass = trapezoid(d);
  CHECK(mass >= 0.95);
  CHECK(mass <= 1.05);
}

TEST_CASE("kde rejects tiny samples and bad bandwidths") {
  CHECK_THROWS_AS(kde(std::vector<double>{0.5}), std::invalid_argument);
  CHECK_THROWS_AS(kde(std::vector<double>{0.1, 0.2}, 0.0), std::invalid_argument);
  CHECK(kde(std::vector<double>{0.1, 0.2}, 0.05).bandwidth == 0.05);
}

TEST_CASE("silverman bandwidth") {
  // n = 4, values {0, 1/3, 2/3, 1}: sample sd = sqrt(5/27), IQR/1.34 = 0.5/1.34.
  const std::vector<double> v{0.0, 1.0 / 3, 2.0 / 3, 1.0};
  const double expected = 0.9 * std::min(std::sqrt(5.0 / 27.0), 0.5 / 1.34) * std::pow(4.0, -0.2);
  CHECK(silverman_bandwidth(v) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("cost and welfare") {
  ModelParams p;  // 1 A, 999 B, pi_max 500
  p.cost = {1.1, 1.0};
  CHECK(cost(0.0, p.cost) == 0.0);
  CHECK(total_surplus(0.0, p) == 0.0);
  CHECK_NOTHROW(validate_cost(p.cost, p.n_a, p.n_b, p.pi_max));
  CHECK(total_surplus(1.0, p) == doctest::Approx(500 - 999 * 2.1).epsilon(1e-12));
  CHECK(total_surplus(1.0, p) == doctest::Approx(-1597.9).epsilon(1e-12));  // 500 - 2097.9

  double previous = total_surplus(0.0, p);
  for (int i = 1; i <= 1000; ++i) {
    const double s = total_surplus(i / 1000.0, p);
    CHECK(s < previous);
    previous = s;
  }

  CHECK_THROWS_AS(validate_cost({1.0, 1.0}, 1, 999, 500), ConfigError);
  CHECK_THROWS_AS(validate_cost({1.1, 0.0}, 1, 999, 500), ConfigError);
  CHECK_THROWS_AS(validate_cost({-1.0, 1.0}, 1, 999, 0), ConfigError);
}

TEST_CASE("pairwise-majority winner equals the median ideal point") {
  Rng rng(1948);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + 2 * uniform_index(rng, 5);  // 1, 3, ..., 9
    std::vector<int> ideals(n);
    std::vector<double> beliefs(n);
    for (std::size_t i = 0; i < n; ++i) {
      ideals[i] = static_cast<int>(uniform_index(rng, 11));
      beliefs[i] = ideals[i] / 10.0;
    }
    const int winner = condorcet_winner(ideals);
    REQUIRE(winner >= 0);
    CHECK(vote(beliefs) == winner / 10.0);
  }
}
