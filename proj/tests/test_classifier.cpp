#include <doctest.h>

#include <cmath>
#include <sstream>

#include "mcs/classifier.hpp"
#include "mcs/rng.hpp"
#include "support/fixtures.hpp"

using namespace mcs;

namespace {

Final F(const char* s) { return *final_from_string(s); }

// Independent density oracle: the closed form spelled out term by term in
// long double, kept apart from the library implementation.
long double oracle_pdf(long double mu0, long double mu1, long double s00,
                       long double s01, long double s11, long double x0,
                       long double x1) {
  const long double pi = 3.14159265358979323846L;
  const long double det = s00 * s11 - s01 * s01;
  const long double inv00 = s11 / det;
  const long double inv01 = -s01 / det;
  const long double inv11 = s00 / det;
  const long double d0 = x0 - mu0;
  const long double d1 = x1 - mu1;
  const long double quad =
      d0 * (inv00 * d0 + inv01 * d1) + d1 * (inv01 * d0 + inv11 * d1);
  return expl(-0.5L * quad) / (2.0L * pi * sqrtl(det));
}

Gaussian2D make_gaussian(double mx, double my, double s00, double s01,
                         double s11) {
  Gaussian2D g;
  g.mu = {mx, my};
  g.sigma[0][0] = s00;
  g.sigma[0][1] = g.sigma[1][0] = s01;
  g.sigma[1][1] = s11;
  return g;
}

}  // namespace

TEST_CASE("fit_gaussian matches the hand-computed covariance") {
  const std::vector<Point> pts = {{0, 0}, {2, 0}, {0, 2}, {2, 2}};
  const Gaussian2D g = fit_gaussian(pts);
  CHECK(g.mu[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.mu[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.sigma[0][0] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(g.sigma[1][1] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(g.sigma[0][1] == doctest::Approx(0.0));
}

TEST_CASE("fit_gaussian regularizes a degenerate cloud") {
  const std::vector<Point> pts = {{1, 1}, {1, 1}, {1, 1}};
  const Gaussian2D g = fit_gaussian(pts);
  CHECK(g.mu[0] == 1.0);
  CHECK(g.sigma[0][0] > 0.0);
  CHECK(g.sigma[1][1] > 0.0);
  CHECK_NOTHROW(gaussian_pdf(g, {1, 1}));

  // collinear cloud: zero variance in one direction only
  const std::vector<Point> line = {{0, 5}, {1, 5}, {2, 5}, {3, 5}};
  CHECK_NOTHROW(gaussian_pdf(fit_gaussian(line), {1, 5}));

  CHECK_THROWS_AS(fit_gaussian(std::vector<Point>{{1, 1}}),
                  InsufficientDataError);
}

TEST_CASE("fit_gaussian recovers known parameters from a large draw") {
  Rng rng(987);
  std::vector<Point> pts;
  const double mx = 3.0, my = 5.0, sx = 2.0, sy = 1.0;
  for (int i = 0; i < 10000; ++i)
    pts.push_back({mx + sx * rng.normal(), my + sy * rng.normal()});
  const Gaussian2D g = fit_gaussian(pts);
  const double se_x = 3.0 * sx / std::sqrt(10000.0);
  const double se_y = 3.0 * sy / std::sqrt(10000.0);
  CHECK(std::abs(g.mu[0] - mx) < se_x);
  CHECK(std::abs(g.mu[1] - my) < se_y);
  CHECK(g.sigma[0][0] == doctest::Approx(sx * sx).epsilon(0.1));
  CHECK(g.sigma[1][1] == doctest::Approx(sy * sy).epsilon(0.1));
}

TEST_CASE("gaussian_pdf analytic values") {
  const Gaussian2D g = make_gaussian(0, 0, 1, 0, 1);
  CHECK(std::abs(gaussian_pdf(g, {0, 0}) - 1.0 / (2.0 * 3.14159265358979323846)) <
        1e-12);
  CHECK(gaussian_pdf(g, {1, 0}) ==
        doctest::Approx(std::exp(-0.5) / (2.0 * 3.14159265358979323846))
            .epsilon(1e-12));
  // density peaks at the mean
  CHECK(gaussian_pdf(g, {0, 0}) > gaussian_pdf(g, {0.1, -0.2}));

  const Gaussian2D bad = make_gaussian(0, 0, 1, 2, 1);  // det < 0
  CHECK_THROWS_AS(gaussian_pdf(bad, {0, 0}), NumericDomainError);
}

TEST_CASE("gaussian_pdf agrees with the long-double oracle") {
  const Gaussian2D g = make_gaussian(1.5, -2.0, 2.0, 0.7, 1.2);
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    const double x = -6.0 + 12.0 * rng.uniform01();
    const double y = -8.0 + 12.0 * rng.uniform01();
    const long double expect = oracle_pdf(1.5L, -2.0L, 2.0L, 0.7L, 1.2L, x, y);
    CHECK(gaussian_pdf(g, {x, y}) ==
          doctest::Approx(static_cast<double>(expect)).epsilon(1e-10));
  }
}

TEST_CASE("gaussian_pdf integrates to one") {
  const Gaussian2D g = make_gaussian(0.5, -0.25, 1.3, 0.4, 0.8);
  const double step = 0.02;
  double sum = 0.0;
  for (double x = -8.0; x < 8.0; x += step)
    for (double y = -8.0; y < 8.0; y += step)
      sum += gaussian_pdf(g, {x + step / 2, y + step / 2});
  CHECK(sum * step * step == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("classify picks the densest model and breaks ties by order") {
  std::vector<std::pair<Final, Gaussian2D>> models = {
      {F("a"), make_gaussian(0, 0, 1, 0, 1)},
      {F("o"), make_gaussian(10, 10, 1, 0, 1)},
  };
  CHECK(classify(models, {1, 1}) == F("a"));
  CHECK(classify(models, {9, 9}) == F("o"));

  const std::vector<std::pair<Final, Gaussian2D>> one = {
      {F("u"), make_gaussian(0, 0, 1, 0, 1)}};
  CHECK(classify(one, {123, -42}) == F("u"));

  // exact tie: identical models, earlier label wins
  const std::vector<std::pair<Final, Gaussian2D>> twins = {
      {F("e"), make_gaussian(0, 0, 1, 0, 1)},
      {F("i"), make_gaussian(0, 0, 1, 0, 1)}};
  CHECK(classify(twins, {0.3, 0.3}) == F("e"));
}

TEST_CASE("classify agrees with a term-by-term oracle on random points") {
  const Gaussian2D g1 = make_gaussian(0, 0, 1, 0, 1);
  const Gaussian2D g2 = make_gaussian(1.5, 0.5, 2.5, -0.6, 0.9);
  const std::vector<std::pair<Final, Gaussian2D>> models = {{F("a"), g1},
                                                            {F("o"), g2}};
  Rng rng(77);
  int agree = 0;
  const int n = 2000;
  for (int i = 0; i < n; ++i) {
    const double x = -5.0 + 10.0 * rng.uniform01();
    const double y = -5.0 + 10.0 * rng.uniform01();
    const long double p1 = oracle_pdf(0, 0, 1, 0, 1, x, y);
    const long double p2 = oracle_pdf(1.5L, 0.5L, 2.5L, -0.6L, 0.9L, x, y);
    const Final want = p1 >= p2 ? F("a") : F("o");
    if (classify(models, {x, y}) == want) ++agree;
  }
  CHECK(agree >= n * 98 / 100);
}

TEST_CASE("classification is translation invariant") {
  const auto specs = fixtures::separated_specs();
  const auto data = generate_synthetic(specs, 60, 7);
  const VowelAllocation alloc = final_allocation();

  for (const double shift : {0.0, 137.25}) {
    std::vector<std::pair<Final, Gaussian2D>> models;
    std::vector<Point> pts;
    std::vector<Final> labels;
    for (Final v : alloc.members(Position::P4)) {
      std::vector<Point> train;
      for (const LipSample& s : data)
        if (s.vowel == v) train.push_back({s.a + shift, s.b + shift});
      pts.insert(pts.end(), train.begin(), train.begin() + 10);
      labels.insert(labels.end(), 10, v);
      models.emplace_back(v, fit_gaussian(train));
    }
    for (std::size_t i = 0; i < pts.size(); ++i)
      CHECK(classify(models, pts[i]) == labels[i]);
  }
}

TEST_CASE("evaluate_position separates far clouds") {
  const auto far = generate_synthetic(fixtures::separated_specs(), 60, 11);
  const auto score =
      evaluate_position(far, Position::P4, final_allocation(), {});
  CHECK(score.mean >= 99.5);
  CHECK(score.stddev < 1.0);
}

TEST_CASE("two identical distributions alone score about fifty percent") {
  std::vector<ClusterSpec> twin = {{F("an"), 5, 5, 1.0, 1.0, ""},
                                   {F("e"), 5, 5, 1.0, 1.0, ""},
                                   {F("o"), 90, 90, 1.0, 1.0, ""}};
  std::map<Final, int> frames{{F("an"), 115}, {F("e"), 80}, {F("o"), 25}};
  const auto data = generate_synthetic(twin, frames, 5);
  // score P1 but only an/e matter; o is far and always right, so rescale
  const auto score = evaluate_position(data, Position::P1, final_allocation(), {});
  const double an_e_share = (115.0 * 0.2 + 80.0 * 0.2) / (115.0 * 0.2 + 80.0 * 0.2 + 5.0);
  const double implied_pair_acc =
      (score.mean - (1.0 - an_e_share) * 100.0) / an_e_share;
  CHECK(implied_pair_acc > 47.0);
  CHECK(implied_pair_acc < 53.0);
}

TEST_CASE("evaluate_position is reproducible and seed-sensitive") {
  const auto data = generate_synthetic(fixtures::confusion_demo_specs(), 80, 21);
  EvalParams p;
  p.repetitions = 40;
  const auto s1 = evaluate_position(data, Position::P3, preliminary_allocation(), p);
  const auto s2 = evaluate_position(data, Position::P3, preliminary_allocation(), p);
  CHECK(s1.mean == s2.mean);
  CHECK(s1.stddev == s2.stddev);

  const auto serial = serial::evaluate_position(data, Position::P3,
                                                preliminary_allocation(), p);
  CHECK(serial.mean == s1.mean);
  CHECK(serial.stddev == s1.stddev);

  EvalParams q = p;
  q.seed = 999;
  const auto s3 = evaluate_position(data, Position::P3, preliminary_allocation(), q);
  CHECK(s3.mean != doctest::Approx(s1.mean).epsilon(1e-12));
  CHECK(std::abs(s3.mean - s1.mean) <
        3.0 * std::max(s1.stddev, 0.5));
}

TEST_CASE("evaluate_position wants five samples per vowel") {
  std::vector<ClusterSpec> specs = {{F("ai"), 0, 0, 1, 1, ""},
                                    {F("u"), 10, 10, 1, 1, ""},
                                    {F("ao"), 20, 20, 1, 1, ""}};
  std::map<Final, int> frames{{F("ai"), 30}, {F("u"), 4}, {F("ao"), 30}};
  const auto data = generate_synthetic(specs, frames, 1);
  try {
    evaluate_position(data, Position::P4, final_allocation(), {});
    FAIL("expected InsufficientDataError");
  } catch (const InsufficientDataError& e) {
    CHECK(e.vowel() == "u");
  }
}

TEST_CASE("training accuracy is perfect on well-separated classes") {
  const auto data = generate_synthetic(fixtures::separated_specs(), 40, 17);
  const VowelAllocation alloc = final_allocation();
  std::vector<std::pair<Final, Gaussian2D>> models;
  for (Final v : alloc.members(Position::P5)) {
    std::vector<Point> train;
    for (const LipSample& s : data)
      if (s.vowel == v) train.push_back({s.a, s.b});
    models.emplace_back(v, fit_gaussian(train));
  }
  for (const auto& [vowel, model] : models) {
    for (const LipSample& s : data)
      if (s.vowel == vowel) CHECK(classify(models, {s.a, s.b}) == vowel);
  }
}

TEST_CASE("evaluate_allocation averages the five positions") {
  const auto data = generate_synthetic(fixtures::separated_specs(), 30, 23);
  EvalParams p;
  p.repetitions = 10;
  const auto report = evaluate_allocation(data, final_allocation(), p);
  double sum = 0.0;
  for (const auto& ps : report.per_position) sum += ps.mean;
  CHECK(report.average == doctest::Approx(sum / 5.0).epsilon(1e-12));
  CHECK(report.average >= 99.5);

  const auto serial = serial::evaluate_allocation(data, final_allocation(), p);
  CHECK(serial.average == report.average);
}

TEST_CASE("lip CSV round trips and validates") {
  const auto data = generate_synthetic(fixtures::separated_specs(), 5, 29);
  std::ostringstream out;
  save_lip_csv(out, data);
  std::istringstream in(out.str());
  const auto back = load_lip_csv(in);
  REQUIRE(back.size() == data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    CHECK(back[i].vowel == data[i].vowel);
    CHECK(back[i].frame == data[i].frame);
    CHECK(back[i].a == doctest::Approx(data[i].a).epsilon(1e-6));
    CHECK(back[i].b == doctest::Approx(data[i].b).epsilon(1e-6));
  }

  std::istringstream vcol("speaker,word,vowel,frame,A,B\ns1,nv,v,0,12.5,3.5\n");
  const auto vrows = load_lip_csv(vcol);
  REQUIRE(vrows.size() == 1);
  CHECK(vrows[0].vowel == F("v"));

  std::istringstream bad("speaker,word,vowel,frame,A,B\ns1,ma,a,0,12.5\n");
  try {
    load_lip_csv(bad);
    FAIL("expected SchemaError");
  } catch (const SchemaError& e) {
    CHECK(e.line() == 2);
  }

  std::istringstream badvowel("s1,ma,zzz,0,1,1\n");
  CHECK_THROWS_AS(load_lip_csv(badvowel), SchemaError);
  std::istringstream negative("s1,ma,a,0,-1,1\n");
  CHECK_THROWS_AS(load_lip_csv(negative), SchemaError);
}

TEST_CASE("synthetic generation is deterministic and sized as asked") {
  const auto specs = fixtures::confusion_demo_specs();
  const auto d1 = generate_synthetic(specs, 150, kDefaultSeed);
  const auto d2 = generate_synthetic(specs, 150, kDefaultSeed);
  REQUIRE(d1.size() == d2.size());
  CHECK(d1.size() == 16u * 150u);
  for (std::size_t i = 0; i < d1.size(); ++i) {
    CHECK(d1[i].a == d2[i].a);
    CHECK(d1[i].b == d2[i].b);
  }
  // the i mixture splits 60/40 between retroflex and plain words
  int zhi = 0, yi = 0;
  for (const auto& s : d1) {
    if (s.word == "zhi") ++zhi;
    if (s.word == "yi") ++yi;
  }
  CHECK(zhi == 90);
  CHECK(yi == 60);
}

TEST_CASE("cluster config parsing") {
  std::istringstream in(
      "# comment\n"
      "a 1.0 2.0 0.5\n"
      "i 10 20 0.5 0.6 zhi\n"
      "\xc3\xbc 20 5 0.5\n");
  const auto specs = load_cluster_specs(in);
  REQUIRE(specs.size() == 3);
  CHECK(specs[0].vowel == F("a"));
  CHECK(specs[1].word == "zhi");
  CHECK(specs[1].weight == 0.6);
  CHECK(specs[2].vowel == F("v"));

  std::istringstream bad("zz 1 2 3\n");
  CHECK_THROWS_AS(load_cluster_specs(bad), SchemaError);
}
