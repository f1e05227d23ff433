#include "logistic/standard_map.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <thread>

#include "logistic/errors.hpp"
#include "oracles.hpp"

namespace logistic::standard_map {
namespace {

const ClosedFormVariant kAllVariants[] = {
    ClosedFormVariant::r2, ClosedFormVariant::r4,
    ClosedFormVariant::rm2_table1, ClosedFormVariant::rm2_simple};

double seed_for(ClosedFormVariant v, std::mt19937_64& rng) {
  if (v == ClosedFormVariant::rm2_table1 || v == ClosedFormVariant::rm2_simple) {
    return std::uniform_real_distribution<double>(-0.5, 1.5)(rng);
  }
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

TEST(Iterate, FixedPointAndCollapse) {
  for (double r : {-2.0, 2.0, 3.7, 4.0}) {
    for (double v : iterate({r, 0.0}, 10, PrecisionPolicy{}).values_as_double()) {
      EXPECT_EQ(v, 0.0);
    }
  }
  const auto t = iterate({4.0, 0.5}, 4, PrecisionPolicy{});
  EXPECT_EQ(t.values_as_double(), (std::vector<double>{0.5, 1.0, 0.0, 0.0, 0.0}));
}

TEST(Iterate, RMinusTwoFromPointNine) {
  const auto t = iterate({-2.0, 0.9}, 2, PrecisionPolicy::with_bits(300));
  EXPECT_EQ(t[0].value, 0.9);
  EXPECT_NEAR(t[1].value.to_double(), -0.18, 1e-15);
  EXPECT_NEAR(t[2].value.to_double(), 0.4248, 1e-15);
  EXPECT_EQ(t.precision().significand_bits, 300u);
}

TEST(Iterate, MatchesRawMpfrOrbit) {
  const auto t = iterate({3.9, 0.123}, 50, PrecisionPolicy::with_bits(150));
  const auto raw = testing::raw_orbit(3.9, 0.123, 50, 150);
  for (std::size_t k = 0; k <= 50; ++k) EXPECT_EQ(t[k].value, raw[k]);
}

TEST(Iterate, EscapeCarriesIndex) {
  try {
    iterate({5.0, 2.0}, 100, PrecisionPolicy{});
    FAIL() << "expected escape";
  } catch (const EscapeError& e) {
    EXPECT_GT(e.index(), 2u);
    EXPECT_LT(e.index(), 20u);
  }
}

TEST(CenteredStep, Examples) {
  EXPECT_EQ(centered_step(0.0, 2.0), 0.0);
  EXPECT_NEAR(centered_step(0.4, -2.0), -0.68, 1e-15);
}

TEST(CenteredStep, ConsistentWithIteration) {
  auto rng = testing::seeded_rng(20);
  std::uniform_real_distribution<double> r(-2.0, 4.0), x(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const double rate = r(rng);
    const auto t = iterate({rate, x(rng)}, 8, PrecisionPolicy{});
    for (std::size_t n = 0; n + 1 < t.size(); ++n) {
      const double y = t[n].value.to_double() - 0.5;
      EXPECT_NEAR(centered_step(y, rate), t[n + 1].value.to_double() - 0.5, 1e-12);
    }
  }
}

TEST(ClosedForm, Examples) {
  const PrecisionPolicy hp = PrecisionPolicy::with_bits(128);
  const BigFloat r2 = closed_form({2.0, 0.25}, 1, ClosedFormVariant::r2, hp);
  EXPECT_EQ(r2, 0.375);
  EXPECT_EQ(r2, iterate({2.0, 0.25}, 1, hp)[1].value);

  const BigFloat simple = closed_form({-2.0, 0.9}, 1, ClosedFormVariant::rm2_simple, hp);
  EXPECT_NEAR(simple.to_double(), -0.18, 1e-15);
  EXPECT_LT(abs(simple - iterate({-2.0, 0.9}, 1, hp)[1].value).to_double(), 1e-35);

  const BigFloat table1 = closed_form({-2.0, 0.9}, 0, ClosedFormVariant::rm2_table1, hp);
  EXPECT_LT(abs(table1 - 0.9).to_double(), 1e-35);
}

TEST(ClosedForm, ReturnsSeedAtStepZero) {
  auto rng = testing::seeded_rng(21);
  for (auto v : kAllVariants) {
    for (int i = 0; i < 20; ++i) {
      const double x0 = seed_for(v, rng);
      const auto hp = PrecisionPolicy::with_bits(200);
      const BigFloat got = closed_form({required_r(v), x0}, 0, v, hp);
      EXPECT_LT(abs(got - x0).to_double(), std::ldexp(1.0, -190))
          << to_string(v) << " x0 = " << x0;
    }
  }
}

// The printed form 1/2 + cos(2^n acos(1 - 2 x0)) gives 3/2 - 2 x0 at n = 0.
TEST(ClosedForm, LiteralPrintedSimpleFormFailsStepZero) {
  const BigFloat x0(0.9, 128);
  const BigFloat printed = 0.5 + cos(acos(1.0 - ldexp(x0, 1)));
  EXPECT_NEAR(printed.to_double(), 1.5 - 2 * 0.9, 1e-30);
  EXPECT_GT(abs(printed - x0).to_double(), 1.0);
}

TEST(ClosedForm, MatchesBudgetedOracle) {
  auto rng = testing::seeded_rng(22);
  for (auto v : kAllVariants) {
    for (int i = 0; i < 25; ++i) {
      const MapParams p{required_r(v), seed_for(v, rng)};
      const auto oracle = iterate(p, 40, PrecisionPolicy::with_bits(default_oracle_bits(40)));
      for (std::uint64_t n = 0; n <= 40; n += 5) {
        const unsigned work = default_oracle_bits(n);
        const BigFloat got = closed_form(p, n, v, PrecisionPolicy::with_bits(work));
        const double bound = std::ldexp(1.0, -static_cast<int>(work - n - 10));
        EXPECT_LE(abs(got - oracle[n].value).to_double(), bound)
            << to_string(v) << " x0 = " << p.x0 << " n = " << n;
      }
    }
  }
}

TEST(ClosedForm, R2SupportsSeedsAboveOneHalf) {
  const MapParams p{2.0, 0.8};
  const auto hp = PrecisionPolicy::with_bits(100);
  const auto orbit = iterate(p, 6, hp);
  for (std::uint64_t n = 0; n <= 6; ++n) {
    EXPECT_LT(abs(closed_form(p, n, ClosedFormVariant::r2, hp) - orbit[n].value).to_double(),
              1e-25);
  }
}

TEST(ClosedForm, UsageAndDomainErrors) {
  const auto hp = PrecisionPolicy::with_bits(64);
  EXPECT_THROW(closed_form({4.0, 0.3}, 1, ClosedFormVariant::rm2_simple, hp), UsageError);
  EXPECT_THROW(closed_form({2.0, 0.3}, 1, ClosedFormVariant::r4, hp), UsageError);
  EXPECT_THROW(closed_form({4.0, 1.2}, 1, ClosedFormVariant::r4, hp), DomainError);
  EXPECT_THROW(closed_form({-2.0, 1.6}, 1, ClosedFormVariant::rm2_table1, hp), DomainError);
  EXPECT_THROW(closed_form({-2.0, -0.6}, 1, ClosedFormVariant::rm2_simple, hp), DomainError);
  EXPECT_NO_THROW(closed_form({-2.0, 1.5}, 3, ClosedFormVariant::rm2_simple, hp));
  EXPECT_THROW(closed_form({4.0, 0.3}, 1, ClosedFormVariant::r4, PrecisionPolicy{40, 64}),
               ConfigError);
}

TEST(ClosedForm, LargeStepCountsStayOnTheInvariantInterval) {
  const auto hp = PrecisionPolicy::with_bits(2100);
  const BigFloat x = closed_form({4.0, 0.3}, 2000, ClosedFormVariant::r4, hp);
  EXPECT_GE(x, 0.0);
  EXPECT_LE(x, 1.0);
  // Agrees with a 2100-bit iteration over 2000 steps to well above 50 bits.
  const auto orbit = iterate({4.0, 0.3}, 2000, hp);
  EXPECT_LT(abs(x - orbit[2000].value).to_double(), 1e-15);
}

TEST(ClosedForm, Table1AndSimpleAgreeAtMinusTwo) {
  auto rng = testing::seeded_rng(23);
  std::uniform_real_distribution<double> seed(-0.5, 1.5);
  for (int i = 0; i < 30; ++i) {
    const MapParams p{-2.0, seed(rng)};
    for (std::uint64_t n = 0; n <= 40; n += 4) {
      const unsigned work = default_oracle_bits(n);
      const auto policy = PrecisionPolicy::with_bits(work);
      const BigFloat a = closed_form(p, n, ClosedFormVariant::rm2_table1, policy);
      const BigFloat b = closed_form(p, n, ClosedFormVariant::rm2_simple, policy);
      EXPECT_LE(abs(a - b).to_double(), std::ldexp(1.0, -static_cast<int>(work - n - 10)));
    }
  }
}

TEST(ConjugacyPairs, RoundTripOnInverseDomain) {
  for (const auto& pair : {cosine_pair(), exponential_pair(), minus_two_pair()}) {
    const auto& d = pair.f_inverse_domain;
    const double lo = std::isfinite(d.lo) ? d.lo : -50.0;
    const double hi = std::isfinite(d.hi) ? d.hi : 50.0;
    for (int i = 0; i <= 40; ++i) {
      const BigFloat y(lo + (hi - lo) * i / 40.0, 128);
      if (!d.contains(y)) continue;
      EXPECT_LT(abs(pair.f(pair.f_inverse(y)) - y).to_double(), 1e-10)
          << pair.name << " y = " << y.to_double();
    }
  }
}

TEST(ConjugacySolution, CosinePairMatchesR4) {
  const auto hp = PrecisionPolicy::with_bits(128);
  for (double x0 : {0.05, 0.3, 0.77, 0.95}) {
    for (std::uint64_t n = 0; n <= 10; ++n) {
      const BigFloat a = conjugacy_solution(cosine_pair(), 4.0, x0, n, hp);
      const BigFloat b = closed_form({4.0, x0}, n, ClosedFormVariant::r4, hp);
      EXPECT_LT(abs(a - b).to_double(), 1e-9);
    }
  }
}

TEST(ConjugacySolution, ExponentialPairMatchesR2) {
  const auto hp = PrecisionPolicy::with_bits(128);
  for (double x0 : {-0.7, 0.1, 0.3, 0.49}) {
    for (std::uint64_t n = 0; n <= 6; ++n) {
      const BigFloat a = conjugacy_solution(exponential_pair(), 2.0, x0, n, hp);
      const BigFloat b = closed_form({2.0, x0}, n, ClosedFormVariant::r2, hp);
      EXPECT_LT(abs(a - b).to_double(), 1e-9 * std::max(1.0, abs(b).to_double()));
    }
  }
}

TEST(ConjugacySolution, MinusTwoPairMatchesIteration) {
  const auto hp = PrecisionPolicy::with_bits(128);
  const auto orbit = iterate({-2.0, 0.9}, 10, hp);
  for (std::uint64_t n = 0; n <= 10; ++n) {
    const BigFloat a = conjugacy_solution(minus_two_pair(), -2.0, 0.9, n, hp);
    EXPECT_LT(abs(a - orbit[n].value).to_double(), 1e-8);
    const BigFloat b = closed_form({-2.0, 0.9}, n, ClosedFormVariant::rm2_table1, hp);
    EXPECT_LT(abs(a - b).to_double(), 1e-25);
  }
}

TEST(ConjugacySolution, DomainErrorsNameTheFailingFunction) {
  const auto hp = PrecisionPolicy::with_bits(64);
  try {
    conjugacy_solution(exponential_pair(), 2.0, 0.7, 3, hp);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("f_inverse"), std::string::npos);
  }
  ConjugacyPair narrow = cosine_pair();
  narrow.f_domain = {-1.0, 1.0};
  try {
    conjugacy_solution(narrow, 4.0, 0.3, 5, hp);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("f of pair", 0), 0u);
  }
}

TEST(ForwardInvariance, HighPrecisionOrbitsStayInside) {
  auto rng = testing::seeded_rng(24);
  const auto hp = PrecisionPolicy::with_bits(400);
  for (int i = 0; i < 30; ++i) {
    const double a = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const auto r4 = iterate({4.0, a}, 200, hp);
    for (const auto& s : r4.samples()) {
      EXPECT_GE(s.value, 0.0);
      EXPECT_LE(s.value, 1.0);
    }
    const double b = std::uniform_real_distribution<double>(-0.5, 1.5)(rng);
    const auto rm2 = iterate({-2.0, b}, 200, hp);
    for (const auto& s : rm2.samples()) {
      EXPECT_GE(s.value, -0.5);
      EXPECT_LE(s.value, 1.5);
    }
  }
  // Endpoints are fixed or map onto each other.
  const auto edge = iterate({-2.0, 1.5}, 3, hp).values_as_double();
  EXPECT_EQ(edge, (std::vector<double>{1.5, 1.5, 1.5, 1.5}));
}

TEST(DivergenceAnalysis, NoDivergenceAtHighPrecision) {
  for (auto v : kAllVariants) {
    const MapParams p{required_r(v), v == ClosedFormVariant::r2 ? 0.2 : 0.37};
    const auto r = divergence_analysis(p, v, 5, 512, 1e-3);
    EXPECT_LT(r.max_error, 1e-100) << to_string(v);
    EXPECT_FALSE(r.first_divergent_index.has_value());
    EXPECT_EQ(r.per_step_abs_error.size(), 6u);
  }
}

TEST(DivergenceAnalysis, FigureTwoSetupDivergesInWindow) {
  const MapParams p{-2.0, 0.9};
  for (auto v : {ClosedFormVariant::rm2_table1, ClosedFormVariant::rm2_simple}) {
    const auto r = divergence_analysis(p, v, 60, 53, 0.01);
    ASSERT_TRUE(r.first_divergent_index.has_value()) << to_string(v);
    EXPECT_GE(*r.first_divergent_index, 20u);
    EXPECT_LE(*r.first_divergent_index, 60u);
  }
  const auto it = iteration_divergence(p, 60, 53, 0.01);
  ASSERT_TRUE(it.first_divergent_index.has_value());
  EXPECT_GE(*it.first_divergent_index, 20u);
}

TEST(Prng, Examples) {
  EXPECT_THROW(prng_bits(0.5, 10, 0), DegeneracyError);
  EXPECT_THROW(prng_bits(0.75, 10, 0), DegeneracyError);
  EXPECT_THROW(prng_bits(0.0, 10, 0), DomainError);
  EXPECT_THROW(prng_bits(1.2, 10, 0), DomainError);
  EXPECT_THROW(prng_bits(0.3, 0, 0), ConfigError);

  const auto bits = prng_bits(0.3, 10000, 100);
  ASSERT_EQ(bits.size(), 10000u);
  const double ones = std::accumulate(bits.begin(), bits.end(), 0.0) / 10000.0;
  EXPECT_GE(ones, 0.40);
  EXPECT_LE(ones, 0.60);
  EXPECT_EQ(bits, prng_bits(0.3, 10000, 100));
}

TEST(Prng, BurnInShiftsTheStream) {
  const auto long_run = prng_bits(0.3, 200, 0);
  const auto shifted = prng_bits(0.3, 100, 100);
  EXPECT_TRUE(std::equal(shifted.begin(), shifted.end(), long_run.begin() + 100));
}

TEST(Variants, ParseAndRequiredR) {
  EXPECT_EQ(parse_variant("table1"), ClosedFormVariant::rm2_table1);
  EXPECT_EQ(parse_variant("simple"), ClosedFormVariant::rm2_simple);
  EXPECT_EQ(parse_variant("r2"), ClosedFormVariant::r2);
  EXPECT_EQ(parse_variant("r4"), ClosedFormVariant::r4);
  EXPECT_FALSE(parse_variant("r3").has_value());
  EXPECT_EQ(required_r(ClosedFormVariant::rm2_simple), -2.0);
}

}  // namespace
}  // namespace logistic::standard_map

namespace logistic::standard_map {
namespace {

TEST(Concurrency, ParallelSweepMatchesSerial) {
  std::vector<double> seeds;
  for (int i = 1; i <= 16; ++i) seeds.push_back(i / 17.0);
  const auto policy = PrecisionPolicy::with_bits(160);
  std::vector<BigFloat> serial;
  for (double s : seeds) {
    serial.push_back(closed_form({4.0, s}, 90, ClosedFormVariant::r4, policy));
  }
  std::vector<BigFloat> parallel(seeds.size(), BigFloat(160));
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    workers.emplace_back([&, i] {
      parallel[i] = closed_form({4.0, seeds[i]}, 90, ClosedFormVariant::r4, policy);
    });
  }
  for (auto& w : workers) w.join();
  for (std::size_t i = 0; i < seeds.size(); ++i) EXPECT_EQ(parallel[i], serial[i]);
}

}  // namespace
}  // namespace logistic::standard_map
