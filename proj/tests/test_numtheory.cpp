#include "fh/cyclotomic.hpp"
#include "fh/numtheory.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <thread>

using fh::BigInt;
using fh::IntPoly;

TEST_CASE("gcd") {
  CHECK(fh::gcd(6000, 375) == 375);
  CHECK(fh::gcd(6000, 370) == oracle::gcd(6000, 370));
  CHECK(fh::gcd(6000, 370) == 10);
  CHECK(fh::gcd(17, 0) == 17);
  CHECK(fh::gcd(0, 0) == 0);
  CHECK(fh::gcd(-12, 18) == 6);

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> dist(-5000, 5000);
  for (int i = 0; i < 500; ++i) {
    const auto a = dist(rng), b = dist(rng);
    CHECK(fh::gcd(a, b) == oracle::gcd(a, b));
  }
}

TEST_CASE("factorize") {
  CHECK(fh::factorize(180) == fh::Factorization{{2, 2}, {3, 2}, {5, 1}});
  CHECK(fh::factorize(1).empty());
  CHECK(fh::factorize(6000) == fh::Factorization{{2, 4}, {3, 1}, {5, 3}});
  CHECK_THROWS_AS(fh::factorize(0), std::invalid_argument);

  for (std::uint64_t m = 1; m <= 2000; ++m) {
    const auto f = fh::factorize(m);
    const auto g = oracle::factor(m);
    REQUIRE(f.size() == g.size());
    std::uint64_t prod = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(f[i].prime == g[i].first);
      CHECK(f[i].exponent == g[i].second);
      for (unsigned e = 0; e < f[i].exponent; ++e) prod *= f[i].prime;
    }
    CHECK(prod == m);
  }
}

TEST_CASE("divisors") {
  using V = std::vector<std::uint64_t>;
  CHECK(fh::divisors(12) == V{1, 2, 3, 4, 6, 12});
  CHECK(fh::divisors(1) == V{1});
  CHECK(fh::divisors(14) == V{1, 2, 7, 14});
  for (std::uint64_t m = 1; m <= 500; ++m) {
    V expect;
    for (std::uint64_t d = 1; d <= m; ++d)
      if (m % d == 0) expect.push_back(d);
    CHECK(fh::divisors(m) == expect);
  }
}

TEST_CASE("p-adic order") {
  CHECK(fh::p_adic_order(2, 20) == 2);
  CHECK(fh::p_adic_order(2, 18) == 1);
  CHECK(fh::p_adic_order(3, -18) == 2);
  CHECK(fh::p_adic_order(5, 1) == 0);
  CHECK_THROWS_AS(fh::p_adic_order(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(fh::p_adic_order(4, 8), std::invalid_argument);
  CHECK_THROWS_AS(fh::p_adic_order(1, 8), std::invalid_argument);

  SUBCASE("multiplicative") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
      for (int i = 0; i < 300; ++i) {
        std::int64_t a = dist(rng), b = dist(rng);
        if (a == 0 || b == 0) continue;
        CHECK(fh::p_adic_order(p, a * b) == fh::p_adic_order(p, a) + fh::p_adic_order(p, b));
        CHECK(fh::p_adic_order(p, a) == oracle::nu(p, a));
      }
    }
  }
}

TEST_CASE("nu extremes") {
  const std::vector<std::int64_t> a{9, 45}, b{6, 12}, c{1}, empty{}, zero{3, 0};
  CHECK(fh::nu_extremes(3, a) == fh::NuExtremes{2, 2});
  CHECK(fh::nu_extremes(2, b) == fh::NuExtremes{1, 2});
  CHECK(fh::nu_extremes(7, c) == fh::NuExtremes{0, 0});
  CHECK_THROWS_AS(fh::nu_extremes(2, empty), std::invalid_argument);
  CHECK_THROWS_AS(fh::nu_extremes(2, zero), std::invalid_argument);
  CHECK_THROWS_AS(fh::nu_extremes(6, a), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(fh::cyclotomic(1) == IntPoly{-1, 1});
  CHECK(fh::cyclotomic(2) == IntPoly{1, 1});
  CHECK(fh::cyclotomic(10) == IntPoly{1, -1, 1, -1, 1});
  CHECK(fh::cyclotomic(5) == IntPoly{1, 1, 1, 1, 1});
  CHECK(fh::cyclotomic(10).to_string() == "x^4-x^3+x^2-x+1");
  CHECK_THROWS_AS(fh::cyclotomic(0), std::invalid_argument);

  // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
  const auto& c105 = fh::cyclotomic(105).coefficients();
  CHECK(std::count(c105.begin(), c105.end(), BigInt(-2)) == 2);

  for (std::uint64_t s = 1; s <= 200; ++s) {
    const IntPoly& phi = fh::cyclotomic(s);
    CHECK(phi.evaluate(1) == BigInt(fh::cyclotomic_at_one(s)));
    std::uint64_t totient = 0;
    for (std::uint64_t k = 1; k <= s; ++k) totient += oracle::gcd(k, s) == 1;
    CHECK(static_cast<std::uint64_t>(phi.degree()) == totient);

    IntPoly prod{1};
    for (std::uint64_t d : fh::divisors(s)) prod = prod * fh::cyclotomic(d);
    CHECK(prod == IntPoly::monomial(s) - IntPoly{1});
  }
}

TEST_CASE("cyclotomic at one") {
  CHECK(fh::cyclotomic_at_one(1) == 0);
  CHECK(fh::cyclotomic_at_one(16) == 2);
  CHECK(fh::cyclotomic_at_one(600) == 1);
  CHECK(fh::cyclotomic_at_one(3) == 3);
  CHECK(fh::cyclotomic_at_one(1200) == 1);
}

TEST_CASE("polynomial divisibility") {
  const IntPoly a{1, 1};
  CHECK(fh::poly_divides(IntPoly{1, 1}, a));
  CHECK(fh::poly_divides(fh::cyclotomic(2), a));
  CHECK_FALSE(fh::poly_divides(fh::cyclotomic(5), a));
  CHECK_FALSE(fh::poly_divides(fh::cyclotomic(10), a));
  CHECK(fh::poly_divides(a, IntPoly{}));
  CHECK_THROWS_AS(fh::poly_divides(IntPoly{}, a), std::invalid_argument);
  CHECK_THROWS_AS(fh::poly_divides(IntPoly{1, 2}, a), std::invalid_argument);

  auto [q, r] = fh::divide_monic(IntPoly{5, 0, 0, 1}, IntPoly{-2, 1});  // x^3 + 5 by x - 2
  CHECK(q == IntPoly{4, 2, 1});
  CHECK(r == IntPoly{13});

  SUBCASE("transitive on random monic triples") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 4);
    auto monic = [&] {
      std::vector<BigInt> c(deg(rng) + 1);
      for (auto& x : c) x = coef(rng);
      c.back() = 1;
      return IntPoly(std::move(c));
    };
    for (int i = 0; i < 200; ++i) {
      const IntPoly d = monic();
      const IntPoly f = d * monic();
      const IntPoly g = f * monic();
      REQUIRE(fh::poly_divides(d, f));
      REQUIRE(fh::poly_divides(f, g));
      CHECK(fh::poly_divides(d, g));
      // And on arbitrary triples the implication still holds.
      const IntPoly x = monic(), y = monic(), z = monic() + monic();
      if (z.is_monic() && fh::poly_divides(x, y) && fh::poly_divides(y, z)) CHECK(fh::poly_divides(x, z));
    }
  }
}

TEST_CASE("cyclotomic table is safe under concurrent population") {
  fh::CyclotomicTable table;
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t)
    workers.emplace_back([&table, t] {
      for (std::uint64_t s = 1; s <= 120; ++s) table.get(t % 2 ? 121 - s : s);
    });
  for (auto& w : workers) w.join();
  CHECK(table.size() == 120);
  for (std::uint64_t s = 1; s <= 120; ++s) CHECK(table.get(s) == fh::cyclotomic(s));
}

TEST_CASE("cyclotomic table persists to disk") {
  const auto dir = std::filesystem::temp_directory_path() / "fh_cyclo_test";
  std::filesystem::create_directories(dir);
  const auto file = dir / "cyclotomic.bin";

  fh::CyclotomicTable a;
  for (std::uint64_t s = 1; s <= 110; ++s) a.get(s);
  a.save(file);

  fh::CyclotomicTable b;
  CHECK(b.load(file));
  CHECK(b.size() == 110);
  CHECK(b.get(105) == fh::cyclotomic(105));

  fh::CyclotomicTable c;
  CHECK_FALSE(c.load(dir / "missing.bin"));
  {
    std::ofstream os(dir / "junk.bin", std::ios::binary);
    os << "FHCYCLO1garbage";
  }
  CHECK_FALSE(c.load(dir / "junk.bin"));
  CHECK(c.size() == 0);
  std::filesystem::remove_all(dir);
}
