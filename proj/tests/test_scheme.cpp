#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "arithdyn/finite_field.hpp"
#include "arithdyn/scheme.hpp"
#include "oracles.hpp"

using namespace arithdyn;

namespace {

MonogenicOrder gauss() { return MonogenicOrder(polyz::parse("t^2+1")); }

std::vector<u64> norms(const Census &c) {
  std::vector<u64> out;
  for (auto &pt : c.points) out.push_back(pt.norm);
  return out;
}

// Independent census oracle: a point of degree d above p exists iff f has an
// irreducible factor of that degree, decided by counting roots of f in
// F_{p^d} that generate the full field.
int degree_d_point_count(const MonogenicOrder &order, u64 p, int d) {
  FiniteField F(p, d);
  int roots_total = 0;
  for (u64 code = 0; code < F.order(); ++code) {
    auto x = F.decode(code);
    if (!F.is_zero(F.eval_polyz(order.f, x))) continue;
    bool in_proper_subfield = false;
    for (int e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      u64 pe = 1;
      for (int i = 0; i < e; ++i) pe *= p;
      if (F.pow(x, pe) == x) {
        in_proper_subfield = true;
        break;
      }
    }
    if (!in_proper_subfield) ++roots_total;
  }
  return roots_total / d;
}

}  // namespace

TEST_CASE("MonogenicOrder validation") {
  CHECK_THROWS_AS(MonogenicOrder(polyz::parse("t^2-1")), error);
  CHECK_THROWS_AS(MonogenicOrder(polyz::parse("2t^2+1")), error);
  CHECK(MonogenicOrder::spec_z().degree() == 1);
  CHECK(gauss().disc == -4);
}

TEST_CASE("split_prime on the Gaussian order") {
  auto pts5 = split_prime(gauss(), 5);
  REQUIRE(pts5.size() == 2);
  CHECK(pts5[0].g == PolyP{2, 1});
  CHECK(pts5[1].g == PolyP{3, 1});
  CHECK(pts5[0].e == 1);
  CHECK(pts5[0].d == 1);
  CHECK(pts5[0].norm == 5);
  CHECK(pts5[1].norm == 5);

  auto pts7 = split_prime(gauss(), 7);
  REQUIRE(pts7.size() == 1);
  CHECK(pts7[0].g == PolyP{1, 0, 1});
  CHECK(pts7[0].e == 1);
  CHECK(pts7[0].d == 2);
  CHECK(pts7[0].norm == 49);

  auto pts2 = split_prime(gauss(), 2);
  REQUIRE(pts2.size() == 1);
  CHECK(pts2[0].g == PolyP{1, 1});
  CHECK(pts2[0].e == 2);
  CHECK(pts2[0].d == 1);
  CHECK(pts2[0].norm == 2);
}

TEST_CASE("Dedekind maximality") {
  CHECK(is_maximal_at(gauss(), 2));
  CHECK(is_maximal_at(gauss(), 13));
  MonogenicOrder sqrt5(polyz::parse("t^2-5"));
  CHECK_FALSE(is_maximal_at(sqrt5, 2));
  CHECK_THROWS_AS(split_prime(sqrt5, 2), error);
  CHECK(split_prime(sqrt5, 2, true).size() == 1);  // override path

  // p^2 does not divide disc => maximal
  for (auto poly : {"t^2+1", "t^2-5", "t^3-t-1", "t^2-2"}) {
    MonogenicOrder ord(polyz::parse(poly));
    for (u64 p : primes_upto(50)) {
      if ((ord.disc % i64(p * p)) != 0) CHECK(is_maximal_at(ord, p));
    }
  }
}

TEST_CASE("fundamental identity sum e_i d_i = deg f") {
  for (auto poly : {"t", "t^2+1", "t^2-2", "t^3-t-1", "t^4+1", "t^6+t^3+1"}) {
    MonogenicOrder ord(polyz::parse(poly));
    for (u64 p : primes_upto(200)) {
      auto pts = split_prime(ord, p, true);
      int total = 0;
      for (auto &pt : pts) total += pt.e * pt.d;
      CHECK(total == ord.degree());
    }
  }
}

TEST_CASE("census examples") {
  CHECK(norms(census(gauss(), 10)) == std::vector<u64>{2, 5, 5, 9});
  CHECK(norms(census(MonogenicOrder::spec_z(), 6)) == std::vector<u64>{2, 3, 5});
  CHECK(norms(census(gauss(), 4)) == std::vector<u64>{2});
  CHECK_THROWS_AS(census(gauss(), 1), error);

  MonogenicOrder sqrt5(polyz::parse("t^2-5"));
  auto c = census(sqrt5, 30);
  CHECK(c.skipped_primes == std::vector<u64>{2});
}

TEST_CASE("census agrees with the degree-counting oracle") {
  for (auto poly : {"t", "t^2+1", "t^2-2", "t^3-t-1"}) {
    MonogenicOrder ord(polyz::parse(poly));
    u64 bound = 120;
    auto c = census(ord, bound);
    for (u64 p : primes_upto(bound)) {
      if (std::find(c.skipped_primes.begin(), c.skipped_primes.end(), p) !=
          c.skipped_primes.end())
        continue;
      for (int d = 1;; ++d) {
        u64 norm = 1;
        bool over = false;
        for (int i = 0; i < d; ++i) {
          norm *= p;
          if (norm > bound) {
            over = true;
            break;
          }
        }
        if (over) break;
        int want = degree_d_point_count(ord, p, d);
        int got = 0;
        for (auto &pt : c.points)
          if (pt.p == p && pt.d == d) ++got;
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("census JSON round trip") {
  auto c = census(gauss(), 20);
  auto text = census_to_json(c);
  auto back = census_from_json(text);
  CHECK(back.order == c.order);
  CHECK(back.norm_bound == c.norm_bound);
  REQUIRE(back.points.size() == c.points.size());
  for (size_t i = 0; i < c.points.size(); ++i) {
    CHECK(back.points[i].same_place(c.points[i]));
    CHECK(back.points[i].e == c.points[i].e);
    CHECK(back.points[i].norm == c.points[i].norm);
  }
  CHECK(census_to_json(back) == text);
}

TEST_CASE("census cache is atomic and byte-stable") {
  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "arithdyn-test-cache";
  fs::remove_all(dir);
  bool hit = true;
  auto c1 = census_cached(gauss(), 50, dir.string(), &hit);
  CHECK_FALSE(hit);
  auto c2 = census_cached(gauss(), 50, dir.string(), &hit);
  CHECK(hit);
  CHECK(census_to_json(c1) == census_to_json(c2));
  fs::remove_all(dir);
}
