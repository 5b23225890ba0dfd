#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "arithdyn/packets.hpp"

using namespace arithdyn;

namespace {

ClosedPoint spec_z_point(u64 p) {
  return split_prime(MonogenicOrder::spec_z(), p).at(0);
}

ClosedPoint gauss_point(u64 p, size_t idx = 0) {
  return split_prime(MonogenicOrder(polyz::parse("t^2+1")), p).at(idx);
}

// Oracle: enumerate the glue orbit of (a, r) within a bounded window and
// take the least exponent among members with val_p(r) = 0.
PacketPoint canonical_by_enumeration(const ClosedPoint &pt, i64 M, i64 a_raw,
                                     const Rat &r_raw) {
  std::vector<std::pair<i64, Rat>> orbit;
  auto push = [&](i64 a, const Rat &r) {
    for (auto &[x, y] : orbit)
      if (x == a && y == r) return false;
    orbit.push_back({a, r});
    return true;
  };
  push(((a_raw % M) + M) % M, r_raw);
  u64 p = pt.p, q = pt.norm;
  bool grew = true;
  while (grew) {
    grew = false;
    auto snapshot = orbit;
    for (auto &[a, r] : snapshot) {
      i64 a2 = i64(mulmod(u64(a), q % u64(M), u64(M)));
      if (push(a2, r)) grew = true;
      i64 ap = i64(mulmod(u64(a), p % u64(M), u64(M)));
      Rat rp = r / Rat(i64(p));
      if (rp.num < 100000 && rp.den < 100000 && push(ap, rp)) grew = true;
      i64 am = i64(mulmod(u64(a), invmod(i64(p % u64(M)), u64(M)), u64(M)));
      Rat rm = r * Rat(i64(p));
      if (rm.num < 100000 && rm.den < 100000 && push(am, rm)) grew = true;
    }
  }
  const std::pair<i64, Rat> *best = nullptr;
  for (auto &cand : orbit) {
    if (cand.second.num % i64(p) == 0 || cand.second.den % i64(p) == 0) continue;
    if (!best || cand.first < best->first) best = &cand;
  }
  REQUIRE(best != nullptr);
  return PacketPoint{pt, M, best->first, best->second};
}

}  // namespace

TEST_CASE("canonicalize examples") {
  auto pt3 = spec_z_point(3);
  auto c1 = canonicalize(pt3, 8, 5, Rat(3, 2));
  CHECK(c1.abar == 5);
  CHECK(c1.r == Rat(1, 2));

  auto c2 = canonicalize(pt3, 8, 1, Rat(1));
  CHECK(c2.abar == 1);
  CHECK(c2.r == Rat(1));

  auto pt7 = gauss_point(7);
  REQUIRE(pt7.norm == 49);
  auto c3 = canonicalize(pt7, 12, 5, Rat(7, 3));
  CHECK(c3.abar == 11);
  CHECK(c3.r == Rat(1, 3));

  CHECK_THROWS_AS(canonicalize(pt3, 9, 1, Rat(1)), error);
  CHECK_THROWS_AS(canonicalize(pt3, 8, 2, Rat(1)), error);
  CHECK_THROWS_AS(canonicalize(pt3, 8, 1, Rat(-1)), error);
}

TEST_CASE("canonical form agrees with glue-orbit enumeration") {
  std::mt19937_64 rng(5);
  std::vector<ClosedPoint> pts = {spec_z_point(3), spec_z_point(5), gauss_point(7),
                                  gauss_point(5)};
  int done = 0;
  while (done < 400) {
    auto &pt = pts[rng() % pts.size()];
    i64 M = 2 + i64(rng() % 30);
    if (std::gcd<u64, u64>(u64(M), pt.p) != 1) continue;
    i64 a = 1 + i64(rng() % u64(M - 1));
    if (std::gcd(a, M) != 1) continue;
    Rat r(1 + i64(rng() % 24), 1 + i64(rng() % 24));
    auto got = canonicalize(pt, M, a, r);
    auto want = canonical_by_enumeration(pt, M, a, r);
    CHECK(got.abar == want.abar);
    CHECK(got.r == want.r);
    auto twisted = canonicalize(pt, M, i64(mulmod(u64(a), pt.p % u64(M), u64(M))),
                                r / Rat(i64(pt.p)));
    CHECK(twisted == got);
    auto coset = canonicalize(pt, M, i64(mulmod(u64(a), pt.norm % u64(M), u64(M))), r);
    CHECK(coset == got);
    ++done;
  }
}

TEST_CASE("action fixed points and the group law") {
  auto pt3 = spec_z_point(3);
  auto pt = canonicalize(pt3, 8, 5, Rat(1, 2));
  CHECK(act(pt, Rat(3)) == pt);
  CHECK(act(pt, Rat(2)) != pt);
  CHECK(act(pt, Rat(1)) == pt);

  std::mt19937_64 rng(13);
  int done = 0;
  while (done < 1000) {
    i64 M = 2 + i64(rng() % 40);
    if (M % 3 == 0) continue;
    i64 a = 1 + i64(rng() % u64(M - 1));
    if (std::gcd(a, M) != 1) continue;
    auto x = canonicalize(pt3, M, a, Rat(1 + i64(rng() % 9), 1 + i64(rng() % 9)));
    Rat q1(1 + i64(rng() % 6), 1 + i64(rng() % 6));
    Rat q2(1 + i64(rng() % 6), 1 + i64(rng() % 6));
    CHECK(act(act(x, q1), q2) == act(x, q1 * q2));
    ++done;
  }
}

TEST_CASE("symbolic isotropy against the exhaustive fraction sweep") {
  struct Case {
    ClosedPoint pt;
    i64 M;
  };
  std::vector<Case> cases = {{spec_z_point(2), 9},  {spec_z_point(3), 8},
                             {spec_z_point(5), 8},  {spec_z_point(7), 8},
                             {gauss_point(2), 9},   {gauss_point(3), 16},
                             {gauss_point(5), 8},   {gauss_point(13), 8}};
  for (auto &c : cases) {
    u64 q = c.pt.norm;
    auto pt = canonicalize(c.pt, c.M, 1, Rat(1));
    CHECK(isotropy_generator(pt) == q);
    for (int j = -3; j <= 3; ++j) {
      Rat qj(1);
      for (int k = 0; k < std::abs(j); ++k)
        qj = j > 0 ? qj * Rat(i64(q)) : qj / Rat(i64(q));
      CHECK(act(pt, qj) == pt);
    }
    for (u64 nu = 1; nu <= 12; ++nu) {
      for (u64 nu2 = 1; nu2 <= 12; ++nu2) {
        if (std::gcd(nu, nu2) != 1) continue;
        bool is_power = false;
        for (int j = -4; j <= 4; ++j) {
          long double lhs = (long double)nu / nu2;
          long double rhs = powl((long double)q, j);
          if (fabsl(lhs - rhs) < 1e-12L) is_power = true;
        }
        auto moved = act(pt, Rat(i64(nu), i64(nu2)));
        CHECK((moved == pt) == is_power);
      }
    }
  }
}

TEST_CASE("fiber labels") {
  auto pt3 = spec_z_point(3);
  auto a5 = canonicalize(pt3, 8, 5, Rat(1));
  CHECK(fiber_label(a5) == std::vector<i64>{5, 7});
  auto a1 = canonicalize(pt3, 8, 1, Rat(1));
  CHECK(fiber_label(a1) == std::vector<i64>{1, 3});

  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Rat q(1 + i64(rng() % 9), 1 + i64(rng() % 9));
    CHECK(fiber_label(act(a5, q)) == fiber_label(a5));
  }

  for (i64 M : {4, 5, 7, 8, 16, 20}) {
    std::set<std::vector<i64>> labels;
    for (i64 a = 1; a < M; ++a) {
      if (std::gcd(a, M) != 1) continue;
      labels.insert(fiber_label(canonicalize(pt3, M, a, Rat(1))));
    }
    CHECK(labels.size() == euler_phi(u64(M)) / mult_order(3 % u64(M), u64(M)));
  }
}

TEST_CASE("packet outputs are equivariant under changing the embedding") {
  // Re-basing exponents by a unit (a different multiplicative embedding)
  // permutes fiber labels bijectively; scan sets do not involve exponents.
  auto pt3 = spec_z_point(3);
  i64 M = 16;
  for (i64 u = 1; u < M; u += 2) {
    std::set<std::vector<i64>> labels, relabeled;
    for (i64 a = 1; a < M; a += 2) {
      labels.insert(fiber_label(canonicalize(pt3, M, a, Rat(1))));
      relabeled.insert(
          fiber_label(canonicalize(pt3, M, i64(mulmod(u64(a), u64(u), u64(M))), Rat(1))));
    }
    CHECK(labels == relabeled);
  }
}

TEST_CASE("isotropy_at_level scans") {
  auto pt3 = spec_z_point(3);
  auto rep = isotropy_at_level(pt3, 80, 10);
  std::vector<std::pair<u64, u64>> want{{1, 1}, {1, 3}, {1, 9}, {3, 1}, {9, 1}};
  CHECK(rep.detected == want);

  auto small = isotropy_at_level(pt3, 4, 10);
  for (auto &fr : want)
    CHECK(std::find(small.detected.begin(), small.detected.end(), fr) !=
          small.detected.end());
  CHECK(small.detected.size() > want.size());

  auto pt2 = spec_z_point(2);
  auto m63 = isotropy_at_level(pt2, 63, 3);
  CHECK(m63.detected == std::vector<std::pair<u64, u64>>{{1, 1}, {1, 2}, {2, 1}});

  for (i64 M : {4, 8, 20}) {
    auto coarse = isotropy_at_level(pt3, M, 10);
    auto fine = isotropy_at_level(pt3, M * 4, 10);
    for (auto &fr : fine.detected)
      CHECK(std::find(coarse.detected.begin(), coarse.detected.end(), fr) !=
            coarse.detected.end());
    for (auto &fr : exact_isotropy_fractions(pt3, 10)) {
      CHECK(std::find(coarse.detected.begin(), coarse.detected.end(), fr) !=
            coarse.detected.end());
      CHECK(std::find(fine.detected.begin(), fine.detected.end(), fr) !=
            fine.detected.end());
    }
  }
}

TEST_CASE("stable_level finds an exact scan level") {
  auto pt3 = spec_z_point(3);
  i64 M = stable_level(pt3, 10, 1000000);
  auto rep = isotropy_at_level(pt3, M, 10);
  CHECK(rep.detected == exact_isotropy_fractions(pt3, 10));

  auto pt5 = spec_z_point(5);
  CHECK(stable_level(pt5, 1, 10) == 2);

  CHECK_THROWS_AS(stable_level(pt3, 10, 4), error);
}

TEST_CASE("surjectivity witnesses: exhaustive over F_9, q = 3") {
  FiniteField F9(3, 2);
  for (u64 code = 1; code < 9; ++code) {
    auto c = F9.decode(code);
    auto w = surjectivity_witness(F9, 3, 2, 1, c);
    CHECK(w.verify());
    CHECK(w.i <= 2);
    CHECK(w.s == 1);
  }
  auto w1 = surjectivity_witness(F9, 3, 2, 1, F9.one());
  CHECK(w1.i == 1);
  CHECK(w1.ambient->is_zero(w1.ambient->sub(w1.zeta, w1.ambient->one())));
  CHECK(w1.ambient->is_zero(w1.ambient->sub(w1.y, w1.ambient->one())));
}

TEST_CASE("surjectivity witnesses need extensions over F_16") {
  FiniteField F16(2, 4);
  bool extension_used = false;
  for (u64 code = 1; code < 16; ++code) {
    auto c = F16.decode(code);
    auto w = surjectivity_witness(F16, 2, 3, 2, c);
    CHECK(w.verify());
    if (w.s > 1) extension_used = true;
    u64 ob = u64(w.order_bound) % w.ambient->group_order();
    if (ob == 0) ob = w.ambient->group_order();
    CHECK(w.ambient->pow(w.zeta, ob) == w.ambient->one());
  }
  CHECK(extension_used);
}

TEST_CASE("union_index examples and bound") {
  CHECK(union_index(15, 2, 1) == 4);
  CHECK(union_index(7, 2, 1) == 3);
  CHECK(union_index(1, 5, 3) == 1);
  CHECK_THROWS_AS(union_index(6, 2, 1), error);

  for (u64 N = 1; N <= 500; ++N) {
    for (auto [nu, nu2] : std::vector<std::pair<u64, u64>>{{2, 1}, {3, 1}, {3, 2}}) {
      if (std::gcd(N, nu * nu2) != 1) continue;
      u64 i = union_index(N, nu, nu2);
      if (N > 1) {
        CHECK(i == mult_order(mulmod(nu % N, invmod(i64(nu2 % N), N), N), N));
        CHECK(i <= euler_phi(N));
      }
    }
  }
}

TEST_CASE("suspension flow and periodicity") {
  auto pt3 = spec_z_point(3);
  auto base = canonicalize(pt3, 8, 5, Rat(1, 2));
  auto x = suspend(base);

  auto moved = flow(x, LogLinear::log(3));
  CHECK(moved == x);
  CHECK(is_periodic(x, LogLinear::log(3)));
  CHECK(is_periodic(x, LogLinear::log(9)));
  CHECK(is_periodic(x, LogLinear::log(3).scaled(Rat(-2))));
  CHECK(is_periodic(x, LogLinear()));

  CHECK_FALSE(is_periodic(x, LogLinear::log(2)));
  CHECK(flow(x, LogLinear::log(2)) != x);
  CHECK_FALSE(is_periodic(x, LogLinear::log(3).scaled(Rat(1, 2))));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    LogLinear s = LogLinear::log(2 + rng() % 20, Rat(i64(rng() % 7) - 3, 1 + i64(rng() % 4)));
    LogLinear t = LogLinear::log(2 + rng() % 20, Rat(i64(rng() % 7) - 3, 1 + i64(rng() % 4)));
    CHECK(flow(flow(x, s), t) == flow(x, s + t));
  }

  auto y = flow(x, LogLinear::log(3).scaled(Rat(7, 2)));
  CHECK(*y.pbase == base);

  ColimitPoint cp{2, TruncatedCharacter(pt3, 8, 1)};
  auto z = suspend(cp);
  CHECK(is_periodic(z, LogLinear()));
  CHECK_FALSE(is_periodic(z, LogLinear::log(3)));
  CHECK_FALSE(is_periodic(z, LogLinear::log(2)));
  CHECK(flow(flow(z, LogLinear::log(5)), LogLinear::log(5).scaled(Rat(-1))) == z);
}

TEST_CASE("orbit length spectrum") {
  auto sp = orbit_length_spectrum(MonogenicOrder(polyz::parse("t^2+1")), 10);
  REQUIRE(sp.entries.size() == 3);
  CHECK(sp.entries[0].norm == 2);
  CHECK(sp.entries[0].multiplicity == 1);
  CHECK(sp.entries[1].norm == 5);
  CHECK(sp.entries[1].multiplicity == 2);
  CHECK(sp.entries[2].norm == 9);
  CHECK(sp.entries[2].multiplicity == 1);
  CHECK(sp.entries[2].length == LogLinear::log(9));

  auto spz = orbit_length_spectrum(MonogenicOrder::spec_z(), 6);
  REQUIRE(spz.entries.size() == 3);
  for (auto &e : spz.entries) CHECK(e.multiplicity == 1);

  auto ram = orbit_length_spectrum(MonogenicOrder(polyz::parse("t^2+1")), 2);
  REQUIRE(ram.entries.size() == 1);
  CHECK(ram.entries[0].norm == 2);
}

TEST_CASE("log-linear parsing and printing") {
  auto t = LogLinear::parse("log(2)+3/2*log(5)");
  CHECK(t == LogLinear::log(2) + LogLinear::log(5).scaled(Rat(3, 2)));
  CHECK(LogLinear::parse(t.str()) == t);
  CHECK(LogLinear::parse("0").is_zero());
  CHECK(LogLinear::parse("-log(12)") == LogLinear::log(12).scaled(Rat(-1)));
  CHECK(LogLinear::log(12) == LogLinear::log(4) + LogLinear::log(3));
  CHECK_THROWS_AS(LogLinear::parse("2.5"), error);
  i64 mult = 0;
  CHECK(LogLinear::log(9).integer_multiple_of_log(3, &mult));
  CHECK(mult == 2);
  CHECK_FALSE(LogLinear::log(6).integer_multiple_of_log(3));
}

TEST_CASE("isotropy report serializes") {
  auto rep = isotropy_at_level(spec_z_point(3), 80, 10);
  auto j = rep.to_json();
  CHECK(j.find("\"3/1\"") != std::string::npos);
  CHECK(j.find("\"1/9\"") != std::string::npos);
  CHECK(j.find("schema_version") != std::string::npos);
}
