#include "arithdyn/scheme.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "arithdyn/factor.hpp"

namespace arithdyn {

MonogenicOrder::MonogenicOrder(PolyZ poly) : f(polyz::trim(std::move(poly))) {
  if (polyz::deg(f) < 1) throw error("domain", "order polynomial must be non-constant");
  if (polyz::lc(f) != 1) throw error("domain", "order polynomial must be monic");
  if (!polyz::irreducible_over_q(f))
    throw error("domain", "order polynomial must be irreducible over Q");
  disc = polyz::discriminant(f);
}

bool is_maximal_at(const MonogenicOrder &order, u64 p) {
  // Dedekind: f = prod g_i^e_i mod p, g* = prod g_i, h* = f/g* mod p,
  // F = (lift(g*)lift(h*) - f)/p; maximal iff gcd(F, g*, h*) = 1 mod p.
  PolyP fp = polyp::from_polyz(order.f, p);
  auto factors = polyp::factorize(fp, p);
  PolyP gstar{1};
  for (auto &fa : factors) gstar = polyp::mul(gstar, fa.g, p);
  PolyP hstar, r;
  polyp::divmod(fp, gstar, p, hstar, r);
  auto lift = [](const PolyP &g) {
    PolyZ z(g.size());
    for (size_t i = 0; i < g.size(); ++i) z[i] = i64(g[i]);
    return z;
  };
  PolyZ gh = polyz::mul(lift(gstar), lift(hstar));
  PolyZ diff = polyz::sub(gh, order.f);
  PolyZ Fz(diff.size());
  for (size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] % i64(p) != 0) throw error("domain", "Dedekind division not exact");
    Fz[i] = diff[i] / i64(p);
  }
  PolyP F = polyp::from_polyz(polyz::trim(std::move(Fz)), p);
  PolyP g1 = polyp::gcd(F, gstar, p);
  PolyP g2 = polyp::gcd(g1, hstar, p);
  return polyp::deg(g2) == 0;
}

std::vector<ClosedPoint> split_prime(const MonogenicOrder &order, u64 p,
                                     bool allow_non_maximal) {
  if (!is_prime(p)) throw error("domain", "split_prime: p must be prime");
  if (!allow_non_maximal && !is_maximal_at(order, p))
    throw error("non-maximal",
                "order is not maximal at " + std::to_string(p) +
                    "; pass the override to split anyway");
  std::vector<ClosedPoint> out;
  PolyP fp = polyp::from_polyz(order.f, p);
  for (auto &fa : polyp::factorize(fp, p)) {
    ClosedPoint pt{order, p, fa.g, fa.mult, polyp::deg(fa.g), 0};
    u64 norm = 1;
    for (int i = 0; i < pt.d; ++i) {
      if (norm > UINT64_MAX / p) throw_overflow("point norm");
      norm *= p;
    }
    pt.norm = norm;
    out.push_back(std::move(pt));
  }
  std::sort(out.begin(), out.end(), [&](const ClosedPoint &a, const ClosedPoint &b) {
    return polyp::encode(a.g, p) < polyp::encode(b.g, p);
  });
  return out;
}

Census census(const MonogenicOrder &order, u64 norm_bound) {
  if (norm_bound < 2) throw error("domain", "census: norm bound must be >= 2");
  Census c{order, norm_bound, {}, {}};
  for (u64 p : primes_upto(norm_bound)) {
    if (!is_maximal_at(order, p)) {
      c.skipped_primes.push_back(p);
      continue;
    }
    for (auto &pt : split_prime(order, p)) {
      if (pt.norm <= norm_bound) c.points.push_back(pt);
    }
  }
  std::sort(c.points.begin(), c.points.end(),
            [](const ClosedPoint &a, const ClosedPoint &b) {
              if (a.norm != b.norm) return a.norm < b.norm;
              if (a.p != b.p) return a.p < b.p;
              return polyp::encode(a.g, a.p) < polyp::encode(b.g, b.p);
            });
  return c;
}

std::string census_to_json(const Census &c) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["poly"] = polyz::format(c.order.f);
  j["norm_bound"] = c.norm_bound;
  j["points"] = nlohmann::json::array();
  for (auto &pt : c.points) {
    nlohmann::json jp;
    jp["p"] = pt.p;
    jp["g_coeffs"] = pt.g;
    jp["e"] = pt.e;
    jp["d"] = pt.d;
    jp["norm"] = pt.norm;
    j["points"].push_back(jp);
  }
  j["skipped_primes"] = c.skipped_primes;
  return j.dump();
}

Census census_from_json(const std::string &text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("schema_version").get<int>() != 1)
    throw error("schema", "unsupported census schema version");
  MonogenicOrder order(polyz::parse(j.at("poly").get<std::string>()));
  Census c{order, j.at("norm_bound").get<u64>(), {}, {}};
  for (auto &jp : j.at("points")) {
    ClosedPoint pt{order,
                   jp.at("p").get<u64>(),
                   jp.at("g_coeffs").get<PolyP>(),
                   jp.at("e").get<int>(),
                   jp.at("d").get<int>(),
                   jp.at("norm").get<u64>()};
    c.points.push_back(std::move(pt));
  }
  c.skipped_primes = j.at("skipped_primes").get<std::vector<u64>>();
  return c;
}

namespace {

std::string poly_slug(const PolyZ &f) {
  std::string s;
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) s += "_";
    if (f[i] < 0)
      s += "m" + std::to_string(-f[i]);
    else
      s += std::to_string(f[i]);
  }
  return s;
}

}  // namespace

Census census_cached(const MonogenicOrder &order, u64 norm_bound,
                     const std::string &cache_dir, bool *hit) {
  namespace fs = std::filesystem;
  fs::path dir(cache_dir);
  fs::path file = dir / ("census-" + poly_slug(order.f) + "-" +
                         std::to_string(norm_bound) + ".json");
  if (fs::exists(file)) {
    std::ifstream in(file);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    try {
      Census c = census_from_json(text);
      if (c.order == order && c.norm_bound == norm_bound) {
        if (hit) *hit = true;
        return c;
      }
    } catch (const std::exception &) {
      // stale or corrupt entry: recompute below
    }
  }
  Census c = census(order, norm_bound);
  fs::create_directories(dir);
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << census_to_json(c);
  }
  fs::rename(tmp, file);
  if (hit) *hit = false;
  return c;
}

}  // namespace arithdyn
