#pragma once

// Test-only oracles and generators. Nothing here calls the Newton-polygon
// code: closure membership is decided by the power test
//   (a,b) in closure(I)  <=>  k*(a,b) lies above a sum of k generators
// for some k >= 1. The search stops at max_power. With exponents <= 8 a
// bound of 6 misses points such as x^6 y over (x^7, y^7); 8 is enough.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qtree/qtree.hpp"

namespace qtree::oracle {

using monomial::Exponent;

inline constexpr int kMaxPower = 6;
inline constexpr int kSufficientPower = 8;
inline constexpr int kMaxExponent = 8;

/// Seed for randomized checks; QTREE_SEED overrides the fixed default.
inline std::uint64_t seed()
{
  if (const char* s = std::getenv("QTREE_SEED")) return std::strtoull(s, nullptr, 10);
  return 20241016;
}

/// Minimal sums of k generators (the exponents of I^k, not minimized
/// through the library).
inline std::vector<Exponent> kfold_sums(const std::vector<Exponent>& gens, int k)
{
  std::set<std::pair<std::int64_t, std::int64_t>> cur{{0, 0}};
  for (int n = 0; n < k; ++n) {
    std::set<std::pair<std::int64_t, std::int64_t>> next;
    for (auto [a, b] : cur) {
      for (const auto& g : gens) next.insert({a + g.a, b + g.b});
    }
    // drop dominated sums to keep the set small
    std::set<std::pair<std::int64_t, std::int64_t>> pruned;
    std::int64_t best_b = INT64_MAX;
    for (auto [a, b] : next) {
      if (b < best_b) {
        pruned.insert({a, b});
        best_b = b;
      }
    }
    cur = std::move(pruned);
  }
  std::vector<Exponent> out;
  for (auto [a, b] : cur) out.push_back({a, b});
  return out;
}

/// Integral closure by the power test, as a sorted set of minimal exponents.
inline std::vector<Exponent> closure_by_powers(const std::vector<Exponent>& gens, std::int64_t box, int max_power = kMaxPower)
{
  std::vector<std::vector<Exponent>> powers;
  for (int k = 1; k <= max_power; ++k) powers.push_back(kfold_sums(gens, k));
  auto member = [&](std::int64_t a, std::int64_t b) {
    for (int k = 1; k <= max_power; ++k) {
      for (const auto& s : powers[k - 1]) {
        if (s.a <= k * a && s.b <= k * b) return true;
      }
    }
    return false;
  };
  // minimal members: for each a, the least b; keep strict staircase corners
  std::vector<Exponent> out;
  std::int64_t prev = INT64_MAX;
  for (std::int64_t a = 0; a <= box; ++a) {
    for (std::int64_t b = 0; b <= box && b < prev; ++b) {
      if (member(a, b)) {
        out.push_back({a, b});
        prev = b;
        break;
      }
    }
  }
  return out;
}

/// Random m-primary monomial ideal with exponents <= kMaxExponent.
template <class Rng>
std::vector<Exponent> random_m_primary(Rng& rng)
{
  std::uniform_int_distribution<int> e(1, kMaxExponent), n(0, 4), z(0, kMaxExponent);
  std::vector<Exponent> gens{{e(rng), 0}, {0, e(rng)}};
  for (int k = n(rng); k > 0; --k) gens.push_back({z(rng), z(rng)});
  return gens;
}

/// Random point of level <= max_level over the given labels.
template <class Rng>
Point random_point(Rng& rng, std::size_t max_level, const std::vector<Direction>& labels)
{
  std::uniform_int_distribution<std::size_t> lvl(0, max_level), pick(0, labels.size() - 1);
  std::vector<Direction> path;
  for (std::size_t k = lvl(rng); k > 0; --k) path.push_back(labels[pick(rng)]);
  return Point(std::move(path));
}

/// Random nonempty factor multiset over points of level <= max_level.
template <class Rng>
CompleteIdeal random_ideal(Rng& rng, std::size_t max_level, const std::vector<Direction>& labels)
{
  std::uniform_int_distribution<int> count(1, 4), mult(1, 3);
  CompleteIdeal::Factors f;
  for (int k = count(rng); k > 0; --k) f[random_point(rng, max_level, labels)] += static_cast<unsigned>(mult(rng));
  return CompleteIdeal(std::move(f));
}

template <class Rng>
NonsingularModel random_model(Rng& rng, std::size_t max_level, const std::vector<Direction>& labels)
{
  std::uniform_int_distribution<int> count(0, 4);
  std::vector<Point> pts;
  for (int k = count(rng); k > 0; --k) pts.push_back(random_point(rng, max_level, labels));
  return NonsingularModel(BasePointSet::closure_of(pts));
}

}  // namespace qtree::oracle
