#pragma once

// Reference computations that share no code with the library.

#include "l2rank/group_ring.hpp"
#include "l2rank/integer_matrix.hpp"
#include "l2rank/word.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using SmallMatrix = std::vector<std::vector<long long>>;

// Elementwise equality of two dense matrices.
template <typename A, typename B>
bool same(const A& a, const B& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

inline Perm cycle(int degree, std::vector<int> points) {
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < points.size(); ++i)
    p[static_cast<std::size_t>(points[i])] = points[(i + 1) % points.size()];
  return p;
}

inline Perm rotation(int n, int step = 1) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = (i + step) % n;
  return p;
}

// Order of the group generated by `gens`, by closure.
inline std::size_t group_order(const std::vector<Perm>& gens) {
  if (gens.empty()) return 1;
  Perm id(gens.front().size());
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    Perm x = frontier.back();
    frontier.pop_back();
    for (const Perm& g : gens) {
      Perm y = compose(x, g);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return seen.size();
}

// Rank over GF(p); exact for small entries when p exceeds every minor.
inline int modular_rank(SmallMatrix a, long long p = 1000000007LL) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (auto& row : a)
    for (auto& v : row) v = ((v % p) + p) % p;
  auto power = [p](long long b, long long e) {
    long long r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows; ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[static_cast<std::size_t>(rank)]);
    const long long inv = power(a[static_cast<std::size_t>(rank)][c], p - 2);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(rank) || a[i][c] == 0) continue;
      const long long f = a[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = ((a[i][j] - f * a[static_cast<std::size_t>(rank)][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

inline long long determinant(const SmallMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    long long term = 1;
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      term *= m[i][perm[i]];
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    }
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask[i]) s.push_back(i);
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

// D_k = gcd of all k x k minors, for k = 1..min(rows, cols).
inline std::vector<long long> determinantal_divisors(const SmallMatrix& m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<long long> out;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    long long g = 0;
    for (const auto& rs : subsets(rows, k))
      for (const auto& cs : subsets(cols, k)) {
        SmallMatrix minor(k, std::vector<long long>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m[rs[i]][cs[j]];
        g = std::gcd(g, std::llabs(determinant(minor)));
      }
    out.push_back(g);
  }
  return out;
}

// Eigenvalues of (1 + x)^*(1 + x) in the regular representation of Z/n.
inline std::vector<double> cyclic_one_plus_x_spectrum(int n) {
  std::vector<double> out;
  for (int k = 0; k < n; ++k) out.push_back(2.0 + 2.0 * std::cos(2.0 * std::numbers::pi * k / n));
  return out;
}

// Minimal C with mu[0,eps) - mu{0} <= C / |ln eps| across the family.
inline double cyclic_log_constant(int max_n, const std::vector<double>& eps_grid) {
  double best = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    const auto spectrum = cyclic_one_plus_x_spectrum(n);
    const double zero = static_cast<double>(std::count_if(spectrum.begin(), spectrum.end(),
                                                          [](double l) { return std::abs(l) < 1e-9; })) / n;
    for (double eps : eps_grid) {
      const double below = static_cast<double>(std::count_if(spectrum.begin(), spectrum.end(),
                                                             [eps](double l) { return l < eps; })) / n;
      best = std::max(best, (below - zero) * std::abs(std::log(eps)));
    }
  }
  return best;
}

// Free group on n generators: a subgroup of index m is free of rank 1 + m(n - 1).
inline long long schreier_rank(long long n, long long m) { return 1 + m * (n - 1); }

inline l2rank::Word random_word(std::mt19937_64& rng, int rank, int max_length) {
  std::uniform_int_distribution<int> length(0, max_length);
  std::uniform_int_distribution<int> gen(0, rank - 1);
  std::bernoulli_distribution inv(0.5);
  std::vector<l2rank::Letter> letters;
  const int len = length(rng);
  for (int i = 0; i < len; ++i) letters.push_back({gen(rng), inv(rng)});
  return l2rank::Word(rank, letters);
}

inline l2rank::GroupRingElement random_element(std::mt19937_64& rng, int rank, int terms, int max_length) {
  std::uniform_int_distribution<int> coefficient(-3, 3);
  l2rank::GroupRingElement out(rank);
  for (int t = 0; t < terms; ++t) out.add_term(random_word(rng, rank, max_length), coefficient(rng));
  return out;
}

}  // namespace oracle
