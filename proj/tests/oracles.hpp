#pragma once

// Slow reference implementations used to cross-check the library. Nothing here calls the
// library's linear algebra or product code.

#include "cartan/algebra.hpp"
#include "cartan/dsl.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using cartan::Rational;
using Dense = std::vector<std::vector<Rational>>;  // row-major

/// Rank by textbook Gauss-Jordan on a dense copy.
inline std::size_t dense_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// A monomial spelled out as a sorted word of generator indices.
inline std::vector<std::size_t> letters(const cartan::Monomial& m) {
  std::vector<std::size_t> out;
  for (std::size_t g = 0; g < m.size(); ++g)
    for (int e = 0; e < m[g]; ++e) out.push_back(g);
  return out;
}

/// Product of two monomials by bubble-sorting the concatenated word, one adjacent swap at a
/// time. Returns {0, _} when an odd letter repeats.
inline std::pair<int, cartan::Monomial> bubble_product(const cartan::Presentation& p, const cartan::Monomial& a,
                                                       const cartan::Monomial& b) {
  std::vector<std::size_t> w = letters(a);
  const auto wb = letters(b);
  w.insert(w.end(), wb.begin(), wb.end());
  int sign = 1;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
      if (w[j] > w[j + 1]) {
        if (p.odd(w[j]) && p.odd(w[j + 1])) sign = -sign;
        std::swap(w[j], w[j + 1]);
      }
  std::vector<int> exps(p.size(), 0);
  for (std::size_t g : w) {
    if (p.odd(g) && exps[g] == 1) return {0, cartan::Monomial(exps)};
    ++exps[g];
  }
  return {sign, cartan::Monomial(exps)};
}

/// All monomials of degree n by brute-force exponent enumeration.
inline std::vector<cartan::Monomial> enumerate_basis(const cartan::Presentation& p, int n) {
  std::vector<cartan::Monomial> out;
  std::vector<int> exps(p.size(), 0);
  const auto rec = [&](auto&& self, std::size_t g, int left) -> void {
    if (g == p.size()) {
      if (left == 0) out.emplace_back(exps);
      return;
    }
    const int deg = p.generator(g).degree;
    const int cap = p.odd(g) ? 1 : left / deg;
    for (int e = 0; e <= cap && e * deg <= left; ++e) {
      exps[g] = e;
      self(self, g + 1, left - e * deg);
    }
    exps[g] = 0;
  };
  rec(rec, 0, n);
  return out;
}

/// The same algebra with its generators declared in the order perm (perm[i] = old index).
inline cartan::PresentationPtr permuted(const cartan::Presentation& p, const std::vector<std::size_t>& perm) {
  std::vector<std::size_t> inverse(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = i;
  const auto move = [&](const cartan::Monomial& m) {
    std::vector<int> e(m.size());
    for (std::size_t g = 0; g < m.size(); ++g) e[inverse[g]] = m[g];
    return cartan::Monomial(e);
  };
  std::vector<cartan::Generator> gens;
  std::vector<cartan::Terms> diff;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    gens.push_back(p.generator(perm[i]));
    cartan::Terms t;
    // reordering the letters of a monomial can flip its sign
    for (const auto& [m, c] : p.differential(perm[i])) {
      const auto word = letters(m);
      std::vector<std::size_t> renamed;
      for (std::size_t g : word) renamed.push_back(inverse[g]);
      int sign = 1;
      for (std::size_t a = 0; a < renamed.size(); ++a)
        for (std::size_t b = 0; b + 1 < renamed.size() - a; ++b)
          if (renamed[b] > renamed[b + 1]) {
            if (p.odd(perm[renamed[b]]) && p.odd(perm[renamed[b + 1]])) sign = -sign;
            std::swap(renamed[b], renamed[b + 1]);
          }
      cartan::add_term(t, move(m), Rational(sign) * c);
    }
    diff.push_back(t);
  }
  return cartan::Presentation::create(gens, diff);
}

inline std::string fixture(const std::string& name) { return std::string(CARTAN_FIXTURE_DIR) + "/" + name + ".cdga"; }

inline cartan::SourceDocument load(const std::string& name) { return cartan::parse_file(fixture(name)); }

}  // namespace oracle
