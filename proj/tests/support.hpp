#pragma once

// Hand-rolled generators for property tests.

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "traceid/poly.hpp"
#include "traceid/polymatrix.hpp"

namespace traceid::testing {

inline constexpr int kPropertyIterations = 200;

inline PolyVar random_var(std::mt19937_64& rng, int max_index = 3) {
  const auto pick = rng() % 8;
  if (pick == 0) return PolyVar::lambda();
  if (pick == 1) return PolyVar::beta();
  return PolyVar::entry(static_cast<int>(rng() % static_cast<unsigned>(max_index + 1)),
                        static_cast<int>(rng() % static_cast<unsigned>(max_index + 1)));
}

/// Up to `max_terms` terms, exponents <= 3, coefficients in [-9, 9].
inline Polynomial random_poly(std::mt19937_64& rng, int max_terms = 6) {
  std::vector<Term> terms;
  const int count = static_cast<int>(rng() % static_cast<unsigned>(max_terms + 1));
  for (int t = 0; t < count; ++t) {
    Monomial m;
    const int factors = static_cast<int>(rng() % 4);
    for (int f = 0; f < factors; ++f) m = m * Monomial::of(random_var(rng), 1 + static_cast<std::uint32_t>(rng() % 3));
    terms.push_back({m, mpz_class(static_cast<long>(rng() % 19) - 9)});
  }
  return Polynomial::from_terms(std::move(terms));
}

/// Single term c * v with v a random entry variable, c in [-3, 3].
inline Polynomial random_single_term(std::mt19937_64& rng) {
  const long c = static_cast<long>(rng() % 7) - 3;
  return Polynomial(c) * Polynomial::var(random_var(rng, 4));
}

inline PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t n, bool single_term = true) {
  auto m = PolyMatrix::square(PolyMatrix::range_labels(1, n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = single_term ? random_single_term(rng) : random_poly(rng, 3);
  }
  return m;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace traceid::testing
