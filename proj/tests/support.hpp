#pragma once

#include <ostream>
#include <random>
#include <vector>

#include "opuc/opuc.hpp"

namespace opuc {

inline void PrintTo(const Expr& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const GaussianRational& x, std::ostream* os) { *os << x.str(); }

}  // namespace opuc

namespace opuc::testing {

inline constexpr std::uint64_t kSeed = 20240917;

// alpha_j uniform in the disk of radius 0.9.
inline VerblunskySequence<Complex> random_sequence(std::mt19937_64& rng, int length = 16) {
  std::uniform_real_distribution<double> radius(0.0, 0.9), angle(0.0, 6.283185307179586);
  std::vector<Complex> table;
  for (int i = 0; i < length; ++i) table.push_back(std::polar(radius(rng), angle(rng)));
  return VerblunskySequence<Complex>::from_table(std::move(table));
}

inline Expr a(int j) { return Expr::alpha(j); }
inline Expr ab(int j) { return Expr::alpha_bar(j); }
inline Expr rho(int j) { return Expr(1) - a(j) * ab(j); }
inline Expr q(long num, long den = 1) { return Expr(GaussianRational(Rational(num, den))); }

inline GaussianRational gr(const char* literal) { return parse_gaussian(literal).value; }

}  // namespace opuc::testing
