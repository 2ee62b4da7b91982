#pragma once

// Length generating functions over a ball.

#include <cstdint>
#include <string>
#include <vector>

#include "coxpart/ball.hpp"

namespace coxpart {

// coeffs[l] counts elements of length l; always radius + 1 entries.
struct GenPoly {
  std::vector<std::uint64_t> coeffs;

  friend bool operator==(const GenPoly&, const GenPoly&) = default;
  GenPoly& operator+=(const GenPoly& o);
};

enum class Stat { bip, pirr };

// Elements with at least one proper bipartition, and partition-irreducible
// elements.
GenPoly bip_genfun(const Ball& ball, unsigned workers = 1);
GenPoly pirr_genfun(const Ball& ball, unsigned workers = 1);
GenPoly growth_series(const Ball& ball);

struct SplitCounts {
  GenPoly bip;
  GenPoly pirr;
};
// Both statistics from one pass.
SplitCounts split_counts(const Ball& ball, unsigned workers = 1);

// "q^2 + 2*q^3"; "0" for the zero polynomial.
std::string format_poly(const GenPoly& p);
// {"coeffs":[...]}
std::string format_json(const GenPoly& p);
// length,count rows under a header line
std::string format_csv(const GenPoly& p);

// Reads "1 + 3q + 4q^2", "3*q^3 + q^{11}" and similar; `degree` fixes the
// number of coefficients (degree + 1).
GenPoly parse_poly(const std::string& text, std::size_t degree);

}  // namespace coxpart
