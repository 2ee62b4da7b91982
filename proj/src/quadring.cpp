#include "coxpart/quadring.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <sstream>

#include "coxpart/error.hpp"

namespace coxpart {

namespace {

using BigInt = boost::multiprecision::cpp_int;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::overflow, "QuadScalar addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::overflow, "QuadScalar multiplication overflow");
  return r;
}

// Products inside Z[r2, r3] on the basis {1, r2, r3, r6}: value = coef * basis[index].
struct Term {
  std::int64_t coef;
  std::size_t index;
};
constexpr Term kRadicalTable[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {2, 0}, {1, 3}, {2, 2}},
    {{1, 2}, {1, 3}, {3, 0}, {3, 1}},
    {{1, 3}, {2, 2}, {3, 1}, {6, 0}},
};

constexpr double kBasisValues[QuadScalar::kDim] = {
    1.0,
    1.4142135623730950488,
    1.7320508075688772935,
    2.4494897427831780982,
    1.6180339887498948482,
    2.2882456112707371904,
    2.8025170768881470894,
    3.9633576589174196164,
};

// Enclosures for 2*b*2^bits of every basis element b, as [lo, hi].
struct BasisEnclosure {
  BigInt lo[QuadScalar::kDim];
  BigInt hi[QuadScalar::kDim];
};

BasisEnclosure basis_enclosure(unsigned bits) {
  const BigInt scale = BigInt(1) << bits;
  auto root_floor = [&](unsigned n) {
    BigInt x = BigInt(n) << (2 * bits);
    return boost::multiprecision::sqrt(x);
  };
  // None of these radicands is a perfect square, so floor < true < floor + 1.
  const BigInt s2 = root_floor(2), s3 = root_floor(3), s5 = root_floor(5), s6 = root_floor(6),
               s10 = root_floor(10), s15 = root_floor(15), s30 = root_floor(30);

  BasisEnclosure e;
  e.lo[0] = e.hi[0] = 2 * scale;
  e.lo[1] = 2 * s2, e.hi[1] = 2 * (s2 + 1);
  e.lo[2] = 2 * s3, e.hi[2] = 2 * (s3 + 1);
  e.lo[3] = 2 * s6, e.hi[3] = 2 * (s6 + 1);
  // 2 phi = 1 + r5, 2 r2 phi = r2 + r10, 2 r3 phi = r3 + r15, 2 r6 phi = r6 + r30
  e.lo[4] = scale + s5, e.hi[4] = scale + s5 + 1;
  e.lo[5] = s2 + s10, e.hi[5] = s2 + s10 + 2;
  e.lo[6] = s3 + s15, e.hi[6] = s3 + s15 + 2;
  e.lo[7] = s6 + s30, e.hi[7] = s6 + s30 + 2;
  return e;
}

struct BigEnclosure {
  BigInt lo, hi;
};

BigEnclosure enclose_big(const QuadScalar& a, unsigned bits) {
  const BasisEnclosure b = basis_enclosure(bits);
  BigEnclosure r{0, 0};
  for (std::size_t k = 0; k < QuadScalar::kDim; ++k) {
    const BigInt c = a[k];
    if (c >= 0) {
      r.lo += c * b.lo[k];
      r.hi += c * b.hi[k];
    } else {
      r.lo += c * b.hi[k];
      r.hi += c * b.lo[k];
    }
  }
  return r;
}

Sign sign_of(const BigEnclosure& e) {
  if (e.lo > 0) return Sign::positive;
  if (e.hi < 0) return Sign::negative;
  return Sign::zero;
}

}  // namespace

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::overflow: return "Overflow";
    case ErrorKind::unsupported_label: return "UnsupportedLabel";
    case ErrorKind::malformed_spec: return "MalformedSpec";
    case ErrorKind::index_out_of_range: return "IndexOutOfRange";
    case ErrorKind::cap_exceeded: return "CapExceeded";
    case ErrorKind::not_biclosed: return "NotBiclosed";
    case ErrorKind::not_a_prefix: return "NotAPrefix";
    case ErrorKind::lattice_violation: return "LatticeViolation";
    case ErrorKind::not_a_bipartition: return "NotABipartition";
    case ErrorKind::repeated_letter: return "RepeatedLetter";
    case ErrorKind::set_not_symmetric: return "SetNotSymmetric";
    case ErrorKind::set_not_antisymmetric: return "SetNotAntisymmetric";
    case ErrorKind::n_not_positive: return "NNotPositive";
    case ErrorKind::n_not_negative: return "NNotNegative";
    case ErrorKind::precondition: return "PreconditionViolation";
    case ErrorKind::resource_cap: return "ResourceCap";
    case ErrorKind::cache_error: return "CacheError";
  }
  return "Unknown";
}

std::int64_t QuadScalar::height() const {
  std::int64_t h = 0;
  for (auto x : c_) {
    const std::int64_t ax = x < 0 ? -x : x;
    if (ax > h) h = ax;
  }
  return h;
}

double QuadScalar::approx() const {
  double v = 0;
  for (std::size_t k = 0; k < kDim; ++k) v += static_cast<double>(c_[k]) * kBasisValues[k];
  return v;
}

std::string QuadScalar::to_string() const {
  static const char* names[kDim] = {"", "r2", "r3", "r6", "phi", "r2*phi", "r3*phi", "r6*phi"};
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < kDim; ++k) {
    const std::int64_t c = c_[k];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const std::int64_t ac = c < 0 ? -c : c;
    if (k == kOne) os << ac;
    else if (ac == 1) os << names[k];
    else os << ac << "*" << names[k];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& o) {
  for (std::size_t k = 0; k < kDim; ++k) c_[k] = checked_add(c_[k], o.c_[k]);
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& o) {
  for (std::size_t k = 0; k < kDim; ++k) {
    std::int64_t r;
    if (__builtin_sub_overflow(c_[k], o.c_[k], &r))
      fail(ErrorKind::overflow, "QuadScalar subtraction overflow");
    c_[k] = r;
  }
  return *this;
}

QuadScalar operator-(const QuadScalar& a) {
  QuadScalar r;
  return r -= a;
}

QuadScalar operator*(const QuadScalar& a, const QuadScalar& b) {
  QuadScalar::Coeffs out{};
  for (std::size_t i = 0; i < QuadScalar::kDim; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < QuadScalar::kDim; ++j) {
      if (b.c_[j] == 0) continue;
      const std::int64_t ab = checked_mul(a.c_[i], b.c_[j]);
      const Term t = kRadicalTable[i % 4][j % 4];
      const std::int64_t v = checked_mul(ab, t.coef);
      const bool phi_i = i >= 4, phi_j = j >= 4;
      if (!phi_i && !phi_j) {
        out[t.index] = checked_add(out[t.index], v);
      } else if (phi_i != phi_j) {
        out[t.index + 4] = checked_add(out[t.index + 4], v);
      } else {
        // phi^2 = 1 + phi
        out[t.index] = checked_add(out[t.index], v);
        out[t.index + 4] = checked_add(out[t.index + 4], v);
      }
    }
  }
  return QuadScalar(out);
}

ScaledEnclosure enclose(const QuadScalar& a, unsigned bits) {
  const BigEnclosure e = enclose_big(a, bits);
  return ScaledEnclosure{e.lo.str(), e.hi.str(), bits, a.is_zero() ? Sign::zero : sign_of(e)};
}

Sign sign(const QuadScalar& a) {
  if (a.is_zero()) return Sign::zero;

  // First level: double evaluation with a rigorous rounding-error bound. Each
  // coefficient is exact in a double (|c| < 2^53 is checked), each basis value
  // carries relative error <= 2^-53, and the sum of 8 terms adds at most
  // 8 roundings of the running magnitude.
  double v = 0, mag = 0;
  bool exact_coeffs = true;
  for (std::size_t k = 0; k < QuadScalar::kDim; ++k) {
    const std::int64_t c = a[k];
    if (c > (std::int64_t(1) << 52) || c < -(std::int64_t(1) << 52)) exact_coeffs = false;
    const double t = static_cast<double>(c) * kBasisValues[k];
    v += t;
    mag += std::fabs(t);
  }
  if (exact_coeffs) {
    const double bound = mag * 32.0 * 0x1p-52;
    if (v > bound) return Sign::positive;
    if (v < -bound) return Sign::negative;
  }

  // Refine with exact integer enclosures until 0 is excluded. A nonzero ring
  // element is bounded away from 0, so this terminates.
  for (unsigned bits = 64; bits <= (1u << 16); bits *= 2) {
    const Sign s = sign_of(enclose_big(a, bits));
    if (s != Sign::zero) return s;
  }
  fail(ErrorKind::precondition, "sign refinement did not converge for " + a.to_string());
}

bool is_supported_label(int m) {
  return m == kInfiniteLabel || (m >= 2 && m <= 6);
}

QuadScalar from_label(int m) {
  switch (m) {
    case 2: return QuadScalar(0);
    case 3: return QuadScalar(1);
    case 4: return QuadScalar::sqrt2();
    case 5: return QuadScalar::phi();
    case 6: return QuadScalar::sqrt3();
    case kInfiniteLabel: return QuadScalar(2);
    default: break;
  }
  fail(ErrorKind::unsupported_label, "unsupported edge label m=" + std::to_string(m));
}

std::size_t hash_value(const QuadScalar& a) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (auto x : a.coeffs()) {
    h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace coxpart
