#pragma once

// Exact arithmetic in Z[sqrt2, sqrt3, phi].
//
// Every value 2cos(pi/m) for m in {2,3,4,5,6,inf} lives in this ring, so the
// Tits representation of any Coxeter graph with those labels has matrices
// with entries here. Elements are stored as 8 integer coordinates over the
// basis
//
//   {1, r2, r3, r6, phi, r2*phi, r3*phi, r6*phi}
//
// where r2 = sqrt(2), r3 = sqrt(3), r6 = sqrt(6) and phi = (1 + sqrt5)/2.
// Coordinates are 64-bit and every operation is overflow-checked.

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace coxpart {

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

class QuadScalar {
 public:
  static constexpr std::size_t kDim = 8;
  using Coeffs = std::array<std::int64_t, kDim>;

  enum Basis : std::size_t {
    kOne = 0,
    kSqrt2 = 1,
    kSqrt3 = 2,
    kSqrt6 = 3,
    kPhi = 4,
    kSqrt2Phi = 5,
    kSqrt3Phi = 6,
    kSqrt6Phi = 7,
  };

  constexpr QuadScalar() = default;
  constexpr explicit QuadScalar(std::int64_t integer) : c_{} { c_[kOne] = integer; }
  constexpr explicit QuadScalar(const Coeffs& c) : c_(c) {}

  static constexpr QuadScalar basis(Basis b) {
    Coeffs c{};
    c[b] = 1;
    return QuadScalar(c);
  }
  static constexpr QuadScalar sqrt2() { return basis(kSqrt2); }
  static constexpr QuadScalar sqrt3() { return basis(kSqrt3); }
  static constexpr QuadScalar sqrt6() { return basis(kSqrt6); }
  static constexpr QuadScalar phi() { return basis(kPhi); }

  const Coeffs& coeffs() const { return c_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }

  bool is_zero() const {
    for (auto x : c_)
      if (x != 0) return false;
    return true;
  }
  bool is_integer() const {
    for (std::size_t i = 1; i < kDim; ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  // Largest absolute coordinate.
  std::int64_t height() const;

  // Plain floating-point evaluation; not used for decisions.
  double approx() const;

  std::string to_string() const;

  QuadScalar& operator+=(const QuadScalar& o);
  QuadScalar& operator-=(const QuadScalar& o);
  QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }

  friend QuadScalar operator+(QuadScalar a, const QuadScalar& b) { return a += b; }
  friend QuadScalar operator-(QuadScalar a, const QuadScalar& b) { return a -= b; }
  friend QuadScalar operator-(const QuadScalar& a);
  friend QuadScalar operator*(const QuadScalar& a, const QuadScalar& b);

  friend bool operator==(const QuadScalar&, const QuadScalar&) = default;

 private:
  Coeffs c_{};
};

// Exact sign of the real number represented by `a`.
Sign sign(const QuadScalar& a);

// Certified enclosure of 2*a*2^bits: lo <= 2*a*2^bits <= hi, bounds given as
// decimal strings since they can exceed 64 bits. Exposed for tests.
struct ScaledEnclosure {
  std::string lo;
  std::string hi;
  unsigned bits = 0;
  Sign sign = Sign::zero;  // zero when the enclosure still straddles 0
};
ScaledEnclosure enclose(const QuadScalar& a, unsigned bits);

// Edge label encoding: m >= 2 is a finite label, kInfiniteLabel stands for
// m = infinity.
inline constexpr int kInfiniteLabel = 0;

bool is_supported_label(int m);

// 2cos(pi/m); m = infinity maps to 2. Throws ErrorKind::unsupported_label.
QuadScalar from_label(int m);

std::size_t hash_value(const QuadScalar& a);

}  // namespace coxpart

template <>
struct std::hash<coxpart::QuadScalar> {
  std::size_t operator()(const coxpart::QuadScalar& a) const noexcept {
    return coxpart::hash_value(a);
  }
};
