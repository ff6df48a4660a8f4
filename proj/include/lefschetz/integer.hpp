#pragma once

// Exact scalar types and the Eigen glue that lets them live in dense matrices.

#include <gmpxx.h>

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 300,
    MulCost = 300
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace lefschetz {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

// Small arithmetic functions on indices. Cyclotomic indices and periods are
// machine integers; only coefficients need arbitrary precision.

/// Positive divisors of n in increasing order. n must be >= 1.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Moebius function: 0 if n has a square factor, else (-1)^(number of primes).
int mobius(std::uint64_t n);

}  // namespace lefschetz
