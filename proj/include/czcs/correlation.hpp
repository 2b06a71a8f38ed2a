#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "czcs/sequence.hpp"

namespace czcs {

/// Coefficients of the q-th cyclotomic polynomial, ascending degree,
/// computed by exact integer division of x^q - 1 by the product of the
/// cyclotomic polynomials of the proper divisors of q. Memoized.
const std::vector<long long>& cyclotomic_poly(int q);

/// An exact element of Z[w], w = exp(2*pi*i/q), stored as an exponent-count
/// vector (n_0,...,n_{q-1}) meaning sum_j n_j * w^j.
///
/// Correlation sums are accumulated here term by term and zero-tested
/// algebraically: the value is zero iff the count polynomial sum n_j x^j is
/// divisible by the q-th cyclotomic polynomial. Floating point enters only
/// through to_complex(), which is for display and cross-checks.
class CorrelationValue {
public:
    explicit CorrelationValue(int q);

    /// The single term w^exponent.
    static CorrelationValue term(int q, long long exponent);

    int modulus() const { return q_; }
    const std::vector<long long>& counts() const { return counts_; }

    /// Accumulate one root-of-unity term; exponent is reduced mod q.
    void add_term(long long exponent);

    CorrelationValue& operator+=(const CorrelationValue& rhs);
    CorrelationValue operator+(const CorrelationValue& rhs) const;
    CorrelationValue operator-(const CorrelationValue& rhs) const;

    /// Complex conjugate: count index reversal n_j -> n_{(q-j) mod q}.
    CorrelationValue conjugated() const;

    /// Exact zero test via cyclotomic divisibility.
    bool is_zero() const;

    /// Equality after reduction mod the cyclotomic polynomial.
    bool operator==(const CorrelationValue& rhs) const;

    std::complex<double> to_complex() const;

    /// Exact (real, imag) integer pair when Z[w] embeds in the Gaussian
    /// integers, i.e. q in {1, 2, 4}; nullopt otherwise.
    std::optional<std::pair<long long, long long>> exact_gaussian() const;

private:
    int q_;
    std::vector<long long> counts_;
};

/// Aperiodic cross-correlation of u against v at shift tau:
///   sum_{i=0}^{N-1-tau} w^(u_i - v_{i+tau})   for 0 <= tau <= N-1,
///   sum_{i=0}^{N-1+tau} w^(u_{i-tau} - v_i)   for -N+1 <= tau <= -1,
///   0                                          for |tau| >= N.
/// u and v must share length and modulus.
CorrelationValue accf(const ZqSequence& u, const ZqSequence& v, long long tau);

/// Aperiodic autocorrelation: accf(u, u, tau).
CorrelationValue aacf(const ZqSequence& u, long long tau);

/// Correlation values of a sequence pair for every shift in [-(N-1), N-1].
class CorrelationProfile {
public:
    CorrelationProfile(long long length, std::vector<CorrelationValue> values);

    long long length() const { return length_; }
    long long shift_min() const { return -(length_ - 1); }
    long long shift_max() const { return length_ - 1; }

    /// Value at tau; shifts with |tau| >= N yield the zero value.
    CorrelationValue at(long long tau) const;

private:
    long long length_;
    std::vector<CorrelationValue> values_;  // index tau + (N-1)
};

CorrelationProfile profile(const ZqSequence& u, const ZqSequence& v);

}  // namespace czcs
