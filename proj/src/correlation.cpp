#include "czcs/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace czcs {

namespace {

// Quotient of a by the monic divisor b, exact or throws. Ascending coefficients.
std::vector<long long> divide_exact(std::vector<long long> a, const std::vector<long long>& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw std::logic_error("divide_exact: degree underflow");
    std::vector<long long> quot(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const long long c = a[i];
        if (c == 0) continue;
        quot[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    if (std::any_of(a.begin(), a.end(), [](long long v) { return v != 0; }))
        throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

std::vector<long long> compute_cyclotomic(int n) {
    if (n == 1) return {-1, 1};  // x - 1
    std::vector<long long> poly(static_cast<std::size_t>(n) + 1, 0);
    poly.front() = -1;
    poly.back() = 1;  // x^n - 1
    for (int d = 1; d < n; ++d) {
        if (n % d == 0) poly = divide_exact(std::move(poly), cyclotomic_poly(d));
    }
    return poly;
}

}  // namespace

const std::vector<long long>& cyclotomic_poly(int q) {
    if (q < 1) throw std::domain_error("cyclotomic_poly: q must be >= 1");
    static std::mutex mu;
    static std::unordered_map<int, std::vector<long long>> cache;
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(q);
        if (it != cache.end()) return it->second;
    }
    auto poly = compute_cyclotomic(q);
    std::scoped_lock lock(mu);
    return cache.emplace(q, std::move(poly)).first->second;
}

CorrelationValue::CorrelationValue(int q) : q_(q), counts_(static_cast<std::size_t>(q), 0) {
    if (q < 1) throw std::domain_error("CorrelationValue: q must be >= 1");
}

CorrelationValue CorrelationValue::term(int q, long long exponent) {
    CorrelationValue v(q);
    v.add_term(exponent);
    return v;
}

void CorrelationValue::add_term(long long exponent) {
    const long long e = ((exponent % q_) + q_) % q_;
    ++counts_[static_cast<std::size_t>(e)];
}

CorrelationValue& CorrelationValue::operator+=(const CorrelationValue& rhs) {
    if (rhs.q_ != q_) throw std::domain_error("CorrelationValue: modulus mismatch");
    for (std::size_t j = 0; j < counts_.size(); ++j) counts_[j] += rhs.counts_[j];
    return *this;
}

CorrelationValue CorrelationValue::operator+(const CorrelationValue& rhs) const {
    CorrelationValue out = *this;
    out += rhs;
    return out;
}

CorrelationValue CorrelationValue::operator-(const CorrelationValue& rhs) const {
    if (rhs.q_ != q_) throw std::domain_error("CorrelationValue: modulus mismatch");
    CorrelationValue out = *this;
    for (std::size_t j = 0; j < counts_.size(); ++j) out.counts_[j] -= rhs.counts_[j];
    return out;
}

CorrelationValue CorrelationValue::conjugated() const {
    CorrelationValue out(q_);
    for (int j = 0; j < q_; ++j) {
        out.counts_[static_cast<std::size_t>((q_ - j) % q_)] = counts_[static_cast<std::size_t>(j)];
    }
    return out;
}

bool CorrelationValue::is_zero() const {
    const auto& phi = cyclotomic_poly(q_);
    const std::size_t d = phi.size() - 1;
    std::vector<long long> rem = counts_;
    for (std::size_t i = rem.size(); i-- > d;) {
        const long long c = rem[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) rem[i - d + j] -= c * phi[j];
    }
    const std::size_t limit = std::min(d, rem.size());
    return std::all_of(rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(limit),
                       [](long long v) { return v == 0; });
}

bool CorrelationValue::operator==(const CorrelationValue& rhs) const {
    if (rhs.q_ != q_) return false;
    return (*this - rhs).is_zero();
}

std::complex<double> CorrelationValue::to_complex() const {
    std::complex<double> acc{0.0, 0.0};
    for (int j = 0; j < q_; ++j) {
        const double angle = 2.0 * std::numbers::pi * j / q_;
        acc += static_cast<double>(counts_[static_cast<std::size_t>(j)]) *
               std::complex<double>{std::cos(angle), std::sin(angle)};
    }
    return acc;
}

std::optional<std::pair<long long, long long>> CorrelationValue::exact_gaussian() const {
    switch (q_) {
        case 1:
            return std::pair{counts_[0], 0LL};
        case 2:
            return std::pair{counts_[0] - counts_[1], 0LL};
        case 4:
            return std::pair{counts_[0] - counts_[2], counts_[1] - counts_[3]};
        default:
            return std::nullopt;
    }
}

CorrelationValue accf(const ZqSequence& u, const ZqSequence& v, long long tau) {
    if (u.q() != v.q()) throw std::domain_error("accf: modulus mismatch");
    if (u.size() != v.size()) throw std::domain_error("accf: length mismatch");
    const long long n = static_cast<long long>(u.size());
    CorrelationValue acc(u.q());
    if (tau >= n || tau <= -n) return acc;
    if (tau >= 0) {
        for (long long i = 0; i + tau < n; ++i) {
            acc.add_term(u[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i + tau)]);
        }
    } else {
        for (long long i = 0; i - tau < n; ++i) {
            acc.add_term(u[static_cast<std::size_t>(i - tau)] - v[static_cast<std::size_t>(i)]);
        }
    }
    return acc;
}

CorrelationValue aacf(const ZqSequence& u, long long tau) { return accf(u, u, tau); }

CorrelationProfile::CorrelationProfile(long long length, std::vector<CorrelationValue> values)
    : length_(length), values_(std::move(values)) {
    if (length_ < 1 || values_.size() != static_cast<std::size_t>(2 * length_ - 1))
        throw std::domain_error("CorrelationProfile: shift range must cover [-(N-1), N-1]");
}

CorrelationValue CorrelationProfile::at(long long tau) const {
    if (tau >= length_ || tau <= -length_) return CorrelationValue(values_.front().modulus());
    return values_[static_cast<std::size_t>(tau + length_ - 1)];
}

CorrelationProfile profile(const ZqSequence& u, const ZqSequence& v) {
    const long long n = static_cast<long long>(u.size());
    std::vector<CorrelationValue> values;
    values.reserve(static_cast<std::size_t>(2 * n - 1));
    for (long long tau = -(n - 1); tau <= n - 1; ++tau) values.push_back(accf(u, v, tau));
    return CorrelationProfile(n, std::move(values));
}

}  // namespace czcs
