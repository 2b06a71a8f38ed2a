#pragma once

#include <cstdint>
#include <vector>

namespace czcs {

/// Binary vector (r_1,...,r_m) of an integer r = sum_i r_i * 2^(i-1).
/// r_1 is the least significant bit; accessors are 1-based to match that
/// indexing convention, which every module in this library shares.
class BitVector {
public:
    explicit BitVector(std::vector<std::uint8_t> bits);

    int size() const { return static_cast<int>(bits_.size()); }

    /// r_i for 1 <= i <= m.
    int bit(int i) const { return bits_[static_cast<std::size_t>(i - 1)]; }

    std::uint64_t to_integer() const;

    /// (1-r_1, ..., 1-r_m).
    BitVector complemented() const;

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    bool operator==(const BitVector&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// Decompose r into its m-bit vector; throws std::domain_error unless 0 <= r < 2^m.
BitVector bit_decompose(std::uint64_t r, int m);

/// Finite sequence of residues mod q. q must be even and >= 2; every
/// element must lie in [0, q). Immutable after construction.
class ZqSequence {
public:
    ZqSequence(int q, std::vector<int> values);

    int q() const { return q_; }
    std::size_t size() const { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }
    const std::vector<int>& values() const { return values_; }

    /// Elementwise (this + c) mod q.
    ZqSequence shifted_by(int c) const;

    bool operator==(const ZqSequence&) const = default;

private:
    int q_;
    std::vector<int> values_;
};

}  // namespace czcs
