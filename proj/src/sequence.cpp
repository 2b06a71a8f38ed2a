#include "czcs/sequence.hpp"

#include <stdexcept>
#include <string>

namespace czcs {

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw std::domain_error("BitVector: entries must be 0 or 1");
    }
}

std::uint64_t BitVector::to_integer() const {
    std::uint64_t r = 0;
    for (int i = size(); i-- > 0;) r = (r << 1) | bits_[static_cast<std::size_t>(i)];
    return r;
}

BitVector BitVector::complemented() const {
    std::vector<std::uint8_t> out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) out[i] = static_cast<std::uint8_t>(1 - bits_[i]);
    return BitVector(std::move(out));
}

BitVector bit_decompose(std::uint64_t r, int m) {
    if (m < 0 || m >= 64) throw std::domain_error("bit_decompose: m out of range");
    if (r >> m != 0) {
        throw std::domain_error("bit_decompose: r = " + std::to_string(r) +
                                " does not fit in " + std::to_string(m) + " bits");
    }
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) bits[static_cast<std::size_t>(i)] = (r >> i) & 1u;
    return BitVector(std::move(bits));
}

ZqSequence::ZqSequence(int q, std::vector<int> values) : q_(q), values_(std::move(values)) {
    if (q_ < 2 || q_ % 2 != 0) throw std::domain_error("ZqSequence: q must be an even integer >= 2");
    if (values_.empty()) throw std::domain_error("ZqSequence: length must be >= 1");
    for (int v : values_) {
        if (v < 0 || v >= q_) throw std::domain_error("ZqSequence: residue out of [0, q)");
    }
}

ZqSequence ZqSequence::shifted_by(int c) const {
    std::vector<int> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) {
        out[i] = ((values_[i] + c) % q_ + q_) % q_;
    }
    return ZqSequence(q_, std::move(out));
}

}  // namespace czcs
