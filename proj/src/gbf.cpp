#include "czcs/gbf.hpp"

#include <algorithm>
#include <stdexcept>

namespace czcs {

std::vector<std::string> OrderedPartition::validate(int universe) const {
    std::vector<std::string> violations;
    if (blocks.empty()) {
        violations.push_back("partition must have at least one block");
        return violations;
    }
    std::vector<int> seen(static_cast<std::size_t>(universe) + 1, 0);
    for (const auto& block : blocks) {
        if (block.empty()) violations.push_back("partition block is empty");
        for (int idx : block) {
            if (idx < 1 || idx > universe) {
                violations.push_back("partition index " + std::to_string(idx) +
                                     " outside universe {1.." + std::to_string(universe) + "}");
            } else if (++seen[static_cast<std::size_t>(idx)] > 1) {
                violations.push_back("partition index " + std::to_string(idx) + " repeated");
            }
        }
    }
    for (int i = 1; i <= universe; ++i) {
        if (seen[static_cast<std::size_t>(i)] == 0) {
            violations.push_back("partition misses index " + std::to_string(i));
        }
    }
    return violations;
}

int eval_g(const OrderedPartition& partition, const BitVector& x, int q) {
    const int n = x.size();
    long long acc = 0;
    for (const auto& block : partition.blocks) {
        for (std::size_t g = 0; g + 1 < block.size(); ++g) {
            const int a = block[g];
            const int b = block[g + 1];
            if (a < 1 || a > n || b < 1 || b > n)
                throw std::domain_error("eval_g: partition index outside input dimension");
            acc += x.bit(a) * x.bit(b);
        }
    }
    return static_cast<int>((q / 2) * acc % q);
}

int eval_g_reflected(const OrderedPartition& partition, const BitVector& x, int q) {
    return eval_g(partition, x.complemented(), q);
}

int eval_f(const ConstructionParams& params, const BitVector& x) {
    if (x.size() != params.m) throw std::domain_error("eval_f: x must have m bits");
    const int q = params.q;
    std::vector<std::uint8_t> head(x.bits().begin(), x.bits().end() - 1);
    const BitVector inner(std::move(head));
    long long value = x.bit(params.m) == 1 ? eval_g(params.partition, inner, q)
                                           : eval_g_reflected(params.partition, inner, q);
    if (!params.lambda.empty()) {
        if (static_cast<int>(params.lambda.size()) != params.m)
            throw std::domain_error("eval_f: lambda must have m entries");
        value += params.lambda[0];
        for (int l = 1; l < params.m; ++l) value += params.lambda[static_cast<std::size_t>(l)] * x.bit(l);
    }
    return static_cast<int>(((value % q) + q) % q);
}

LinearForm zero_offset(int m) { return LinearForm{std::vector<int>(static_cast<std::size_t>(m), 0), 0}; }

ZqSequence sequence_from_function(const ConstructionParams& params, const LinearForm& offset) {
    if (static_cast<int>(offset.coeffs.size()) != params.m)
        throw std::domain_error("sequence_from_function: offset must have m coefficients");
    const int q = params.q;
    const std::uint64_t len = 1ull << params.m;
    std::vector<int> values(len);
    for (std::uint64_t r = 0; r < len; ++r) {
        const BitVector x = bit_decompose(r, params.m);
        long long v = eval_f(params, x) + offset.constant;
        for (int i = 1; i <= params.m; ++i) v += offset.coeffs[static_cast<std::size_t>(i - 1)] * x.bit(i);
        values[r] = static_cast<int>(((v % q) + q) % q);
    }
    return ZqSequence(q, std::move(values));
}

ZqSequence truncate(const ZqSequence& s, std::size_t L) {
    if (L < 1 || L > s.size()) throw std::domain_error("truncate: length out of range");
    return ZqSequence(s.q(), std::vector<int>(s.values().begin(),
                                              s.values().begin() + static_cast<std::ptrdiff_t>(L)));
}

}  // namespace czcs
