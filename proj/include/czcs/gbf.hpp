#pragma once

#include <string>
#include <vector>

#include "czcs/sequence.hpp"

namespace czcs {

/// Partition S_1,...,S_k of {1,...,m-1} into non-empty blocks, each block
/// internally ordered: blocks[b][g] is pi_{b+1}(g+1). Both the block order
/// and the within-block order are significant.
struct OrderedPartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }

    /// Violations of partition well-formedness over the universe {1..universe}.
    std::vector<std::string> validate(int universe) const;
};

/// Everything that determines one constructed set: variable count m, even
/// modulus q, truncation exponent delta, the ordered partition, and the
/// affine coefficients lambda = (lambda_0, ..., lambda_{m-1}).
struct ConstructionParams {
    int m = 0;
    int q = 0;
    int delta = 0;
    OrderedPartition partition;
    std::vector<int> lambda;  // lambda[0] is the constant term; size m

    bool operator==(const ConstructionParams&) const = default;
};

/// Quadratic form (q/2) * sum_b sum_g x_{pi_b(g)} x_{pi_b(g+1)} mod q.
/// x has m-1 bits. Blocks of size 1 contribute nothing.
int eval_g(const OrderedPartition& partition, const BitVector& x, int q);

/// eval_g at the bitwise complement of x.
int eval_g_reflected(const OrderedPartition& partition, const BitVector& x, int q);

/// The m-variable function: branch on x_m between the reflected and plain
/// quadratic form, plus the affine part sum_l lambda_l x_l + lambda_0, mod q.
int eval_f(const ConstructionParams& params, const BitVector& x);

/// Affine function over Z_q in m variables used as a sequence offset:
/// coeffs[i-1] is the coefficient of x_i.
struct LinearForm {
    std::vector<int> coeffs;
    int constant = 0;
};

/// Length-2^m value table of eval_f plus the offset, indexed r = 0..2^m-1
/// with LSB-first bits.
ZqSequence sequence_from_function(const ConstructionParams& params, const LinearForm& offset);

/// All-zero offset in m variables.
LinearForm zero_offset(int m);

/// First L entries of s; throws std::domain_error unless 1 <= L <= len(s).
ZqSequence truncate(const ZqSequence& s, std::size_t L);

}  // namespace czcs
