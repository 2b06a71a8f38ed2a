#pragma once

#include <optional>
#include <string>
#include <vector>

#include "czcs/gbf.hpp"
#include "czcs/sequence.hpp"

namespace czcs {

/// Derived (M, N, Z) triple of a constructed set:
///   M = 2^(k+1), N = 2^(m-1) + 2^delta, Z = 2^(pi_k(1)-1) + 2^delta.
struct SetParameters {
    long long flock_size = 0;  // M
    long long length = 0;      // N
    long long zcz_width = 0;   // Z

    bool operator==(const SetParameters&) const = default;
};

/// All violated construction preconditions, empty when params are valid:
/// m >= 4, q even, delta in [0, m-1), partition well-formed over {1..m-1},
/// prefix condition {pi_1(1..delta)} = {1..delta}, lambda entries in [0, q).
std::vector<std::string> validate(const ConstructionParams& params);

/// Throws std::domain_error listing the violations when validate() fails.
void require_valid(const ConstructionParams& params);

SetParameters derived_params(const ConstructionParams& params);

struct CzcsFamily {
    ConstructionParams params;
    SetParameters derived;
    std::vector<ZqSequence> sequences;
};

/// The ordered set of M = 2^(k+1) sequences: member sigma is the value
/// table of f + (q/2)(sum_b sigma_b x_{pi_b(1)} + sigma_{k+1} x_m),
/// sigma bits LSB-first, truncated to length N.
CzcsFamily build_set(const ConstructionParams& params);

/// Same family without truncation (full length 2^m); used by the
/// exhaustive lemma oracles, whose index pairs range over all of [0, 2^m).
std::vector<ZqSequence> build_untruncated_set(const ConstructionParams& params);

/// Every valid configuration for the given m and q: set partitions of
/// {1..m-1} with blocks listed by ascending smallest element, crossed with
/// every within-block ordering (lexicographic), every delta satisfying the
/// prefix condition, and every lambda in lambda_set (empty set means the
/// all-zero lambda only). Deterministic order.
std::vector<ConstructionParams> enumerate_params(
    int m, int q, const std::optional<std::vector<int>>& delta_filter = std::nullopt,
    const std::vector<std::vector<int>>& lambda_set = {});

}  // namespace czcs
