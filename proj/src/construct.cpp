#include "czcs/construct.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace czcs {

std::vector<std::string> validate(const ConstructionParams& params) {
    std::vector<std::string> violations;
    if (params.m < 4) violations.push_back("m must be >= 4");
    if (params.q < 2 || params.q % 2 != 0) violations.push_back("q must be an even integer >= 2");
    if (params.m >= 1) {
        auto part = params.partition.validate(params.m - 1);
        violations.insert(violations.end(), part.begin(), part.end());
    }
    if (params.delta < 0 || params.delta >= params.m - 1) {
        violations.push_back("delta must satisfy 0 <= delta < m-1");
    } else if (params.partition.block_count() >= 1) {
        // prefix condition: the first delta entries of the first block are {1..delta}
        const auto& first = params.partition.blocks.front();
        if (static_cast<int>(first.size()) < params.delta) {
            violations.push_back("first block has fewer than delta entries");
        } else {
            std::vector<int> prefix(first.begin(), first.begin() + params.delta);
            std::sort(prefix.begin(), prefix.end());
            for (int i = 0; i < params.delta; ++i) {
                if (prefix[static_cast<std::size_t>(i)] != i + 1) {
                    violations.push_back("prefix condition fails: {pi_1(1..delta)} != {1..delta}");
                    break;
                }
            }
        }
    }
    if (!params.lambda.empty()) {
        if (static_cast<int>(params.lambda.size()) != params.m) {
            violations.push_back("lambda must have m entries (lambda_0..lambda_{m-1})");
        } else if (params.q >= 1) {
            for (int l : params.lambda) {
                if (l < 0 || l >= params.q) {
                    violations.push_back("lambda entries must lie in [0, q)");
                    break;
                }
            }
        }
    }
    return violations;
}

void require_valid(const ConstructionParams& params) {
    const auto violations = validate(params);
    if (violations.empty()) return;
    std::string msg = "invalid construction parameters:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw std::domain_error(msg);
}

SetParameters derived_params(const ConstructionParams& params) {
    require_valid(params);
    const int k = params.partition.block_count();
    const int pi_k_1 = params.partition.blocks.back().front();
    SetParameters out;
    out.flock_size = 1ll << (k + 1);
    out.length = (1ll << (params.m - 1)) + (1ll << params.delta);
    out.zcz_width = (1ll << (pi_k_1 - 1)) + (1ll << params.delta);
    return out;
}

namespace {

std::vector<ZqSequence> build_members(const ConstructionParams& params,
                                      std::optional<std::size_t> truncate_to) {
    const int k = params.partition.block_count();
    const int half_q = params.q / 2;
    const long long flock = 1ll << (k + 1);
    std::vector<ZqSequence> members;
    members.reserve(static_cast<std::size_t>(flock));
    for (long long sigma = 0; sigma < flock; ++sigma) {
        LinearForm offset = zero_offset(params.m);
        for (int b = 0; b < k; ++b) {
            if ((sigma >> b) & 1) {
                const int var = params.partition.blocks[static_cast<std::size_t>(b)].front();
                offset.coeffs[static_cast<std::size_t>(var - 1)] =
                    (offset.coeffs[static_cast<std::size_t>(var - 1)] + half_q) % params.q;
            }
        }
        if ((sigma >> k) & 1) {
            offset.coeffs[static_cast<std::size_t>(params.m - 1)] =
                (offset.coeffs[static_cast<std::size_t>(params.m - 1)] + half_q) % params.q;
        }
        ZqSequence full = sequence_from_function(params, offset);
        members.push_back(truncate_to ? truncate(full, *truncate_to) : std::move(full));
    }
    return members;
}

}  // namespace

CzcsFamily build_set(const ConstructionParams& params) {
    CzcsFamily family;
    family.params = params;
    family.derived = derived_params(params);  // validates
    family.sequences = build_members(params, static_cast<std::size_t>(family.derived.length));
    return family;
}

std::vector<ZqSequence> build_untruncated_set(const ConstructionParams& params) {
    require_valid(params);
    return build_members(params, std::nullopt);
}

namespace {

// Set partitions of {1..n}, blocks listed by ascending smallest element.
// Canonical recursion: element 1 starts the first block, each later element
// joins an existing block or opens a new one.
void set_partitions(int n, std::vector<std::vector<int>>& current,
                    std::vector<std::vector<std::vector<int>>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    // build incrementally from 1..n instead: see wrapper below
    (void)current;
    (void)out;
}

void set_partitions_rec(int next, int n, std::vector<std::vector<int>>& current,
                        std::vector<std::vector<std::vector<int>>>& out) {
    if (next > n) {
        out.push_back(current);
        return;
    }
    for (auto& block : current) {
        block.push_back(next);
        set_partitions_rec(next + 1, n, current, out);
        block.pop_back();
    }
    current.push_back({next});
    set_partitions_rec(next + 1, n, current, out);
    current.pop_back();
}

std::vector<int> valid_deltas(const OrderedPartition& partition, int m) {
    std::vector<int> out{0};
    const auto& first = partition.blocks.front();
    for (int delta = 1; delta < m - 1 && delta <= static_cast<int>(first.size()); ++delta) {
        std::vector<int> prefix(first.begin(), first.begin() + delta);
        std::sort(prefix.begin(), prefix.end());
        bool ok = true;
        for (int i = 0; i < delta; ++i) ok &= prefix[static_cast<std::size_t>(i)] == i + 1;
        if (ok) out.push_back(delta);
    }
    return out;
}

}  // namespace

std::vector<ConstructionParams> enumerate_params(
    int m, int q, const std::optional<std::vector<int>>& delta_filter,
    const std::vector<std::vector<int>>& lambda_set) {
    if (m < 4) throw std::domain_error("enumerate_params: m must be >= 4");
    if (q < 2 || q % 2 != 0) throw std::domain_error("enumerate_params: q must be even and >= 2");

    const int n = m - 1;
    std::vector<std::vector<std::vector<int>>> partitions;
    std::vector<std::vector<int>> scratch;
    set_partitions_rec(1, n, scratch, partitions);
    std::sort(partitions.begin(), partitions.end());

    std::vector<std::vector<int>> lambdas = lambda_set;
    if (lambdas.empty()) lambdas.push_back(std::vector<int>(static_cast<std::size_t>(m), 0));

    std::vector<ConstructionParams> out;
    for (const auto& base : partitions) {
        // odometer over within-block permutations, lexicographic per block
        std::vector<std::vector<int>> blocks = base;
        for (auto& b : blocks) std::sort(b.begin(), b.end());
        while (true) {
            OrderedPartition partition{blocks};
            for (int delta : valid_deltas(partition, m)) {
                if (delta_filter &&
                    std::find(delta_filter->begin(), delta_filter->end(), delta) == delta_filter->end())
                    continue;
                for (const auto& lambda : lambdas) {
                    ConstructionParams params{m, q, delta, partition, lambda};
                    out.push_back(std::move(params));
                }
            }
            // advance odometer
            std::size_t pos = blocks.size();
            while (pos-- > 0) {
                if (std::next_permutation(blocks[pos].begin(), blocks[pos].end())) break;
                // wrapped back to sorted order; carry to previous block
                if (pos == 0) {
                    pos = static_cast<std::size_t>(-1);
                    break;
                }
            }
            if (pos == static_cast<std::size_t>(-1)) break;
        }
    }
    return out;
}

}  // namespace czcs
