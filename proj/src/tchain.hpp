#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fraction.hpp"
#include "rational.hpp"

namespace tcb {

/// [b1,...,br] -> [2, b1, ..., br + 1]
Chain t_step_a(const Chain& c);

/// [b1,...,br] -> [b1 + 1, ..., br, 2]
Chain t_step_b(const Chain& c);

bool is_t_chain(const Chain& c);

/// True for the two index-two shapes [4] and [3,2,...,2,3].
bool is_seed_chain(const Chain& c);

/// Replayable derivation of a T-chain: start from the seed and apply the
/// step word left to right ('A' prepends, 'B' appends).
struct TChainCertificate {
    Chain seed;
    std::string word;
    Chain chain;
};

/// Certificate for a T-chain, or nullopt when the chain is not of type T.
/// Every T-chain has exactly one derivation: a non-seed T-chain carries a
/// weight 2 on exactly one end, which pins the last step.
std::optional<TChainCertificate> derive_certificate(const Chain& c);

/// All T-chains of length <= max_len, sorted lexicographically by weights.
/// Reversed chains are kept as distinct entries.
std::vector<Chain> enumerate_tchains(int max_len);

/// (alpha_1, alpha_r) = ((q+1)/n, (q'+1)/n) for the chain's fraction.
std::pair<Rat, Rat> endpoint_alphas(const Chain& c);

}  // namespace tcb
