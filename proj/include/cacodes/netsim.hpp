#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cacodes/subspace.hpp"

namespace cacodes {

/// Operator channel: drop `erasures` dimensions of the sent subspace and
/// inject `errors` dimensions drawn from the ambient space.
struct ChannelConfig {
    std::size_t erasures = 0;
    std::size_t errors = 0;
    std::uint64_t seed = 0;
};

struct ChannelOutput {
    Subspace received;
    /// Injected dimensions that actually enlarged the received space.
    std::size_t injected_dims = 0;
};

/// U = W + E with W a random (dim V - erasures)-subspace of V. Deterministic
/// in (cfg.seed, trial). Throws TooManyErasures, SamplingFailed.
ChannelOutput channel_transmit(const Subspace& sent, const ChannelConfig& cfg, std::uint64_t trial);

struct DecodeResult {
    /// Set when a unique nearest codeword exists.
    std::optional<std::size_t> decoded;
    /// Every codeword index at the minimum distance (size > 1 means ambiguous).
    std::vector<std::size_t> nearest;
    std::size_t distance = 0;

    bool ambiguous() const noexcept { return nearest.size() > 1; }
};

/// Minimum subspace distance decoding. Throws EmptyCode, AmbientMismatch.
DecodeResult decode_min_distance(const GrassmannianCode& code, const Subspace& received);

struct TrialResult {
    std::size_t sent_index = 0;
    DecodeResult decode;
    Subspace received;
    std::size_t injected_dims = 0;
    std::size_t distance_to_sent = 0;
};

/// One channel use: picks the sent codeword from the trial's stream,
/// transmits it and decodes.
TrialResult run_trial(const GrassmannianCode& code, const ChannelConfig& cfg, std::uint64_t trial);

struct SimulationStats {
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t ambiguities = 0;
    std::size_t failures = 0;  // decoded to a wrong codeword
    /// Trials with 2 d(U, sent) < D that were not decoded correctly.
    std::size_t guarantee_violations = 0;
    std::optional<std::size_t> code_min_distance;
    double success_rate = 0.0;
    double ambiguity_rate = 0.0;
    double mean_distance_to_sent = 0.0;
    /// d(U, sent) -> trial count.
    std::map<std::size_t, std::size_t> distance_histogram;
};

/// Throws InvalidTrials when trials == 0.
SimulationStats simulate(const GrassmannianCode& code, const ChannelConfig& cfg, std::size_t trials);

}  // namespace cacodes
