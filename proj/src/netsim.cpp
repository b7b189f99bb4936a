#include "cacodes/netsim.hpp"

#include <random>

#include "cacodes/error.hpp"

namespace cacodes {

namespace {

constexpr std::size_t kDrawsPerDimension = 64;

enum class Stream : std::uint32_t { Channel = 1, Message = 2 };

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial, Stream stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32U),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

Vector random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> pick(0, f.q() - 1);
    Vector v(n);
    for (auto& x : v) x = pick(rng);
    return v;
}

Vector random_member(const Subspace& v, std::mt19937_64& rng) {
    const Field& f = v.field();
    const Vector coeffs = random_vector(f, v.dim(), rng);
    Vector out(v.ambient_n(), 0);
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(coeffs[i], v.basis()(i, j)));
    }
    return out;
}

}  // namespace

ChannelOutput channel_transmit(const Subspace& sent, const ChannelConfig& cfg, std::uint64_t trial) {
    if (cfg.erasures > sent.dim()) {
        fail("TooManyErasures", std::to_string(cfg.erasures) + " erasures on a " + std::to_string(sent.dim()) +
                                    "-dimensional codeword");
    }
    auto rng = trial_rng(cfg.seed, trial, Stream::Channel);
    const Field& f = sent.field();
    const std::size_t n = sent.ambient_n();

    Subspace received(f, n);
    if (cfg.erasures == 0) {
        received = sent;
    } else {
        const std::size_t target = sent.dim() - cfg.erasures;
        for (std::size_t draws = 0; received.dim() < target; ++draws) {
            if (draws == kDrawsPerDimension * (target + 1)) {
                fail("SamplingFailed", "could not draw " + std::to_string(target) + " independent vectors");
            }
            const Vector v = random_member(sent, rng);
            if (!received.contains(v)) received = sum(received, Subspace::from_rows(Matrix(f, 1, n, v)));
        }
    }

    std::size_t injected = 0;
    for (std::size_t e = 0; e < cfg.errors; ++e) {
        for (std::size_t draw = 0; draw < kDrawsPerDimension; ++draw) {
            const Vector v = random_vector(f, n, rng);
            if (received.contains(v)) continue;
            received = sum(received, Subspace::from_rows(Matrix(f, 1, n, v)));
            ++injected;
            break;
        }
    }
    return {std::move(received), injected};
}

DecodeResult decode_min_distance(const GrassmannianCode& code, const Subspace& received) {
    if (code.size() == 0) fail("EmptyCode", "cannot decode with an empty code");
    DecodeResult r;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const std::size_t d = subspace_distance(code.codewords()[i], received);
        if (r.nearest.empty() || d < r.distance) {
            r.distance = d;
            r.nearest.assign(1, i);
        } else if (d == r.distance) {
            r.nearest.push_back(i);
        }
    }
    if (r.nearest.size() == 1) r.decoded = r.nearest.front();
    return r;
}

TrialResult run_trial(const GrassmannianCode& code, const ChannelConfig& cfg, std::uint64_t trial) {
    if (code.size() == 0) fail("EmptyCode", "cannot simulate an empty code");
    auto rng = trial_rng(cfg.seed, trial, Stream::Message);
    std::uniform_int_distribution<std::size_t> pick(0, code.size() - 1);
    const std::size_t sent = pick(rng);
    auto [received, injected] = channel_transmit(code.codewords()[sent], cfg, trial);
    DecodeResult decoded = decode_min_distance(code, received);
    const std::size_t dist = subspace_distance(received, code.codewords()[sent]);
    return {sent, std::move(decoded), std::move(received), injected, dist};
}

SimulationStats simulate(const GrassmannianCode& code, const ChannelConfig& cfg, std::size_t trials) {
    if (trials == 0) fail("InvalidTrials", "at least one trial is required");
    SimulationStats s;
    s.trials = trials;
    if (code.size() >= 2) s.code_min_distance = min_distance(code);
    std::size_t distance_sum = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const TrialResult r = run_trial(code, cfg, t);
        const bool correct = r.decode.decoded == r.sent_index;
        if (correct) {
            ++s.successes;
        } else if (r.decode.ambiguous()) {
            ++s.ambiguities;
        } else {
            ++s.failures;
        }
        const bool guaranteed = !s.code_min_distance || 2 * r.distance_to_sent < *s.code_min_distance;
        if (guaranteed && !correct) ++s.guarantee_violations;
        distance_sum += r.distance_to_sent;
        ++s.distance_histogram[r.distance_to_sent];
    }
    s.success_rate = static_cast<double>(s.successes) / static_cast<double>(trials);
    s.ambiguity_rate = static_cast<double>(s.ambiguities) / static_cast<double>(trials);
    s.mean_distance_to_sent = static_cast<double>(distance_sum) / static_cast<double>(trials);
    return s;
}

}  // namespace cacodes
