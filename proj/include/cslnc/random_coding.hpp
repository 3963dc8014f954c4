#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cslnc/lift.hpp"
#include "cslnc/network.hpp"
#include "cslnc/rng.hpp"

namespace cslnc {

enum class Scheme { cshift, perm };

std::string scheme_name(Scheme s);
/// "cshift" or "perm"; throws DomainError otherwise.
Scheme parse_scheme(const std::string& s);

struct TrialConfig {
    Network net;
    std::size_t L = 0;
    std::size_t Lprime = 0;
    Scheme scheme = Scheme::cshift;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    /// Worker threads; results do not depend on it.
    std::size_t jobs = 1;
};

struct TrialResult {
    std::size_t successes = 0;
    std::size_t trials = 0;
    double estimate = 0;
    /// Trials in which receiver r could not decode.
    std::vector<std::size_t> receiver_failures;
    double wilson_lo = 0, wilson_hi = 0;
};

/// Uniform L x L permutation matrix with probability L/(L+1), zero otherwise.
BitMatrix random_permutation_kernel(std::size_t L, Rng& rng);

/// Kernels drawn for every adjacent pair in topological order of the out-edge,
/// in-edge order within a node; then G_s uniform for each source.
FractionalCode random_code(const TrialConfig& cfg, std::uint64_t trial_seed);

/// Per-receiver rank(G_S [F_e]_{In(t)}) >= omega_t L'.
std::vector<bool> receiver_success(const FractionalCode& code);
bool trial_success(const FractionalCode& code);

TrialResult monte_carlo(const TrialConfig& cfg);

/// 95% Wilson score interval.
std::pair<double, double> wilson95(std::size_t successes, std::size_t trials);

struct Theorem2Bound {
    double bound;
    long Lprime;      // floor((omega - |E| eps) L / omega)
    bool vacuous;     // bound <= 0 or Lprime <= 0
};
Theorem2Bound theorem2_bound(const Network& net, std::size_t L, double eps);
/// 2 log2(L+1) / L.
double default_eps(std::size_t L);

struct Lemma3Result {
    std::size_t samples = 0;
    std::size_t events = 0;   // rank(M + K) < L(1 - eps)
    double empirical = 0;
    double bound = 0;         // (L+1) 2^{-L eps}
    double sigma = 0;         // binomial standard error at the bound, capped at probability 1
    bool within = false;      // empirical <= bound + 3 sigma
};
Lemma3Result lemma3_check(std::size_t L, double eps, std::size_t samples, std::uint64_t seed);

}  // namespace cslnc
