#include "cslnc/random_coding.hpp"

#include <cmath>
#include <numeric>
#include <thread>

#include "cslnc/errors.hpp"

namespace cslnc {

std::string scheme_name(Scheme s) { return s == Scheme::cshift ? "cshift" : "perm"; }

Scheme parse_scheme(const std::string& s) {
    if (s == "cshift") return Scheme::cshift;
    if (s == "perm") return Scheme::perm;
    throw DomainError("unknown scheme '" + s + "' (expected cshift or perm)");
}

BitMatrix random_permutation_kernel(std::size_t L, Rng& rng) {
    BitMatrix m(L, L);
    if (uniform_below(rng, L + 1) == L) return m;
    std::vector<std::size_t> p(L);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = L; i > 1; --i) std::swap(p[i - 1], p[uniform_below(rng, i)]);
    for (std::size_t r = 0; r < L; ++r) m.set(r, p[r]);
    return m;
}

namespace {
BitMatrix random_dense(std::size_t rows, std::size_t cols, Rng& rng) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        auto w = m.row_words(r);
        for (auto& x : w) x = rng();
        if (cols & 63) w.back() &= (std::uint64_t{1} << (cols & 63)) - 1;
    }
    return m;
}
}  // namespace

FractionalCode random_code(const TrialConfig& cfg, std::uint64_t trial_seed) {
    Rng rng(trial_seed);
    FractionalCode code(cfg.net, cfg.L, cfg.Lprime);
    const auto& net = cfg.net;
    for (auto e : topo_order(net)) {
        const std::size_t v = net.edges()[e].tail;
        if (net.is_source(v)) continue;
        for (auto d : net.in_edges(v)) {
            if (cfg.scheme == Scheme::cshift)
                code.set_kernel(d, e, Circulant::random_degree1(cfg.L, rng));
            else
                code.set_kernel(d, e, random_permutation_kernel(cfg.L, rng));
        }
    }
    for (auto s : net.sources()) {
        const std::size_t ws = net.out_edges(s).size();
        code.source_matrices.push_back(random_dense(ws * cfg.Lprime, ws * cfg.L, rng));
    }
    return code;
}

std::vector<bool> receiver_success(const FractionalCode& code) {
    const auto F = vector_global_kernels(code);
    const BitMatrix gs = code.source_matrix();
    std::vector<bool> ok;
    for (std::size_t r = 0; r < code.net.receivers().size(); ++r) {
        const BitMatrix a = mul(gs, receiver_kernel(code, F, r));
        ok.push_back(rank(a) >= code.net.omega_t(r) * code.Lprime);
    }
    return ok;
}

bool trial_success(const FractionalCode& code) {
    for (bool b : receiver_success(code))
        if (!b) return false;
    return true;
}

std::pair<double, double> wilson95(std::size_t successes, std::size_t trials) {
    if (trials == 0) return {0.0, 1.0};
    const double z = 1.959963984540054;
    const double n = static_cast<double>(trials), p = static_cast<double>(successes) / n;
    const double denom = 1 + z * z / n;
    const double centre = (p + z * z / (2 * n)) / denom;
    const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

TrialResult monte_carlo(const TrialConfig& cfg) {
    if (cfg.trials == 0) throw DomainError("trials must be >= 1");
    if (cfg.Lprime > cfg.L || cfg.L == 0) throw DomainError("need 0 < L' <= L");
    const std::size_t nr = cfg.net.receivers().size();
    const std::size_t jobs = std::max<std::size_t>(1, std::min(cfg.jobs, cfg.trials));
    std::vector<std::size_t> succ(jobs, 0);
    std::vector<std::vector<std::size_t>> fails(jobs, std::vector<std::size_t>(nr, 0));
    auto work = [&](std::size_t w) {
        for (std::size_t i = w; i < cfg.trials; i += jobs) {
            const auto ok = receiver_success(random_code(cfg, derive_seed(cfg.seed, i)));
            bool all = true;
            for (std::size_t r = 0; r < nr; ++r)
                if (!ok[r]) {
                    ++fails[w][r];
                    all = false;
                }
            succ[w] += all;
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < jobs; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    TrialResult res;
    res.trials = cfg.trials;
    res.receiver_failures.assign(nr, 0);
    for (std::size_t w = 0; w < jobs; ++w) {
        res.successes += succ[w];
        for (std::size_t r = 0; r < nr; ++r) res.receiver_failures[r] += fails[w][r];
    }
    res.estimate = static_cast<double>(res.successes) / static_cast<double>(res.trials);
    std::tie(res.wilson_lo, res.wilson_hi) = wilson95(res.successes, res.trials);
    return res;
}

double default_eps(std::size_t L) { return 2.0 * std::log2(static_cast<double>(L) + 1) / static_cast<double>(L); }

Theorem2Bound theorem2_bound(const Network& net, std::size_t L, double eps) {
    const double w = static_cast<double>(net.omega());
    const double E = static_cast<double>(net.edge_count());
    const double T = static_cast<double>(net.receivers().size());
    const double Ld = static_cast<double>(L);
    Theorem2Bound out;
    out.Lprime = static_cast<long>(std::floor((w - E * eps) * Ld / w));
    const double expo = -Ld * eps + std::log2(Ld + 1) + std::log2(T * E);
    out.bound = 1 - std::exp2(expo);
    out.vacuous = out.bound <= 0 || out.Lprime <= 0;
    return out;
}

Lemma3Result lemma3_check(std::size_t L, double eps, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) throw DomainError("samples must be >= 1");
    Lemma3Result res;
    res.samples = samples;
    const double threshold = static_cast<double>(L) * (1 - eps);
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(derive_seed(seed, i));
        BitMatrix m = random_dense(L, L, rng);
        const Circulant k = Circulant::random_degree1(L, rng);
        if (!k.is_zero()) m += k.to_dense();
        if (static_cast<double>(rank(m)) < threshold) ++res.events;
    }
    res.empirical = static_cast<double>(res.events) / static_cast<double>(samples);
    res.bound = (static_cast<double>(L) + 1) * std::exp2(-static_cast<double>(L) * eps);
    const double p = std::min(res.bound, 1.0);
    res.sigma = std::sqrt(p * (1 - p) / static_cast<double>(samples));
    res.within = res.empirical <= res.bound + 3 * res.sigma;
    return res;
}

}  // namespace cslnc
