// One line per criterion: "PASS n ..." or "FAIL n ...". With arguments, only the
// listed criteria run. Exit status is the number of failures (capped at 1).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cslnc/circulant.hpp"
#include "cslnc/errors.hpp"
#include "cslnc/field.hpp"
#include "cslnc/lift.hpp"
#include "cslnc/network.hpp"
#include "cslnc/random_coding.hpp"
#include "cslnc/reference_codes.hpp"
#include "cslnc/scalar_code.hpp"
#include "cslnc/simulate.hpp"

using namespace cslnc;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) note << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Circulant circ(std::size_t L, std::initializer_list<std::size_t> powers) {
    Circulant c = Circulant::zero(L);
    for (auto p : powers) c += Circulant::shift_power(L, p);
    return c;
}

using Blocks = std::vector<std::vector<Circulant>>;

// D(C_L) (I (x) itilde) as a dense matrix
BitMatrix dense_decoder(const Blocks& b, std::size_t L) {
    std::vector<BitMatrix> rows;
    for (const auto& row : b) {
        std::vector<BitMatrix> parts;
        for (const auto& c : row) parts.push_back(c.to_dense());
        rows.push_back(BitMatrix::hcat(parts));
    }
    return mul(BitMatrix::vcat(rows), kron(BitMatrix::identity(b[0].size()), itilde(L)));
}

// ---------------------------------------------------------------------------

void example2(Outcome& out) {
    const auto t0 = Clock::now();
    const auto scalar = reference_combination4_code();
    const auto code = lift_code(scalar);
    const std::size_t L = 5;
    out.require(code.L == 5 && code.Lprime == 4, "rate");

    // edges: e1 = 0, e2 = 1, r u_j = 2 + j - 1
    const auto I = Circulant::identity(L);
    auto kernel = [&](std::size_t d, std::size_t e) {
        auto it = code.kernels.find({d, e});
        return it == code.kernels.end() ? Circulant::zero(L) : std::get<Circulant>(it->second);
    };
    for (std::size_t j = 0; j < 4; ++j) out.require(kernel(0, 2 + j) == I, "K(e1, ru)");
    out.require(kernel(1, 2).is_zero(), "K(e2, ru1)");
    out.require(kernel(1, 3) == I, "K(e2, ru2)");
    out.require(kernel(1, 4) == circ(L, {1}), "K(e2, ru3)");
    out.require(kernel(1, 5) == circ(L, {2}), "K(e2, ru4)");
    for (std::size_t j = 0; j < 4; ++j)
        for (auto e : code.net.out_edges(code.net.edges()[2 + j].head)) out.require(kernel(2 + j, e) == I, "K at u");
    std::size_t expected_kernels = 7 + 12;
    out.require(code.kernels.size() == expected_kernels, "kernel count");

    const Circulant Z = Circulant::zero(L);
    const std::vector<Blocks> listed{
        {{I, I}, {Z, I}},
        {{I, circ(L, {4})}, {Z, circ(L, {4})}},
        {{I, circ(L, {4, 2})}, {Z, circ(L, {4, 2})}},
        {{circ(L, {4, 2}), circ(L, {3, 1})}, {circ(L, {3, 1}), circ(L, {3, 1})}},
        {{circ(L, {4, 3}), circ(L, {2, 1})}, {circ(L, {2, 1}), circ(L, {2, 1})}},
        {{circ(L, {4, 2}), circ(L, {2, 0})}, {circ(L, {3, 1}), circ(L, {2, 0})}},
    };
    // t3 = {u1, u4} receives m1 and m1 + C^2 m2, so the second column must be C^{-2} = C^3
    const Blocks d3_fixed{{I, circ(L, {3})}, {Z, circ(L, {3})}};
    for (std::size_t r = 0; r < 6; ++r) {
        const auto& got = *code.block_decoders[r];
        const Blocks& want = r == 2 ? d3_fixed : listed[r];
        out.require(got == want, "D" + std::to_string(r + 1));
    }
    out.require(verify_fractional(code), "verify_fractional");

    // with C^4 + C^2 in place of C^3 receiver t3 cannot decode
    FractionalCode wrong = code;
    wrong.block_decoders[2] = listed[2];
    wrong.decoders[2] = dense_decoder(listed[2], L);
    const bool variant_d3_fails = !verify_fractional(wrong);
    out.require(variant_d3_fails, "C^4+C^2 variant of D3 should fail");

    // scalar decoders carry the same entries
    const auto d6 = canonical_entries(scalar.ctx, decoding_matrix(scalar, 5));
    out.require(d6[0][0].to_string() == "x^4+x^2" && d6[0][1].to_string() == "x^2+1" &&
                    d6[1][0].to_string() == "x^3+x" && d6[1][1].to_string() == "x^2+1",
                "scalar D6");

    const double s = seconds_since(t0);
    out.require(s < 1.0, "time");
    out.note << "kernels and D1..D6 match, D3 = [[I, C^3],[0, C^3]] (the C^4+C^2 variant gives "
             << (variant_d3_fails ? "a non-solution" : "a solution") << "); " << s << " s";
}

void example1(Outcome& out) {
    const auto code = reference_example1_code();
    const BitMatrix K = BitMatrix::from_strings({"010", "000", "011"});
    out.require(dense(code.kernels.at({0, 2})) == K, "K(e1,e3)");
    out.require(dense(code.kernels.at({1, 3})) == K, "K(e2,e4)");
    for (auto p : {EdgePair{0, 3}, EdgePair{1, 2}})
        out.require(!code.kernels.count(p) || dense(code.kernels.at(p)).is_zero(), "zero kernels");
    const BitMatrix Gs = BitMatrix::from_strings({"100000", "000100", "001000", "000001"});
    const BitMatrix Dt = BitMatrix::from_strings({"0000", "1000", "1010", "0000", "0100", "0101"});
    out.require(code.source_matrices.at(0) == Gs, "G_s");
    out.require(code.decoders.at(0) && *code.decoders[0] == Dt, "D_t");

    const auto F = receiver_kernel(code, vector_global_kernels(code), 0);
    const BitMatrix F_kernels = BitMatrix::from_strings({"010000", "000000", "011000", "000010", "000000", "000011"});
    const BitMatrix F_extra = BitMatrix::from_strings({"010000", "000000", "011000", "000010", "000000", "010011"});
    out.require(F == F_kernels, "F from kernels");
    out.require(mul(mul(Gs, F), Dt) == BitMatrix::identity(4), "G F D = I");
    const bool extra_fails = !(mul(mul(Gs, F_extra), Dt) == BitMatrix::identity(4));
    out.require(verify_fractional(code), "verify_fractional");

    // every message
    for (unsigned m = 0; m < 16; ++m) {
        const std::vector<BitVector> units{BitVector::from_bits({int(m & 1), int((m >> 1) & 1)}),
                                           BitVector::from_bits({int((m >> 2) & 1), int((m >> 3) & 1)})};
        auto tr = propagate(code, units);
        // [m_e3 m_e4] D_t = [m11 m12 m21 m22]
        out.require(decode(code, tr, 0) == units, "decode " + std::to_string(m));
        const BitVector y = Dt.left_mul(BitVector::concat(std::vector<BitVector>{tr.data[2], tr.data[3]}));
        out.require(y == BitVector::concat(units), "direct product");
    }
    out.note << "G_s, kernels, D_t match; G F D = I_4; all 16 messages decode; F with an extra bit at row 6 col 2 "
             << (extra_fails ? "does not" : "does") << " give I_4";
}

void lifted_end_to_end(Outcome& out) {
    const auto t0 = Clock::now();
    std::vector<std::pair<std::string, Network>> nets{{"butterfly", gen_butterfly()},
                                                      {"combination:4", gen_combination(4)},
                                                      {"combination:5", gen_combination(5)},
                                                      {"combination:6", gen_combination(6)},
                                                      {"swirl:3", gen_swirl(3)}};
    std::size_t cases = 0;
    for (std::size_t L : {5, 11, 13}) {
        FieldCtx F(L);
        for (const auto& [name, net] : nets) {
            const auto d = corollary1_delta(L, net.receivers().size());
            const std::size_t delta = d ? *d : (L - 1) / 2;
            if (!d) out.note << name << " at L=" << L << ": no delta meets the count, using " << delta << "; ";
            try {
                const auto scalar = lif_construct(net, F, delta);
                const auto code = lift_code(scalar);
                const std::string tag = name + " L=" + std::to_string(L);
                out.require(verify_fractional(code), tag + " verify");
                out.require(code.max_degree() <= delta, tag + " degree");
                Rng rng(derive_seed(1000 + L, cases));
                for (int t = 0; t < 100; ++t) {
                    const auto u = random_units(net.omega(), L - 1, rng);
                    auto tr = propagate(code, u);
                    for (std::size_t r = 0; r < net.receivers().size(); ++r)
                        if (decode(code, tr, r) != u) out.require(false, tag + " round trip");
                }
            } catch (const std::exception& e) {
                out.require(false, name + " L=" + std::to_string(L) + ": " + e.what());
            }
            ++cases;
        }
    }
    const double s = seconds_since(t0);
    out.require(s < 60.0, "time");
    out.note << cases << " network/length cases, 100 round trips each; " << s << " s";
}

void table2(Outcome& out) {
    const auto t0 = Clock::now();
    const auto net = gen_combination(4);
    const std::size_t Ls[] = {16, 32, 64, 128};
    const double want_c[] = {0.1055, 0.5894, 0.7031, 0.9996};
    const double want_p[] = {0.0168, 0.3358, 0.9349, 0.9998};
    const std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
    for (int k = 0; k < 4; ++k) {
        const std::size_t L = Ls[k], Lp = L - L / 16;
        for (auto scheme : {Scheme::cshift, Scheme::perm}) {
            TrialConfig cfg{net, L, Lp, scheme, 10000, 2024, jobs};
            const auto res = monte_carlo(cfg);
            const double want = scheme == Scheme::cshift ? want_c[k] : want_p[k];
            const bool near = std::abs(res.estimate - want) <= 0.05;
            out.require(near, scheme_name(scheme) + " (" + std::to_string(Lp) + "," + std::to_string(L) + ")");
            char buf[160];
            std::snprintf(buf, sizeof buf, "%s(%zu,%zu)=%.4f[%.4f,%.4f] vs %.4f%s; ", scheme_name(scheme).c_str(), Lp,
                          L, res.estimate, res.wilson_lo, res.wilson_hi, want, near ? "" : " OUT");
            out.note << buf;
        }
    }
    const double s = seconds_since(t0);
    out.require(s < 600.0, "time");
    out.note << "10^4 trials each; " << s << " s";
}

void circulant_rank(Outcome& out) {
    const auto t0 = Clock::now();
    std::size_t count = 0;
    for (std::size_t L = 1; L <= 12; ++L)
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << L); ++v) {
            BitVector c(L);
            for (std::size_t i = 0; i < L; ++i) c.set(i, (v >> i) & 1);
            const Circulant a(c);
            if (circ_rank(a) != rank(a.to_dense())) out.require(false, "L=" + std::to_string(L) + " v=" + c.to_string());
            ++count;
        }
    const double s = seconds_since(t0);
    out.require(s < 30.0, "time");
    out.note << count << " coefficient vectors; " << s << " s";
}

void bijection(Outcome& out) {
    const auto t0 = Clock::now();
    for (std::size_t L : {3, 5, 11, 13}) {
        FieldCtx F(L);
        const std::size_t m = L - 1, half = (L - 1) / 2;
        std::set<std::string> images;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
            FieldElement a = F.zero();
            for (std::size_t i = 0; i < m; ++i) a.rep.set(i, (v >> i) & 1);
            const auto g = F.canonical_weight_rep(a);
            if (g.weight() > half || !(F.eval_weighted(g) == a)) out.require(false, "round trip L=" + std::to_string(L));
            images.insert(g.coeffs().to_string());
        }
        out.require(images.size() == (std::size_t{1} << m), "injective L=" + std::to_string(L));
        // and every weight-bounded vector is hit: count them
        std::size_t bounded = 0;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << L); ++v)
            if (static_cast<std::size_t>(__builtin_popcountll(v)) <= half) {
                BitVector c(L);
                for (std::size_t i = 0; i < L; ++i) c.set(i, (v >> i) & 1);
                if (!images.count(c.to_string())) out.require(false, "surjective L=" + std::to_string(L));
                const WeightBoundedPoly g(c);
                if (!(F.canonical_weight_rep(F.eval_weighted(g)) == g)) out.require(false, "inverse round trip");
                ++bounded;
            }
        out.require(bounded == images.size(), "size L=" + std::to_string(L));
    }
    const double s = seconds_since(t0);
    out.require(s < 10.0, "time");
    out.note << "L in {3,5,11,13}; " << s << " s";
}

void diagonalization(Outcome& out) {
    const auto t0 = Clock::now();
    for (std::size_t L : {3, 5, 11, 13}) out.require(verify_diagonalization(FieldCtx(L)), "L=" + std::to_string(L));
    const double s = seconds_since(t0);
    out.require(s < 30.0, "time");
    out.note << "L in {3,5,11,13}; " << s << " s";
}

void invertible_pairs(Outcome& out) {
    Rng rng(808);
    std::size_t counter = 0;
    for (std::size_t L = 4; L <= 16; ++L) {
        auto draw = [&] {
            for (;;) {
                BitVector c(L);
                for (std::size_t i = 0; i < L; ++i) c.set(i, coin(rng));
                const Circulant a(c);
                if (rank(a.to_dense()) == L) return a;
            }
        };
        for (int i = 0; i < 10000; ++i) {
            const auto a = draw(), b = draw();
            if (rank((a + b).to_dense()) >= L) ++counter;
        }
    }
    out.require(counter == 0, "counterexample");
    out.note << counter << " counterexamples in 13 x 10^4 pairs";
}

void permutation_pairs(Outcome& out) {
    std::size_t pairs = 0, counter = 0;
    auto perm_matrix = [](const std::vector<std::size_t>& p) {
        BitMatrix m(p.size(), p.size());
        for (std::size_t i = 0; i < p.size(); ++i) m.set(i, p[i]);
        return m;
    };
    for (std::size_t L = 1; L <= 5; ++L) {
        std::vector<std::vector<std::size_t>> all;
        std::vector<std::size_t> p(L);
        std::iota(p.begin(), p.end(), 0);
        do all.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        std::vector<BitMatrix> mats;
        for (const auto& q : all) mats.push_back(perm_matrix(q));
        for (std::size_t i = 0; i < mats.size(); ++i)
            for (std::size_t j = i + 1; j < mats.size(); ++j) {
                ++pairs;
                if (rank(mats[i] + mats[j]) >= L) ++counter;
            }
    }
    Rng rng(909);
    for (std::size_t L = 2; L <= 64; ++L)
        for (int i = 0; i < 10000; ++i) {
            BitMatrix a = random_permutation_kernel(L, rng), b = random_permutation_kernel(L, rng);
            while (a.is_zero()) a = random_permutation_kernel(L, rng);
            while (b.is_zero() || b == a) b = random_permutation_kernel(L, rng);
            ++pairs;
            if (rank(a + b) >= L) ++counter;
        }
    out.require(counter == 0, "counterexample");
    out.note << counter << " counterexamples in " << pairs << " pairs";
}

void op_accounting(Outcome& out) {
    Rng rng(1010);
    // (a) one node with eta in-edges of full degree delta
    {
        const std::size_t L = 11;
        for (std::size_t eta = 1; eta <= 3; ++eta)
            for (std::size_t delta = 1; delta <= 5; ++delta) {
                Network net;
                net.add_source("s");
                for (std::size_t i = 0; i < eta; ++i) net.add_edge("s", "v");
                const std::size_t e = net.add_edge("v", "t");
                net.add_receiver("t");
                FractionalCode code(net, L, L);
                code.source_matrices = {BitMatrix::identity(eta * L)};
                for (std::size_t d = 0; d < eta; ++d) {
                    std::vector<std::size_t> pos(L);
                    std::iota(pos.begin(), pos.end(), 0);
                    BitVector c(L);
                    for (std::size_t k = 0; k < delta; ++k) {
                        std::swap(pos[k], pos[k + uniform_below(rng, L - k)]);
                        c.set(pos[k]);
                    }
                    code.set_kernel(d, e, Circulant(c));
                }
                const auto tr = propagate(code, random_units(eta, L, rng));
                out.require(tr.encode_xors[e] == L * (delta * eta - 1),
                            "encode eta=" + std::to_string(eta) + " delta=" + std::to_string(delta));
            }
    }
    // (b) degree-1 codes with every kernel a nonzero shift
    for (const auto& net : {gen_combination(4), gen_swirl(3), gen_butterfly(), gen_combination(6)}) {
        const std::size_t L = 16;
        FractionalCode code(net, L, L);
        for (std::size_t k = 0; k < net.sources().size(); ++k)
            code.source_matrices.push_back(BitMatrix::identity(net.out_edges(net.sources()[k]).size() * L));
        for (std::size_t e = 0; e < net.edge_count(); ++e) {
            const std::size_t v = net.edges()[e].tail;
            if (net.is_source(v)) continue;
            for (auto d : net.in_edges(v)) code.set_kernel(d, e, Circulant::shift_power(L, uniform_below(rng, L)));
        }
        const auto tr = propagate(code, random_units(net.omega(), L, rng));
        const auto rep = op_report(code, tr);
        for (const auto& row : rep.rows) {
            if (row.scope.rfind("edge ", 0) != 0) continue;
            const std::size_t e = std::stoul(row.scope.substr(5));
            const std::size_t eta = net.in_edges(net.edges()[e].tail).size();
            out.require(tr.encode_xors[e] == L * (eta - 1), "degree-1 count");
            out.require(row.per_bit == static_cast<double>(eta - 1), "degree-1 per bit");
        }
    }
    // (c) lifted decoders
    std::size_t equal_cases = 0;
    {
        const auto code = lift_code(reference_combination4_code());
        const std::size_t L = 5, w = 2;
        auto tr = propagate(code, random_units(2, 4, rng));
        for (std::size_t r = 0; r < 6; ++r) {
            decode(code, tr, r);
            out.require(2 * tr.decode_xors[r] <= w * w * L * (L - 1), "decode bound");
        }
        // t6 has every block of weight (L-1)/2
        out.require(2 * tr.decode_xors[5] == w * w * L * (L - 1), "t6 equality");
        ++equal_cases;
    }
    for (std::size_t L : {5, 11, 13}) {
        FieldCtx F(L);
        for (const auto& net : {gen_butterfly(), gen_combination(5), gen_swirl(3)}) {
            const auto d = corollary1_delta(L, net.receivers().size());
            auto code = lift_code(lif_construct(net, F, d ? *d : (L - 1) / 2));
            const std::size_t w = net.omega();
            auto tr = propagate(code, random_units(w, L - 1, rng));
            for (std::size_t r = 0; r < net.receivers().size(); ++r) {
                decode(code, tr, r);
                out.require(2 * tr.decode_xors[r] <= w * w * L * (L - 1), "decode bound");
            }
            // full-weight blocks reach the bound
            for (auto& blocks : code.block_decoders)
                for (auto& row : *blocks)
                    for (auto& c : row) {
                        BitVector v(L);
                        for (std::size_t k = 0; k < (L - 1) / 2; ++k) v.set(k);
                        c = Circulant(v.rotated(uniform_below(rng, L)));
                    }
            for (std::size_t r = 0; r < net.receivers().size(); ++r) {
                decode(code, tr, r);
                out.require(2 * tr.decode_xors[r] == w * w * L * (L - 1), "decode equality");
                ++equal_cases;
            }
        }
    }
    // (d) scalar transport against eta(2m^2+m) and omega^2 m(2m+1)
    std::size_t scalar_edges = 0;
    for (std::size_t L : {5, 11, 13}) {
        FieldCtx F(L);
        const std::uint64_t m = L - 1;
        const std::uint64_t mult = m * m + (m - 1) * (m - 1) + (m - 1) * m;
        for (const auto& net : {gen_combination(4), gen_butterfly(), gen_swirl(3)}) {
            const auto d = corollary1_delta(L, net.receivers().size());
            const auto code = lif_construct(net, F, d ? *d : (L - 1) / 2);
            std::vector<FieldElement> src;
            for (std::size_t i = 0; i < net.omega(); ++i) {
                FieldElement a = F.zero();
                for (std::size_t j = 0; j < m; ++j) a.rep.set(j, coin(rng));
                src.push_back(a);
            }
            const auto tr = propagate_scalar(code, src);
            for (std::size_t e = 0; e < net.edge_count(); ++e) {
                const std::size_t v = net.edges()[e].tail;
                if (net.is_source(v)) continue;
                std::uint64_t eta = 0;
                for (auto dd : net.in_edges(v)) eta += code.kernels.count({dd, e});
                if (eta == 0) continue;
                out.require(tr.encode_ops[e] == eta * mult + (eta - 1) * m, "scalar encode exact");
                out.require(tr.encode_ops[e] >= eta * (2 * m * m + m), "scalar encode bound");
                ++scalar_edges;
            }
            const std::uint64_t w = net.omega();
            for (std::size_t r = 0; r < net.receivers().size(); ++r) {
                std::uint64_t ops = 0;
                const auto got = decode_scalar(code, tr, r, ops);
                out.require(got == src, "scalar decode");
                out.require(ops == w * w * mult + w * (w - 1) * m, "scalar decode exact");
                out.require(ops >= w * w * m * (2 * m + 1), "scalar decode bound");
            }
        }
    }
    out.note << "encode L(delta eta - 1) for eta 1..3, delta 1..5; degree-1 per-bit eta-1; decode <= w^2 L(L-1)/2 with "
             << equal_cases << " equality cases; " << scalar_edges << " scalar edges above the bound (L >= 5)";
}

void overhead(Outcome& out) {
    std::size_t edges = 0;
    for (const auto& net : {gen_combination(4), gen_swirl(3)})
        for (std::size_t L : {16, 32, 64}) {
            TrialConfig cfg{net, L, L - 1, Scheme::cshift, 1, 0, 1};
            for (int t = 0; t < 5; ++t) {
                const auto code = random_code(cfg, derive_seed(1111, t));
                const std::size_t w = net.omega();
                for (const auto& Fe : vector_global_kernels(code)) {
                    const auto s = serialize_gek(Fe, L);
                    out.require(s.size() == w * L, "compact size");
                    out.require(deserialize_gek(s, L) == Fe, "compact round trip");
                    const auto dz = serialize_gek_dense(Fe);
                    out.require(dz.size() == w * L * L, "dense size");
                    out.require(deserialize_gek_dense(dz, L) == Fe, "dense round trip");
                    ++edges;
                }
            }
        }
    out.note << edges << " edges: " << "omega L bits compact, omega L^2 bits dense";
}

void bounds(Outcome& out) {
    const auto t0 = Clock::now();
    const std::pair<std::size_t, double> lemma_cases[] = {{16, 0.0625}, {16, 0.25}, {16, 0.375}, {16, 0.5}, {32, 0.25},
                                                          {32, 0.3},  {64, 0.15},  {64, 0.25}};
    std::uint64_t seed = 1212;
    for (const auto& [L, eps] : lemma_cases) {
        const auto r = lemma3_check(L, eps, 10000, seed++);
        out.require(r.within, "rank bound L=" + std::to_string(L));
        char buf[120];
        std::snprintf(buf, sizeof buf, "L=%zu eps=%.3g: %.4f vs %.4g; ", L, eps, r.empirical, r.bound);
        out.note << buf;
    }
    const auto net = gen_combination(4);
    const std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
    const std::tuple<std::size_t, double, std::size_t> thm_cases[] = {{128, 0.11, 2000}, {256, 0.1, 1000}, {512, 0.06, 300}};
    for (const auto& [L, eps, trials] : thm_cases) {
        const auto b = theorem2_bound(net, L, eps);
        if (b.vacuous) {
            out.note << "L=" << L << " vacuous; ";
            continue;
        }
        for (auto scheme : {Scheme::cshift, Scheme::perm}) {
            TrialConfig cfg{net, L, static_cast<std::size_t>(b.Lprime), scheme, trials, 1313 + L, jobs};
            const auto r = monte_carlo(cfg);
            out.require(r.estimate >= b.bound, "bound L=" + std::to_string(L));
            char buf[140];
            std::snprintf(buf, sizeof buf, "%s (%ld,%zu): %.4f >= %.4f; ", scheme_name(scheme).c_str(), b.Lprime, L,
                          r.estimate, b.bound);
            out.note << buf;
        }
    }
    out.note << seconds_since(t0) << " s";
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"combination(4) reference code", example2},
        {"three-node reference code", example1},
        {"lifted constructions end to end", lifted_end_to_end},
        {"random coding success table", table2},
        {"circulant rank formula", circulant_rank},
        {"weight-bounded representation bijection", bijection},
        {"vandermonde diagonalization", diagonalization},
        {"sums of invertible circulants", invertible_pairs},
        {"sums of permutation matrices", permutation_pairs},
        {"operation counts", op_accounting},
        {"global kernel overhead", overhead},
        {"bound sanity", bounds},
    };
    std::vector<std::size_t> which;
    for (int i = 1; i < argc; ++i) {
        const long n = std::strtol(argv[i], nullptr, 10);
        if (n < 1 || n > static_cast<long>(criteria.size())) {
            std::fprintf(stderr, "usage: %s [criterion 1..%zu ...]\n", argv[0], criteria.size());
            return 2;
        }
        which.push_back(static_cast<std::size_t>(n));
    }
    if (which.empty())
        for (std::size_t n = 1; n <= criteria.size(); ++n) which.push_back(n);

    int failures = 0;
    for (auto n : which) {
        Outcome out;
        try {
            criteria[n - 1].second(out);
        } catch (const std::exception& e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        std::printf("%s %zu %s: %s\n", out.ok ? "PASS" : "FAIL", n, criteria[n - 1].first.c_str(),
                    out.note.str().c_str());
        std::fflush(stdout);
        failures += !out.ok;
    }
    return failures ? 1 : 0;
}
