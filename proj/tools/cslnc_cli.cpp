#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cslnc/circulant.hpp"
#include "cslnc/code_io.hpp"
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

constexpr const char* kVersion = "0.1.0";

// Inputs read during the run, for the manifest.
std::map<std::string, std::string> g_inputs;

std::string fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_input(const std::string& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ParseError(0, "cannot open " + path);
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    g_inputs[path] = fnv1a(text);
    return text;
}

Network load_network(const std::string& path) { return parse_network(read_input(path)); }

std::uint64_t default_seed() {
    if (const char* s = std::getenv("CSLNC_SEED")) {
        char* end = nullptr;
        const auto v = std::strtoull(s, &end, 0);
        if (end && *end == 0) return v;
        throw ParseError(0, "CSLNC_SEED is not an integer");
    }
    return 1;
}

std::size_t default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

// bit i of the unit goes to bit (i % 8) of byte i / 8
std::string hex_dump(const BitVector& v) {
    std::string out;
    char buf[3];
    for (std::size_t b = 0; b * 8 < v.size(); ++b) {
        unsigned byte = 0;
        for (std::size_t i = 0; i < 8 && b * 8 + i < v.size(); ++i) byte |= unsigned(v.get(b * 8 + i)) << i;
        std::snprintf(buf, sizeof buf, "%02x", byte);
        out += buf;
    }
    return out;
}

std::size_t pick_delta(std::size_t L, const Network& net, long delta) {
    if (delta > 0) return static_cast<std::size_t>(delta);
    const auto d = corollary1_delta(L, net.receivers().size());
    return d ? *d : (L - 1) / 2;
}

// ---------------------------------------------------------------------------
// tables

BitMatrix gs_lift(std::size_t w, std::size_t L) {
    BitMatrix g(L - 1, L);
    for (std::size_t i = 0; i + 1 < L; ++i) g.set(i, i + 1);
    return kron(BitMatrix::identity(w), g);
}

Circulant random_weight(std::size_t L, std::size_t weight, Rng& rng) {
    std::vector<std::size_t> pos(L);
    for (std::size_t i = 0; i < L; ++i) pos[i] = i;
    BitVector c(L);
    for (std::size_t k = 0; k < weight; ++k) {
        std::swap(pos[k], pos[k + uniform_below(rng, L - k)]);
        c.set(pos[k]);
    }
    return Circulant(c);
}

// Per-bit counts at node r (eta = 2) and receiver t1 (omega = 2) of
// combination(4), every kernel and decoder block of weight `weight`.
std::pair<double, double> circulant_counts(std::size_t L, std::size_t weight, Rng& rng) {
    const auto net = gen_combination(4);
    FractionalCode code(net, L, L - 1);
    code.source_matrices = {gs_lift(2, L)};
    for (std::size_t e = 0; e < net.edge_count(); ++e) {
        if (net.is_source(net.edges()[e].tail)) continue;
        for (auto d : net.in_edges(net.edges()[e].tail)) code.set_kernel(d, e, random_weight(L, weight, rng));
    }
    for (std::size_t r = 0; r < net.receivers().size(); ++r) {
        std::vector<std::vector<Circulant>> b(2, std::vector<Circulant>(2));
        for (auto& row : b)
            for (auto& c : row) c = random_weight(L, (L - 1) / 2, rng);
        code.block_decoders[r] = b;
    }
    auto tr = propagate(code, random_units(2, L - 1, rng));
    decode(code, tr, 0);
    // edge 2 is r -> u1
    return {double(tr.encode_xors[2]) / double(L), double(tr.decode_xors[0]) / double(2 * (L - 1))};
}

std::pair<double, double> scalar_counts(std::size_t L, Rng& rng) {
    FieldCtx F(L);
    const auto net = gen_combination(4);
    ScalarCode code(F, net);
    // every kernel nonzero so that r mixes both inputs
    for (std::size_t e = 0; e < net.edge_count(); ++e) {
        if (net.is_source(net.edges()[e].tail)) continue;
        for (auto d : net.in_edges(net.edges()[e].tail)) code.set_kernel(d, e, WeightBoundedPoly::monomial(L, 0));
    }
    code.set_kernel(1, 3, WeightBoundedPoly::monomial(L, 1));
    code.set_kernel(1, 4, WeightBoundedPoly::monomial(L, 2));
    code.set_kernel(1, 5, WeightBoundedPoly::monomial(L, 3));
    std::vector<FieldElement> src(2, F.zero());
    for (auto& a : src)
        for (std::size_t j = 0; j + 1 < L; ++j) a.rep.set(j, coin(rng));
    const auto tr = propagate_scalar(code, src);
    std::uint64_t ops = 0;
    // t2 = {u1, u3}: the first receiver with an invertible pair
    decode_scalar(code, tr, 1, ops);
    const double m = double(L - 1);
    return {double(tr.encode_ops[2]) / m, double(ops) / (2 * m)};
}

int table1(std::uint64_t seed) {
    Rng rng(seed);
    std::printf("scheme,m,eta,omega,encode_per_bit,encode_formula,decode_per_bit,decode_formula\n");
    const double eta = 2, w = 2;
    for (std::size_t L : {5, 11, 13}) {
        const double m = double(L - 1);
        const auto s = scalar_counts(L, rng);
        std::printf("scalar-gf2m,%g,%g,%g,%.4f,>%g,%.4f,>%g\n", m, eta, w, s.first, 2 * eta * m, s.second,
                    w * (2 * m + 1));
        // a dense m x m kernel with no zero entry: eta m^2 ANDs and eta m^2 - m XORs
        const double vec_enc = (eta * m * m + eta * m * m - m) / m;
        const double vec_dec = (w * w * m * m + w * w * m * m - w * m) / (w * m);
        std::printf("vector-gf2,%g,%g,%g,%.4f,%g,%.4f,%g\n", m, eta, w, vec_enc, 2 * eta * m - 1, vec_dec,
                    2 * w * m - 1);
        const auto c = circulant_counts(L, (L - 1) / 2, rng);
        std::printf("cshift-half-degree,%g,%g,%g,%.4f,%g,%.4f,%g\n", m, eta, w, c.first, eta * m / 2, c.second,
                    w * (m + 1) / 2);
        const auto d = circulant_counts(L, 1, rng);
        std::printf("cshift-degree-1,%g,%g,%g,%.4f,%g,%.4f,%g\n", m, eta, w, d.first, eta - 1, d.second,
                    w * (m + 1) / 2);
    }
    return 0;
}

int table2(std::size_t trials, std::uint64_t seed, std::size_t jobs) {
    const auto net = gen_combination(4);
    std::printf("Lprime,L,scheme,trials,successes,estimate,wilson95_lo,wilson95_hi\n");
    for (std::size_t L : {16, 32, 64, 128}) {
        const std::size_t Lp = L - L / 16;
        for (auto scheme : {Scheme::cshift, Scheme::perm}) {
            const auto r = monte_carlo({net, L, Lp, scheme, trials, seed, jobs});
            std::printf("%zu,%zu,%s,%zu,%zu,%.4f,%.4f,%.4f\n", Lp, L, scheme_name(scheme).c_str(), r.trials,
                        r.successes, r.estimate, r.wilson_lo, r.wilson_hi);
            std::fflush(stdout);
        }
    }
    return 0;
}

int table3(std::uint64_t seed) {
    const auto net = gen_combination(4);
    const std::size_t w = net.omega();
    std::printf("scheme,L,omega,bits_per_edge\n");
    for (std::size_t L : {16, 32, 64, 128}) {
        const auto code = random_code({net, L, L - 1, Scheme::cshift, 1, seed, 1}, derive_seed(seed, L));
        const auto F = vector_global_kernels(code);
        // the last edge is downstream of every kernel draw
        const auto& Fe = F.back();
        // each block is one of L! permutations or zero
        const double perm_bits = double(w) * std::ceil(std::log2(std::tgamma(double(L) + 1) + 1));
        std::printf("scalar,%zu,%zu,%zu\n", L, w, w * L);
        std::printf("cshift,%zu,%zu,%zu\n", L, w, serialize_gek(Fe, L).size());
        std::printf("perm,%zu,%zu,%.0f\n", L, w, perm_bits);
        std::printf("vector,%zu,%zu,%zu\n", L, w, serialize_gek_dense(Fe).size());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular-shift linear network coding toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();
    app.failure_message(CLI::FailureMessage::help);
    std::string manifest_path;
    app.add_option("--manifest", manifest_path, "write a key=value run manifest here");

    std::uint64_t seed = 0;
    bool seed_given = false;
    auto add_seed = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "master seed (default: CSLNC_SEED or 1)")
            ->each([&](const std::string&) { seed_given = true; });
    };

    // gen
    auto* gen = app.add_subcommand("gen", "emit a topology in the network format");
    std::string topology;
    gen->add_option("--topology", topology, "example1 | butterfly | combination:n | swirl:w")->required();

    // primes
    auto* primes = app.add_subcommand("primes", "list primes with primitive root 2");
    std::size_t max_L = 0;
    primes->add_option("--max", max_L)->required();

    // solve
    auto* solve = app.add_subcommand("solve", "scalar code over GF(2^{L-1})");
    std::string net_path, code_path;
    std::size_t L = 0;
    long delta = 0;
    solve->add_option("--network", net_path)->required();
    solve->add_option("--L", L)->required();
    solve->add_option("--delta", delta, "kernel weight bound (default: smallest that counts enough)");
    add_seed(solve);

    // lift
    auto* lift = app.add_subcommand("lift", "circular-shift code from a scalar solution");
    std::string reference;
    lift->add_option("--network", net_path);
    lift->add_option("--L", L);
    lift->add_option("--delta", delta);
    lift->add_option("--code", code_path, "scalar code to lift instead of constructing one");
    lift->add_option("--reference", reference, "emit a built-in code: example1 | example2")
        ->check(CLI::IsMember({"example1", "example2"}));

    // verify
    auto* verify = app.add_subcommand("verify", "check that a code is a solution");
    verify->add_option("--network", net_path)->required();
    verify->add_option("--code", code_path)->required();

    // simulate
    auto* simulate = app.add_subcommand("simulate", "push data units through a code");
    std::string messages = "random:1";
    bool count_ops = false;
    simulate->add_option("--network", net_path)->required();
    simulate->add_option("--code", code_path)->required();
    simulate->add_option("--messages", messages, "random:SEED or a file of omega lines of L' bits");
    simulate->add_flag("--count-ops", count_ops);

    // random
    auto* random = app.add_subcommand("random", "Monte-Carlo success rate of random degree-1 codes");
    std::size_t Lprime = 0, trials = 1000, jobs = default_jobs();
    std::string scheme = "cshift";
    random->add_option("--network", net_path)->required();
    random->add_option("--L", L)->required();
    random->add_option("--Lprime", Lprime)->required();
    random->add_option("--scheme", scheme)->check(CLI::IsMember({"cshift", "perm"}));
    random->add_option("--trials", trials);
    random->add_option("--jobs", jobs);
    add_seed(random);

    // tables
    auto* tables = app.add_subcommand("tables", "recompute the operation, success-rate and overhead tables");
    int which = 0;
    tables->add_option("--which", which)->required()->check(CLI::Range(1, 3));
    tables->add_option("--trials", trials, "Monte-Carlo trials for --which 2");
    tables->add_option("--jobs", jobs);
    add_seed(tables);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    int rc = 0;
    CLI::App* sub = app.get_subcommands().front();
    try {
        if (!seed_given) seed = default_seed();
        if (sub == gen) {
            std::cout << serialize_network(gen_topology(topology));
        } else if (sub == primes) {
            for (auto p : admissible_lengths(max_L)) std::cout << p << '\n';
        } else if (sub == solve) {
            const auto net = load_network(net_path);
            const FieldCtx F(L);
            std::cout << serialize_scalar_code(lif_construct(net, F, pick_delta(L, net, delta)));
        } else if (sub == lift) {
            if (reference == "example1") {
                std::cout << serialize_code(reference_example1_code());
            } else if (reference == "example2") {
                std::cout << serialize_code(lift_code(reference_combination4_code()));
            } else {
                if (net_path.empty()) throw CLI::RequiredError("--network");
                const auto net = load_network(net_path);
                if (!code_path.empty()) {
                    std::cout << serialize_code(lift_code(parse_scalar_code(read_input(code_path), net)));
                } else {
                    if (L == 0) throw CLI::RequiredError("--L");
                    const FieldCtx F(L);
                    std::cout << serialize_code(lift_code(lif_construct(net, F, pick_delta(L, net, delta))));
                }
            }
        } else if (sub == verify) {
            const auto net = load_network(net_path);
            const std::string text = read_input(code_path);
            bool ok;
            if (text.find_first_not_of(" \t\r\n") != std::string::npos &&
                text.substr(text.find_first_not_of(" \t\r\n"), 6) == "scalar")
                ok = verify_scalar(parse_scalar_code(text, net));
            else
                ok = verify_fractional(parse_code(text, net));
            std::cout << "solution: " << (ok ? "true" : "false") << '\n';
            rc = ok ? 0 : 1;
        } else if (sub == simulate) {
            const auto net = load_network(net_path);
            const auto code = parse_code(read_input(code_path), net);
            std::vector<BitVector> units;
            if (messages.rfind("random:", 0) == 0) {
                const auto s = std::stoull(messages.substr(7), nullptr, 0);
                Rng rng(s);
                units = random_units(net.omega(), code.Lprime, rng);
            } else {
                std::istringstream in(read_input(messages));
                std::string line;
                std::size_t lineno = 0;
                while (std::getline(in, line)) {
                    ++lineno;
                    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
                    std::istringstream ls(line);
                    std::string bits;
                    if (!(ls >> bits)) continue;
                    if (bits.size() != code.Lprime || bits.find_first_not_of("01") != std::string::npos)
                        throw ParseError(lineno, "expected " + std::to_string(code.Lprime) + " bits");
                    units.push_back(BitVector::from_string(bits));
                }
                if (units.size() != net.omega())
                    throw ParseError(0, "expected " + std::to_string(net.omega()) + " message units");
            }
            auto tr = propagate(code, units);
            for (std::size_t i = 0; i < units.size(); ++i)
                std::cout << "unit " << i << ' ' << units[i].to_string() << '\n';
            for (std::size_t e = 0; e < net.edge_count(); ++e)
                std::cout << "edge " << e << ' ' << hex_dump(tr.data[e]) << '\n';
            bool all = true;
            for (std::size_t r = 0; r < net.receivers().size(); ++r) {
                const auto& name = net.name(net.receivers()[r].node);
                if (!code.decoders[r] && !code.block_decoders[r]) {
                    std::cout << "receiver " << name << " no-decoder\n";
                    all = false;
                    continue;
                }
                const auto got = decode(code, tr, r);
                const auto want = net.demanded_coordinates(r);
                bool ok = got.size() == want.size();
                for (std::size_t j = 0; ok && j < want.size(); ++j) ok = got[j] == units[want[j]];
                all = all && ok;
                std::cout << "receiver " << name << (ok ? " ok" : " wrong");
                for (const auto& g : got) std::cout << ' ' << g.to_string();
                std::cout << '\n';
            }
            if (count_ops) std::cout << '\n' << op_report_csv(op_report(code, tr));
            rc = all ? 0 : 1;
        } else if (sub == random) {
            const auto net = load_network(net_path);
            TrialConfig cfg{net, L, Lprime, parse_scheme(scheme), trials, seed, jobs};
            const auto r = monte_carlo(cfg);
            std::printf("scheme,L,Lprime,trials,successes,estimate,wilson95_lo,wilson95_hi\n");
            std::printf("%s,%zu,%zu,%zu,%zu,%.6f,%.6f,%.6f\n", scheme.c_str(), L, Lprime, r.trials, r.successes,
                        r.estimate, r.wilson_lo, r.wilson_hi);
        } else if (sub == tables) {
            rc = which == 1 ? table1(seed) : which == 2 ? table2(trials, seed, jobs) : table3(seed);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n' << sub->help();
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (!manifest_path.empty()) {
        std::ofstream m(manifest_path);
        m << "tool=cslnc\nversion=" << kVersion << "\nsubcommand=" << sub->get_name() << "\nseed=" << seed << '\n';
        std::string line;
        for (int i = 1; i < argc; ++i) line += (i > 1 ? " " : "") + std::string(argv[i]);
        m << "argv=" << line << '\n';
        for (const auto* opt : sub->get_options()) {
            if (opt->get_name() == "--help" || !opt->count()) continue;
            const auto& res = opt->results();
            std::string v;
            for (std::size_t i = 0; i < res.size(); ++i) v += (i ? "," : "") + res[i];
            std::string key = opt->get_name();
            key.erase(0, key.find_first_not_of('-'));
            m << "flag." << key << '=' << (v.empty() ? "true" : v) << '\n';
        }
        for (const auto& [path, digest] : g_inputs) m << "input." << path << "=fnv1a64:" << digest << '\n';
        m << "exit=" << rc << '\n';
    }
    return rc;
}
