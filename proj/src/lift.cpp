#include "cslnc/lift.hpp"

#include "cslnc/errors.hpp"

namespace cslnc {

BitMatrix dense(const LocalKernel& k) {
    if (const auto* c = std::get_if<Circulant>(&k)) return c->to_dense();
    return std::get<BitMatrix>(k);
}

FractionalCode::FractionalCode(Network n, std::size_t L_, std::size_t Lp)
    : net(std::move(n)), L(L_), Lprime(Lp), decoders(net.receivers().size()),
      block_decoders(net.receivers().size()) {
    if (L == 0 || Lprime > L) throw DimensionError("need 0 < L' <= L");
}

void FractionalCode::set_kernel(std::size_t d, std::size_t e, LocalKernel k) {
    if (d >= net.edge_count() || e >= net.edge_count() || net.edges()[d].head != net.edges()[e].tail)
        throw DimensionError("kernel (" + std::to_string(d) + ", " + std::to_string(e) + ") is not an adjacent pair");
    if (const auto* c = std::get_if<Circulant>(&k)) {
        if (c->size() != L) throw DimensionError("circulant kernel has wrong size");
        if (c->is_zero()) {
            kernels.erase({d, e});
            return;
        }
    } else {
        const auto& m = std::get<BitMatrix>(k);
        if (m.rows() != L || m.cols() != L) throw DimensionError("kernel matrix has wrong shape");
        if (m.is_zero()) {
            kernels.erase({d, e});
            return;
        }
    }
    kernels.insert_or_assign({d, e}, std::move(k));
}

bool FractionalCode::all_circulant() const {
    for (const auto& [p, k] : kernels)
        if (!std::holds_alternative<Circulant>(k)) return false;
    return true;
}

std::size_t FractionalCode::max_degree() const {
    std::size_t deg = 0;
    for (const auto& [p, k] : kernels) {
        const auto* c = std::get_if<Circulant>(&k);
        if (!c) throw DomainError("code has a non-circulant kernel");
        deg = std::max(deg, c->degree());
    }
    return deg;
}

BitMatrix FractionalCode::source_matrix() const {
    const std::size_t w = net.omega();
    BitMatrix g(w * Lprime, w * L);
    std::size_t off = 0;
    for (std::size_t k = 0; k < net.sources().size(); ++k) {
        const std::size_t ws = net.out_edges(net.sources()[k]).size();
        const BitMatrix& gs = source_matrices.at(k);
        if (gs.rows() != ws * Lprime || gs.cols() != ws * L) throw DimensionError("G_s has wrong shape");
        g.set_block(off * Lprime, off * L, gs);
        off += ws;
    }
    return g;
}

BitMatrix itilde(std::size_t L) {
    BitMatrix m(L, L - 1);
    for (std::size_t j = 0; j + 1 < L; ++j) {
        m.set(0, j);
        m.set(j + 1, j);
    }
    return m;
}

FractionalCode lift_code(const ScalarCode& code) {
    if (!verify_scalar(code)) throw DomainError("scalar code is not a solution; nothing to lift");
    const std::size_t L = code.ctx.block_length();
    FractionalCode out(code.net, L, L - 1);
    for (const auto& [pair, g] : code.kernels) out.set_kernel(pair.first, pair.second, Circulant::substitute(g));

    BitMatrix embed(L - 1, L);  // [0 | I_{L-1}]
    for (std::size_t i = 0; i + 1 < L; ++i) embed.set(i, i + 1);
    for (auto s : code.net.sources())
        out.source_matrices.push_back(kron(BitMatrix::identity(code.net.out_edges(s).size()), embed));

    const BitMatrix it = itilde(L);
    for (std::size_t r = 0; r < code.net.receivers().size(); ++r) {
        const auto entries = canonical_entries(code.ctx, decoding_matrix(code, r));
        std::vector<std::vector<Circulant>> blocks(entries.size());
        const std::size_t cols = entries.empty() ? 0 : entries[0].size();
        BitMatrix dc(entries.size() * L, cols * L);
        for (std::size_t i = 0; i < entries.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                blocks[i].push_back(Circulant::substitute(entries[i][j]));
                dc.set_block(i * L, j * L, blocks[i][j].to_dense());
            }
        out.decoders[r] = mul(dc, kron(BitMatrix::identity(cols), it));
        out.block_decoders[r] = std::move(blocks);
    }
    out.origin = code;
    return out;
}

namespace {

// acc += F * K, F is (rows x L)
void accumulate_times(BitMatrix& acc, const BitMatrix& F, const LocalKernel& k) {
    if (const auto* c = std::get_if<Circulant>(&k)) {
        std::vector<std::size_t> shifts;
        for (std::size_t j = 0; j < c->size(); ++j)
            if (c->coeffs().get(j)) shifts.push_back(j);
        for (std::size_t r = 0; r < F.rows(); ++r) {
            const BitVector row = F.row(r);
            if (row.is_zero()) continue;
            BitVector a = acc.row(r);
            for (auto j : shifts) a.xor_rotated(row, j);
            acc.set_row(r, a);
        }
    } else {
        acc += mul(F, std::get<BitMatrix>(k));
    }
}

}  // namespace

std::vector<BitMatrix> vector_global_kernels(const FractionalCode& code) {
    const auto& net = code.net;
    const std::size_t w = net.omega(), L = code.L;
    std::vector<BitMatrix> F(net.edge_count(), BitMatrix(w * L, L));
    const auto src = net.source_edges();
    for (std::size_t i = 0; i < src.size(); ++i) F[src[i]].set_block(i * L, 0, BitMatrix::identity(L));
    for (auto e : topo_order(net)) {
        const std::size_t v = net.edges()[e].tail;
        if (net.is_source(v)) continue;
        for (auto d : net.in_edges(v)) {
            auto it = code.kernels.find({d, e});
            if (it != code.kernels.end()) accumulate_times(F[e], F[d], it->second);
        }
    }
    return F;
}

BitMatrix receiver_kernel(const FractionalCode& code, const std::vector<BitMatrix>& F, std::size_t r) {
    std::vector<BitMatrix> parts;
    for (auto e : code.net.in_edges(code.net.receivers().at(r).node)) parts.push_back(F[e]);
    if (parts.empty()) return BitMatrix(code.net.omega() * code.L, 0);
    return BitMatrix::hcat(parts);
}

BitMatrix demand_target(const FractionalCode& code, std::size_t r) {
    const auto coords = code.net.demanded_coordinates(r);
    const std::size_t Lp = code.Lprime;
    BitMatrix u(code.net.omega() * Lp, coords.size() * Lp);
    for (std::size_t j = 0; j < coords.size(); ++j) u.set_block(coords[j] * Lp, j * Lp, BitMatrix::identity(Lp));
    return u;
}

bool verify_fractional(const FractionalCode& code) {
    const auto F = vector_global_kernels(code);
    const BitMatrix gs = code.source_matrix();
    for (std::size_t r = 0; r < code.net.receivers().size(); ++r) {
        if (!code.decoders[r]) return false;
        const BitMatrix a = mul(gs, receiver_kernel(code, F, r));
        const BitMatrix& d = *code.decoders[r];
        if (d.rows() != a.cols()) return false;
        if (mul(a, d) != demand_target(code, r)) return false;
    }
    return true;
}

std::vector<bool> solvable_rank_check(const FractionalCode& code, FractionalCode* synthesize_into) {
    const auto F = vector_global_kernels(code);
    const BitMatrix gs = code.source_matrix();
    const std::size_t w = code.net.omega();
    std::vector<bool> ok;
    for (std::size_t r = 0; r < code.net.receivers().size(); ++r) {
        const BitMatrix a = mul(gs, receiver_kernel(code, F, r));
        const std::size_t wt = code.net.omega_t(r);
        if (wt == w && !synthesize_into) {
            ok.push_back(rank(a) >= w * code.Lprime);
            continue;
        }
        auto d = solve_right(a, demand_target(code, r));
        ok.push_back(d.has_value());
        if (d && synthesize_into) synthesize_into->decoders.at(r) = std::move(*d);
    }
    return ok;
}

}  // namespace cslnc
