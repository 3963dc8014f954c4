#include "cslnc/scalar_code.hpp"

#include <algorithm>
#include <limits>

#include "cslnc/errors.hpp"

namespace cslnc {

void ScalarCode::set_kernel(std::size_t d, std::size_t e, WeightBoundedPoly g) {
    if (d >= net.edge_count() || e >= net.edge_count() || net.edges()[d].head != net.edges()[e].tail)
        throw DimensionError("kernel (" + std::to_string(d) + ", " + std::to_string(e) + ") is not an adjacent pair");
    if (g.length() != ctx.block_length()) throw DimensionError("kernel polynomial has wrong length");
    if (g.is_zero())
        kernels.erase({d, e});
    else
        kernels[{d, e}] = std::move(g);
}

std::size_t ScalarCode::degree() const {
    std::size_t w = 0;
    for (const auto& [k, g] : kernels) w = std::max(w, g.weight());
    return w;
}

GlobalKernels global_kernels(const ScalarCode& code, std::size_t power) {
    const auto& net = code.net;
    const auto& F = code.ctx;
    const std::size_t w = net.omega();
    GlobalKernels f(net.edge_count(), std::vector<FieldElement>(w, F.zero()));
    const auto src = net.source_edges();
    for (std::size_t i = 0; i < src.size(); ++i) f[src[i]][i] = F.one();
    for (auto e : topo_order(net)) {
        const std::size_t v = net.edges()[e].tail;
        if (net.is_source(v)) continue;
        for (auto d : net.in_edges(v)) {
            auto it = code.kernels.find({d, e});
            if (it == code.kernels.end()) continue;
            const FieldElement k = F.eval_weighted(it->second, power);
            for (std::size_t i = 0; i < w; ++i)
                if (!f[d][i].is_zero()) f[e][i].rep ^= F.mul(f[d][i], k).rep;
        }
    }
    return f;
}

GlobalKernels global_kernels_closed_form(const ScalarCode& code, std::size_t power) {
    const auto& net = code.net;
    const auto& F = code.ctx;
    const auto src = net.source_edges();
    const std::size_t w = src.size();
    std::vector<std::size_t> rest;
    for (std::size_t e = 0; e < net.edge_count(); ++e)
        if (!net.is_source(net.edges()[e].tail)) rest.push_back(e);
    std::vector<long> pos(net.edge_count(), -1);
    for (std::size_t i = 0; i < rest.size(); ++i) pos[rest[i]] = static_cast<long>(i);
    std::vector<long> spos(net.edge_count(), -1);
    for (std::size_t i = 0; i < w; ++i) spos[src[i]] = static_cast<long>(i);

    FieldMatrix a_sn(F, w, rest.size());
    FieldMatrix a_nn = FieldMatrix::identity(F, rest.size());  // I - A_NN = I + A_NN
    for (const auto& [pair, g] : code.kernels) {
        const auto [d, e] = pair;
        const FieldElement k = F.eval_weighted(g, power);
        if (spos[d] >= 0)
            a_sn.at(spos[d], pos[e]) = k;
        else
            a_nn.at(pos[d], pos[e]) = F.add(a_nn.at(pos[d], pos[e]), k);
    }
    auto inv = field_invert(F, a_nn);
    if (!inv) throw DomainError("I - A is singular; the network is not acyclic");
    const FieldMatrix prod = field_mul(F, a_sn, *inv);
    GlobalKernels f(net.edge_count(), std::vector<FieldElement>(w, F.zero()));
    for (std::size_t i = 0; i < w; ++i) f[src[i]][i] = F.one();
    for (std::size_t j = 0; j < rest.size(); ++j)
        for (std::size_t i = 0; i < w; ++i) f[rest[j]][i] = prod.at(i, j);
    return f;
}

FieldMatrix receiver_matrix(const ScalarCode& code, const GlobalKernels& f, std::size_t r) {
    const auto& in = code.net.in_edges(code.net.receivers().at(r).node);
    const std::size_t w = code.net.omega();
    FieldMatrix m(code.ctx, w, in.size());
    for (std::size_t j = 0; j < in.size(); ++j)
        for (std::size_t i = 0; i < w; ++i) m.at(i, j) = f[in[j]][i];
    return m;
}

std::size_t candidate_count(std::size_t L, std::size_t delta) {
    std::size_t total = 0, binom = 1;
    for (std::size_t i = 0; i <= delta && i <= L; ++i) {
        if (i > 0) binom = binom * (L - i + 1) / i;
        total += binom;
        if (total > std::numeric_limits<std::size_t>::max() / 4) return std::numeric_limits<std::size_t>::max();
    }
    return total;
}

std::optional<std::size_t> corollary1_delta(std::size_t L, std::size_t receivers) {
    for (std::size_t d = 1; d <= (L - 1) / 2; ++d)
        if (candidate_count(L, d) >= receivers) return d;
    return std::nullopt;
}

std::vector<WeightBoundedPoly> candidate_set(const FieldCtx& ctx, std::size_t delta) {
    const std::size_t L = ctx.block_length();
    if (delta < 1 || delta > (L - 1) / 2) throw DomainError("delta must lie in [1, (L-1)/2]");
    std::vector<WeightBoundedPoly> out;
    out.push_back(WeightBoundedPoly::zero(L));
    for (std::size_t k = 1; k <= delta; ++k) {
        std::vector<std::size_t> idx(k);
        for (std::size_t i = 0; i < k; ++i) idx[i] = i;
        for (;;) {
            BitVector v(L);
            for (auto i : idx) v.set(i);
            out.emplace_back(std::move(v));
            std::size_t p = k;
            while (p > 0 && idx[p - 1] == L - k + p - 1) --p;
            if (p == 0) break;
            ++idx[p - 1];
            for (std::size_t q = p; q < k; ++q) idx[q] = idx[q - 1] + 1;
        }
    }
    return out;
}

ScalarCode lif_construct(const Network& net, const FieldCtx& ctx, std::size_t delta) {
    if (!net.is_multicast()) throw DomainError("lif_construct needs a multicast network");
    const auto cands = candidate_set(ctx, delta);
    std::vector<FieldElement> vals;
    for (const auto& c : cands) vals.push_back(ctx.eval_weighted(c));

    const std::size_t w = net.omega();
    const std::size_t nr = net.receivers().size();
    // on_path[r][e] = path index through e, pred[r][e] = previous edge on it
    std::vector<std::vector<long>> on_path(nr, std::vector<long>(net.edge_count(), -1));
    std::vector<std::vector<std::size_t>> pred(nr, std::vector<std::size_t>(net.edge_count(), SIZE_MAX));
    std::vector<std::vector<std::size_t>> frontier(nr);
    for (std::size_t r = 0; r < nr; ++r) {
        const auto paths = edge_disjoint_paths(net, r);
        for (std::size_t i = 0; i < paths.size(); ++i) {
            frontier[r].push_back(paths[i][0]);
            for (std::size_t k = 0; k < paths[i].size(); ++k) {
                on_path[r][paths[i][k]] = static_cast<long>(i);
                if (k) pred[r][paths[i][k]] = paths[i][k - 1];
            }
        }
    }

    ScalarCode code(ctx, net);
    GlobalKernels f(net.edge_count(), std::vector<FieldElement>(w, ctx.zero()));
    const auto src = net.source_edges();
    for (std::size_t i = 0; i < src.size(); ++i) f[src[i]][i] = ctx.one();

    auto frontier_ok = [&](std::size_t r, std::size_t slot, const std::vector<FieldElement>& fe) {
        FieldMatrix m(ctx, w, w);
        for (std::size_t j = 0; j < w; ++j)
            for (std::size_t i = 0; i < w; ++i) m.at(i, j) = j == slot ? fe[i] : f[frontier[r][j]][i];
        return field_rank(ctx, m) == w;
    };

    for (auto e : topo_order(net)) {
        if (net.is_source(net.edges()[e].tail)) continue;
        std::vector<std::size_t> users, preds;
        for (std::size_t r = 0; r < nr; ++r)
            if (on_path[r][e] >= 0) {
                users.push_back(r);
                preds.push_back(pred[r][e]);
            }
        if (users.empty()) continue;
        std::sort(preds.begin(), preds.end());
        preds.erase(std::unique(preds.begin(), preds.end()), preds.end());

        double space = 1;
        for (std::size_t i = 0; i < preds.size(); ++i) space *= static_cast<double>(cands.size());
        if (space > 5e6) throw DomainError("candidate search too large at edge " + std::to_string(e));

        std::vector<std::size_t> pick(preds.size(), 0);
        bool found = false;
        for (;;) {
            std::vector<FieldElement> fe(w, ctx.zero());
            for (std::size_t k = 0; k < preds.size(); ++k) {
                if (vals[pick[k]].is_zero()) continue;
                for (std::size_t i = 0; i < w; ++i)
                    if (!f[preds[k]][i].is_zero()) fe[i].rep ^= ctx.mul(f[preds[k]][i], vals[pick[k]]).rep;
            }
            bool ok = true;
            for (auto r : users)
                if (!frontier_ok(r, static_cast<std::size_t>(on_path[r][e]), fe)) {
                    ok = false;
                    break;
                }
            if (ok) {
                f[e] = fe;
                for (std::size_t k = 0; k < preds.size(); ++k) code.set_kernel(preds[k], e, cands[pick[k]]);
                for (auto r : users) frontier[r][on_path[r][e]] = e;
                found = true;
                break;
            }
            // odometer, last predecessor fastest
            std::size_t p = preds.size();
            while (p > 0 && ++pick[p - 1] == cands.size()) pick[--p] = 0;
            if (p == 0) break;
        }
        if (!found)
            throw DomainError("no kernel assignment from the delta = " + std::to_string(delta) +
                              " candidates keeps every frontier invertible at edge " + std::to_string(e));
    }
    return code;
}

FieldMatrix decoding_matrix(const ScalarCode& code, std::size_t r, std::size_t power) {
    const auto f = global_kernels(code, power);
    const FieldMatrix m = receiver_matrix(code, f, r);
    const auto coords = code.net.demanded_coordinates(r);
    FieldMatrix target(code.ctx, m.rows(), coords.size());
    for (std::size_t j = 0; j < coords.size(); ++j) target.at(coords[j], j) = code.ctx.one();
    auto d = field_solve_right(code.ctx, m, target);
    if (!d)
        throw DomainError("receiver '" + code.net.name(code.net.receivers()[r].node) +
                          "' cannot decode; the code is not a solution");
    return *d;
}

bool verify_scalar(const ScalarCode& code, std::size_t power) {
    const auto f = global_kernels(code, power);
    for (std::size_t r = 0; r < code.net.receivers().size(); ++r) {
        const FieldMatrix m = receiver_matrix(code, f, r);
        const auto coords = code.net.demanded_coordinates(r);
        FieldMatrix target(code.ctx, m.rows(), coords.size());
        for (std::size_t j = 0; j < coords.size(); ++j) target.at(coords[j], j) = code.ctx.one();
        if (!field_solve_right(code.ctx, m, target)) return false;
    }
    return true;
}

std::vector<std::vector<WeightBoundedPoly>> canonical_entries(const FieldCtx& ctx, const FieldMatrix& m) {
    std::vector<std::vector<WeightBoundedPoly>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(ctx.canonical_weight_rep(m.at(i, j)));
    return out;
}

}  // namespace cslnc
