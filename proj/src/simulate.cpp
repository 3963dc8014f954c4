#include "cslnc/simulate.hpp"

#include <sstream>

#include "cslnc/errors.hpp"

namespace cslnc {

std::vector<BitVector> random_units(std::size_t omega, std::size_t Lprime, Rng& rng) {
    std::vector<BitVector> out;
    for (std::size_t i = 0; i < omega; ++i) {
        BitVector v(Lprime);
        for (std::size_t j = 0; j < Lprime; ++j) v.set(j, coin(rng));
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

// Sum over columns of max(weight - 1, 0) for the vertical stack of `parts`.
std::uint64_t column_rule(const std::vector<const BitMatrix*>& parts, std::size_t cols) {
    std::vector<std::size_t> w(cols, 0);
    for (const auto* m : parts)
        for (std::size_t r = 0; r < m->rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) w[c] += m->get(r, c);
    std::uint64_t total = 0;
    for (auto x : w) total += x > 0 ? x - 1 : 0;
    return total;
}

}  // namespace

Transcript propagate(const FractionalCode& code, const std::vector<BitVector>& source_units) {
    const auto& net = code.net;
    const std::size_t L = code.L, Lp = code.Lprime;
    const auto src = net.source_edges();
    if (source_units.size() != src.size()) throw DimensionError("need one source unit per source edge");
    for (const auto& u : source_units)
        if (u.size() != Lp) throw DimensionError("source unit has wrong length");

    Transcript tr;
    tr.source_units = source_units;
    tr.data.assign(net.edge_count(), BitVector(L));
    tr.encode_xors.assign(net.edge_count(), 0);
    tr.recovered.resize(net.receivers().size());
    tr.decode_xors.assign(net.receivers().size(), 0);

    std::size_t off = 0;
    for (std::size_t k = 0; k < net.sources().size(); ++k) {
        const auto& outs = net.out_edges(net.sources()[k]);
        std::vector<BitVector> mine(source_units.begin() + off, source_units.begin() + off + outs.size());
        const BitVector sent = code.source_matrices.at(k).left_mul(BitVector::concat(mine));
        for (std::size_t i = 0; i < outs.size(); ++i) tr.data[outs[i]] = sent.slice(i * L, L);
        off += outs.size();
    }
    for (auto e : topo_order(net)) {
        const std::size_t v = net.edges()[e].tail;
        if (net.is_source(v)) continue;
        BitVector acc(L);
        std::size_t terms = 0;
        bool all_circ = true;
        std::vector<BitMatrix> dense_parts;
        for (auto d : net.in_edges(v)) {
            auto it = code.kernels.find({d, e});
            if (it == code.kernels.end()) continue;
            if (const auto* c = std::get_if<Circulant>(&it->second)) {
                c->apply_accumulate(acc, tr.data[d]);
                terms += c->degree();
                dense_parts.push_back(c->to_dense());
            } else {
                const auto& m = std::get<BitMatrix>(it->second);
                acc ^= m.left_mul(tr.data[d]);
                all_circ = false;
                dense_parts.push_back(m);
            }
        }
        tr.data[e] = std::move(acc);
        if (all_circ) {
            tr.encode_xors[e] = terms > 0 ? L * (terms - 1) : 0;
        } else {
            std::vector<const BitMatrix*> ptrs;
            for (const auto& m : dense_parts) ptrs.push_back(&m);
            tr.encode_xors[e] = column_rule(ptrs, L);
        }
    }
    return tr;
}

std::vector<BitVector> decode(const FractionalCode& code, Transcript& tr, std::size_t r) {
    const auto& in = code.net.in_edges(code.net.receivers().at(r).node);
    const std::size_t L = code.L, Lp = code.Lprime;
    const std::size_t wt = code.net.omega_t(r);
    std::vector<BitVector> out;
    std::uint64_t ops = 0;
    if (code.block_decoders.at(r) && Lp + 1 == L) {
        const auto& blocks = *code.block_decoders[r];
        for (std::size_t j = 0; j < wt; ++j) {
            BitVector acc(L);
            std::size_t terms = 0;
            for (std::size_t i = 0; i < in.size(); ++i) {
                blocks[i][j].apply_accumulate(acc, tr.data[in[i]]);
                terms += blocks[i][j].degree();
            }
            if (terms > 0) ops += L * (terms - 1);
            // times itilde: bit k = acc_0 + acc_{k+1}
            BitVector unit(Lp);
            for (std::size_t k = 0; k < Lp; ++k) unit.set(k, acc.get(0) != acc.get(k + 1));
            ops += L;
            out.push_back(std::move(unit));
        }
    } else {
        if (!code.decoders.at(r)) throw DomainError("receiver has no decoder");
        const BitMatrix& d = *code.decoders[r];
        std::vector<BitVector> parts;
        for (auto e : in) parts.push_back(tr.data[e]);
        const BitVector y = d.left_mul(BitVector::concat(parts));
        for (std::size_t j = 0; j < wt; ++j) out.push_back(y.slice(j * Lp, Lp));
        ops = column_rule({&d}, d.cols());
    }
    tr.decode_xors[r] = ops;
    tr.recovered[r] = out;
    return out;
}

OpReport op_report(const FractionalCode& code, const Transcript& tr) {
    OpReport rep;
    for (std::size_t e = 0; e < code.net.edge_count(); ++e) {
        if (code.net.is_source(code.net.edges()[e].tail)) continue;
        rep.rows.push_back({"edge " + std::to_string(e), tr.encode_xors[e],
                            static_cast<double>(tr.encode_xors[e]) / static_cast<double>(code.L)});
        rep.encode_total += tr.encode_xors[e];
    }
    for (std::size_t r = 0; r < code.net.receivers().size(); ++r) {
        if (!tr.recovered[r]) continue;
        const double bits = static_cast<double>(code.net.omega_t(r) * code.Lprime);
        rep.rows.push_back({"receiver " + code.net.name(code.net.receivers()[r].node), tr.decode_xors[r],
                            static_cast<double>(tr.decode_xors[r]) / bits});
        rep.decode_total += tr.decode_xors[r];
    }
    return rep;
}

std::string op_report_csv(const OpReport& rep) {
    std::ostringstream out;
    out << "scope,xor_count,per_bit\n";
    for (const auto& row : rep.rows) out << row.scope << ',' << row.xor_count << ',' << row.per_bit << '\n';
    return out.str();
}

BitVector serialize_gek(const BitMatrix& Fe, std::size_t L) {
    if (L == 0 || Fe.cols() != L || Fe.rows() % L) throw DimensionError("F_e must be (omega L) x L");
    std::vector<BitVector> parts;
    for (std::size_t i = 0; i < Fe.rows() / L; ++i) {
        auto c = Circulant::from_dense(Fe.block(i * L, 0, L, L));
        if (!c) throw DomainError("block " + std::to_string(i) + " of F_e is not circulant");
        parts.push_back(c->coeffs());
    }
    return BitVector::concat(parts);
}

BitMatrix deserialize_gek(const BitVector& bits, std::size_t L) {
    if (L == 0 || bits.size() % L) throw DimensionError("serialized kernel length is not a multiple of L");
    const std::size_t w = bits.size() / L;
    BitMatrix Fe(w * L, L);
    for (std::size_t i = 0; i < w; ++i) Fe.set_block(i * L, 0, Circulant(bits.slice(i * L, L)).to_dense());
    return Fe;
}

BitVector serialize_gek_dense(const BitMatrix& Fe) {
    std::vector<BitVector> rows;
    for (std::size_t r = 0; r < Fe.rows(); ++r) rows.push_back(Fe.row(r));
    return BitVector::concat(rows);
}

BitMatrix deserialize_gek_dense(const BitVector& bits, std::size_t L) {
    if (L == 0 || bits.size() % (L * L)) throw DimensionError("dense kernel length is not a multiple of L^2");
    BitMatrix Fe(bits.size() / L, L);
    for (std::size_t r = 0; r < Fe.rows(); ++r) Fe.set_row(r, bits.slice(r * L, L));
    return Fe;
}

FieldElement counted_mul(const FieldCtx& ctx, const FieldElement& a, const FieldElement& b, std::uint64_t& ops) {
    const std::size_t m = ctx.degree();
    std::vector<char> c(2 * m - 1, 0), touched(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const char t = a.rep.get(i) & b.rep.get(j);
            ++ops;  // AND
            if (touched[i + j]) {
                c[i + j] ^= t;
                ++ops;  // XOR
            } else {
                c[i + j] = t;
                touched[i + j] = 1;
            }
        }
    // reduce modulo f, high coefficient first
    const Poly2& f = ctx.modulus();
    std::vector<std::size_t> low;
    for (std::size_t i = 0; i < m; ++i)
        if (f.coeff(i)) low.push_back(i);
    for (std::size_t k = 2 * m - 2; k >= m; --k) {
        for (auto i : low) c[k - m + i] ^= c[k];
        ops += low.size();
        c[k] = 0;
    }
    FieldElement out = ctx.zero();
    for (std::size_t i = 0; i < m; ++i) out.rep.set(i, c[i]);
    return out;
}

ScalarTranscript propagate_scalar(const ScalarCode& code, const std::vector<FieldElement>& sources) {
    const auto& net = code.net;
    const auto src = net.source_edges();
    if (sources.size() != src.size()) throw DimensionError("need one symbol per source edge");
    ScalarTranscript tr;
    tr.data.assign(net.edge_count(), code.ctx.zero());
    tr.encode_ops.assign(net.edge_count(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) tr.data[src[i]] = sources[i];
    const std::size_t m = code.ctx.degree();
    for (auto e : topo_order(net)) {
        const std::size_t v = net.edges()[e].tail;
        if (net.is_source(v)) continue;
        bool first = true;
        FieldElement acc = code.ctx.zero();
        for (auto d : net.in_edges(v)) {
            auto it = code.kernels.find({d, e});
            if (it == code.kernels.end()) continue;
            const FieldElement prod =
                counted_mul(code.ctx, tr.data[d], code.ctx.eval_weighted(it->second), tr.encode_ops[e]);
            if (first) {
                acc = prod;
                first = false;
            } else {
                acc.rep ^= prod.rep;
                tr.encode_ops[e] += m;
            }
        }
        tr.data[e] = acc;
    }
    return tr;
}

std::vector<FieldElement> decode_scalar(const ScalarCode& code, const ScalarTranscript& tr, std::size_t r,
                                        std::uint64_t& ops) {
    const auto D = decoding_matrix(code, r);
    const auto& in = code.net.in_edges(code.net.receivers().at(r).node);
    const std::size_t m = code.ctx.degree();
    std::vector<FieldElement> out;
    for (std::size_t j = 0; j < D.cols(); ++j) {
        FieldElement acc = code.ctx.zero();
        for (std::size_t i = 0; i < in.size(); ++i) {
            const FieldElement p = counted_mul(code.ctx, tr.data[in[i]], D.at(i, j), ops);
            acc.rep ^= p.rep;
            if (i > 0) ops += m;
        }
        out.push_back(acc);
    }
    return out;
}

}  // namespace cslnc
