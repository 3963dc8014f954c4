#include "cslnc/code_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "cslnc/errors.hpp"

namespace cslnc {

namespace {

std::vector<std::vector<std::string>> tokenize(std::string_view text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        lines.push_back(std::move(tok));
    }
    return lines;
}

std::size_t to_index(const std::string& s, std::size_t lineno) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw ParseError(lineno, "expected a number, got '" + s + "'");
    return v;
}

BitVector to_bits(const std::string& s, std::size_t len, std::size_t lineno) {
    if (s.size() != len)
        throw ParseError(lineno, "expected " + std::to_string(len) + " bits, got " + std::to_string(s.size()));
    try {
        return BitVector::from_string(s);
    } catch (const ParseError& e) {
        throw ParseError(lineno, e.what());
    }
}

BitMatrix to_matrix(const std::vector<std::string>& tok, std::size_t first, std::size_t cols, std::size_t lineno) {
    std::vector<BitVector> rows;
    for (std::size_t i = first; i < tok.size(); ++i) rows.push_back(to_bits(tok[i], cols, lineno));
    if (rows.empty()) throw ParseError(lineno, "matrix has no rows");
    return BitMatrix::from_row_vectors(rows);
}

void put_matrix(std::ostringstream& out, const BitMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) out << ' ' << m.row(r).to_string();
}

std::size_t receiver_index(const Network& net, const std::string& name, std::size_t lineno) {
    for (std::size_t r = 0; r < net.receivers().size(); ++r)
        if (net.name(net.receivers()[r].node) == name) return r;
    throw ParseError(lineno, "unknown receiver '" + name + "'");
}

}  // namespace

std::string serialize_scalar_code(const ScalarCode& code) {
    std::ostringstream out;
    out << "scalar " << code.ctx.block_length() << '\n';
    for (const auto& [p, g] : code.kernels)
        out << "kernel " << p.first << ' ' << p.second << ' ' << g.coeffs().to_string() << '\n';
    return out.str();
}

ScalarCode parse_scalar_code(std::string_view text, const Network& net) {
    const auto lines = tokenize(text);
    std::optional<ScalarCode> code;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& tok = lines[i];
        const std::size_t ln = i + 1;
        if (tok.empty()) continue;
        try {
            if (tok[0] == "scalar") {
                if (tok.size() != 2 || code) throw ParseError(ln, "expected a single 'scalar <L>' header");
                code.emplace(FieldCtx(to_index(tok[1], ln)), net);
            } else if (tok[0] == "kernel") {
                if (!code) throw ParseError(ln, "'scalar <L>' header must come first");
                if (tok.size() != 4) throw ParseError(ln, "expected: kernel <d> <e> <bits>");
                code->set_kernel(to_index(tok[1], ln), to_index(tok[2], ln),
                                 WeightBoundedPoly(to_bits(tok[3], code->ctx.block_length(), ln)));
            } else {
                throw ParseError(ln, "unknown keyword '" + tok[0] + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(ln, e.what());
        }
    }
    if (!code) throw ParseError(0, "missing 'scalar <L>' header");
    return std::move(*code);
}

std::string serialize_code(const FractionalCode& code) {
    std::ostringstream out;
    out << "code " << code.L << ' ' << code.Lprime << '\n';
    for (const auto& [p, k] : code.kernels) {
        if (const auto* c = std::get_if<Circulant>(&k)) {
            out << "kernel " << p.first << ' ' << p.second << ' ' << c->coeffs().to_string() << '\n';
        } else {
            out << "kmatrix " << p.first << ' ' << p.second;
            put_matrix(out, std::get<BitMatrix>(k));
            out << '\n';
        }
    }
    for (std::size_t s = 0; s < code.source_matrices.size(); ++s) {
        out << "gs " << code.net.name(code.net.sources()[s]);
        put_matrix(out, code.source_matrices[s]);
        out << '\n';
    }
    for (std::size_t r = 0; r < code.decoders.size(); ++r) {
        const std::string& name = code.net.name(code.net.receivers()[r].node);
        if (code.decoders[r]) {
            out << "decoder " << name;
            put_matrix(out, *code.decoders[r]);
            out << '\n';
        }
        if (code.block_decoders[r])
            for (std::size_t i = 0; i < code.block_decoders[r]->size(); ++i)
                for (std::size_t j = 0; j < (*code.block_decoders[r])[i].size(); ++j)
                    out << "dblock " << name << ' ' << i << ' ' << j << ' '
                        << (*code.block_decoders[r])[i][j].coeffs().to_string() << '\n';
    }
    return out.str();
}

FractionalCode parse_code(std::string_view text, const Network& net) {
    const auto lines = tokenize(text);
    std::optional<FractionalCode> code;
    std::vector<std::optional<BitMatrix>> gs(net.sources().size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto& tok = lines[i];
        const std::size_t ln = i + 1;
        if (tok.empty()) continue;
        try {
            const std::string& kw = tok[0];
            if (kw == "code") {
                if (tok.size() != 3 || code) throw ParseError(ln, "expected a single 'code <L> <L'>' header");
                code.emplace(net, to_index(tok[1], ln), to_index(tok[2], ln));
                continue;
            }
            if (!code) throw ParseError(ln, "'code <L> <L'>' header must come first");
            const std::size_t L = code->L;
            if (kw == "kernel") {
                if (tok.size() != 4) throw ParseError(ln, "expected: kernel <d> <e> <bits>");
                code->set_kernel(to_index(tok[1], ln), to_index(tok[2], ln), Circulant(to_bits(tok[3], L, ln)));
            } else if (kw == "kmatrix") {
                if (tok.size() != 3 + L) throw ParseError(ln, "expected: kmatrix <d> <e> followed by L rows");
                code->set_kernel(to_index(tok[1], ln), to_index(tok[2], ln), to_matrix(tok, 3, L, ln));
            } else if (kw == "gs") {
                if (tok.size() < 3) throw ParseError(ln, "expected: gs <source> <rows>");
                if (!net.has_node(tok[1]) || !net.is_source(net.node_id(tok[1])))
                    throw ParseError(ln, "unknown source '" + tok[1] + "'");
                const std::size_t k = net.source_index(net.node_id(tok[1]));
                gs[k] = to_matrix(tok, 2, net.out_edges(net.sources()[k]).size() * L, ln);
            } else if (kw == "decoder") {
                if (tok.size() < 3) throw ParseError(ln, "expected: decoder <receiver> <rows>");
                const std::size_t r = receiver_index(net, tok[1], ln);
                code->decoders[r] = to_matrix(tok, 2, net.omega_t(r) * code->Lprime, ln);
            } else if (kw == "dblock") {
                if (tok.size() != 5) throw ParseError(ln, "expected: dblock <receiver> <i> <j> <bits>");
                const std::size_t r = receiver_index(net, tok[1], ln);
                const std::size_t bi = to_index(tok[2], ln), bj = to_index(tok[3], ln);
                const std::size_t rows = net.in_edges(net.receivers()[r].node).size(), cols = net.omega_t(r);
                if (bi >= rows || bj >= cols) throw ParseError(ln, "decoder block index out of range");
                auto& blocks = code->block_decoders[r];
                if (!blocks) blocks.emplace(rows, std::vector<Circulant>(cols, Circulant::zero(L)));
                (*blocks)[bi][bj] = Circulant(to_bits(tok[4], L, ln));
            } else {
                throw ParseError(ln, "unknown keyword '" + kw + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError(ln, e.what());
        }
    }
    if (!code) throw ParseError(0, "missing 'code <L> <L'>' header");
    for (std::size_t k = 0; k < gs.size(); ++k) {
        if (!gs[k]) throw ParseError(0, "missing gs line for source '" + net.name(net.sources()[k]) + "'");
        code->source_matrices.push_back(std::move(*gs[k]));
    }
    return std::move(*code);
}

}  // namespace cslnc
