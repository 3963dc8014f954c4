#include "cslnc/network.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "cslnc/errors.hpp"

namespace cslnc {

std::size_t Network::add_node(std::string_view name) {
    if (auto it = ids_.find(name); it != ids_.end()) return it->second;
    const std::size_t id = names_.size();
    names_.emplace_back(name);
    ids_.emplace(std::string(name), id);
    in_.emplace_back();
    out_.emplace_back();
    return id;
}

std::size_t Network::add_edge(std::size_t tail, std::size_t head) {
    if (tail >= node_count() || head >= node_count()) throw DimensionError("edge endpoint out of range");
    const std::size_t idx = edges_.size();
    edges_.push_back({tail, head});
    out_[tail].push_back(idx);
    in_[head].push_back(idx);
    return idx;
}

std::size_t Network::add_edge(std::string_view tail, std::string_view head) {
    const std::size_t t = add_node(tail);
    return add_edge(t, add_node(head));
}

void Network::add_source(std::string_view name) {
    const std::size_t id = add_node(name);
    if (is_source(id)) throw DomainError("source '" + std::string(name) + "' listed twice");
    sources_.push_back(id);
}

void Network::add_receiver(std::string_view name, std::vector<std::size_t> demands) {
    if (demands.empty()) {
        demands.resize(sources_.size());
        std::iota(demands.begin(), demands.end(), 0);
    }
    std::sort(demands.begin(), demands.end());
    demands.erase(std::unique(demands.begin(), demands.end()), demands.end());
    for (auto d : demands)
        if (d >= sources_.size()) throw DimensionError("receiver demands an unknown source");
    receivers_.push_back({add_node(name), std::move(demands)});
}

std::size_t Network::node_id(std::string_view name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) throw DimensionError("unknown node '" + std::string(name) + "'");
    return it->second;
}

bool Network::is_source(std::size_t node) const {
    return std::find(sources_.begin(), sources_.end(), node) != sources_.end();
}

std::size_t Network::source_index(std::size_t node) const {
    auto it = std::find(sources_.begin(), sources_.end(), node);
    if (it == sources_.end()) throw DimensionError("node is not a source");
    return static_cast<std::size_t>(it - sources_.begin());
}

std::vector<std::size_t> Network::source_edges() const {
    std::vector<std::size_t> out;
    for (auto s : sources_) out.insert(out.end(), out_[s].begin(), out_[s].end());
    return out;
}

std::vector<std::size_t> Network::demanded_coordinates(std::size_t r) const {
    std::vector<std::size_t> out;
    std::size_t base = 0;
    const auto& dem = receivers_.at(r).demands;
    for (std::size_t k = 0; k < sources_.size(); ++k) {
        const std::size_t deg = out_[sources_[k]].size();
        if (std::binary_search(dem.begin(), dem.end(), k))
            for (std::size_t j = 0; j < deg; ++j) out.push_back(base + j);
        base += deg;
    }
    return out;
}

namespace {

// Kahn order over nodes, smallest id first among ready nodes. Empty on a cycle.
std::vector<std::size_t> node_order(const Network& net) {
    std::vector<std::size_t> indeg(net.node_count());
    for (const auto& e : net.edges()) ++indeg[e.head];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < net.node_count(); ++v)
        if (!indeg[v]) ready.push(v);
    std::vector<std::size_t> order;
    while (!ready.empty()) {
        const std::size_t v = ready.top();
        ready.pop();
        order.push_back(v);
        for (auto e : net.out_edges(v))
            if (--indeg[net.edges()[e].head] == 0) ready.push(net.edges()[e].head);
    }
    if (order.size() != net.node_count()) return {};
    return order;
}

}  // namespace

void Network::validate() const {
    if (sources_.empty()) throw DomainError("network has no source");
    if (node_count() && node_order(*this).empty()) throw DomainError("network has a cycle");
    for (auto s : sources_)
        if (!in_[s].empty()) throw DomainError("source '" + names_[s] + "' has incoming edges");
    for (const auto& r : receivers_) {
        if (is_source(r.node)) throw DomainError("receiver '" + names_[r.node] + "' is a source");
        for (auto e : in_[r.node])
            if (is_source(edges_[e].tail))
                throw DomainError("edge " + std::to_string(e) + " leads from a source into a receiver");
    }
}

bool Network::is_multicast() const {
    if (sources_.size() != 1) return false;
    const std::size_t w = omega();
    for (const auto& r : receivers_) {
        if (r.demands.size() != 1) return false;
        if (max_flow(*this, sources_[0], {r.node}) != w) return false;
    }
    return true;
}

std::vector<std::size_t> topo_order(const Network& net) {
    const auto order = node_order(net);
    if (net.node_count() && order.empty()) throw DomainError("network has a cycle");
    std::vector<std::size_t> pos(net.node_count());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    std::vector<std::size_t> out = net.source_edges();
    std::vector<std::size_t> rest;
    for (std::size_t e = 0; e < net.edge_count(); ++e)
        if (!net.is_source(net.edges()[e].tail)) rest.push_back(e);
    std::stable_sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
        return pos[net.edges()[a].tail] < pos[net.edges()[b].tail];
    });
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

// ---------------------------------------------------------------- max-flow

namespace {

struct FlowGraph {
    struct Arc {
        std::size_t to, rev;
        long cap;
        long edge;  // network edge index, or -1 for helper arcs
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowGraph(std::size_t n) : adj(n) {}
    void add(std::size_t u, std::size_t v, long cap, long edge) {
        adj[u].push_back({v, adj[v].size(), cap, edge});
        adj[v].push_back({u, adj[u].size() - 1, 0, -1});
    }
    // BFS augmenting paths, one unit at a time
    std::size_t run(std::size_t s, std::size_t t) {
        std::size_t flow = 0;
        for (;;) {
            std::vector<std::pair<std::size_t, std::size_t>> prev(adj.size(), {SIZE_MAX, 0});
            std::deque<std::size_t> q{s};
            prev[s] = {s, 0};
            while (!q.empty() && prev[t].first == SIZE_MAX) {
                const std::size_t u = q.front();
                q.pop_front();
                for (std::size_t i = 0; i < adj[u].size(); ++i) {
                    const auto& a = adj[u][i];
                    if (a.cap > 0 && prev[a.to].first == SIZE_MAX) {
                        prev[a.to] = {u, i};
                        q.push_back(a.to);
                    }
                }
            }
            if (prev[t].first == SIZE_MAX) return flow;
            for (std::size_t v = t; v != s;) {
                auto [u, i] = prev[v];
                auto& a = adj[u][i];
                a.cap -= 1;
                adj[v][a.rev].cap += 1;
                v = u;
            }
            ++flow;
        }
    }
    // unit flow carried by each network edge
    std::vector<char> edge_flow(std::size_t edges) const {
        std::vector<char> f(edges, 0);
        for (const auto& arcs : adj)
            for (const auto& a : arcs)
                if (a.edge >= 0 && a.cap == 0) f[static_cast<std::size_t>(a.edge)] = 1;
        return f;
    }
};

constexpr long kBig = std::numeric_limits<int>::max();

FlowGraph build(const Network& net, std::size_t extra) {
    FlowGraph g(net.node_count() + extra);
    for (std::size_t e = 0; e < net.edge_count(); ++e)
        g.add(net.edges()[e].tail, net.edges()[e].head, 1, static_cast<long>(e));
    return g;
}

}  // namespace

std::size_t max_flow(const Network& net, std::size_t from, const std::vector<std::size_t>& to) {
    if (from >= net.node_count()) throw DimensionError("max_flow: unknown node");
    FlowGraph g = build(net, 1);
    const std::size_t sink = net.node_count();
    for (auto v : to) {
        if (v >= net.node_count()) throw DimensionError("max_flow: unknown node");
        if (v == from) return 0;
        g.add(v, sink, kBig, -1);
    }
    return g.run(from, sink);
}

std::vector<std::vector<std::size_t>> edge_disjoint_paths(const Network& net, std::size_t r) {
    const Receiver& rec = net.receivers().at(r);
    FlowGraph g = build(net, 1);
    const std::size_t super = net.node_count();
    for (auto k : rec.demands) g.add(super, net.sources()[k], kBig, -1);
    const std::size_t need = net.omega_t(r);
    const std::size_t got = g.run(super, rec.node);
    if (got < need)
        throw DomainError("receiver '" + net.name(rec.node) + "' has max-flow " + std::to_string(got) + " < " +
                          std::to_string(need));
    auto flow = g.edge_flow(net.edge_count());
    std::vector<std::vector<std::size_t>> paths;
    for (auto k : rec.demands)
        for (auto first : net.out_edges(net.sources()[k])) {
            if (!flow[first]) continue;
            flow[first] = 0;
            std::vector<std::size_t> path{first};
            std::size_t cur = net.edges()[first].head;
            while (cur != rec.node) {
                std::size_t next = SIZE_MAX;
                for (auto e : net.out_edges(cur))
                    if (flow[e]) {
                        next = e;
                        break;
                    }
                if (next == SIZE_MAX) throw DomainError("flow decomposition failed");
                flow[next] = 0;
                path.push_back(next);
                cur = net.edges()[next].head;
            }
            paths.push_back(std::move(path));
        }
    return paths;
}

// ---------------------------------------------------------------- generators

Network gen_example1() {
    Network n;
    n.add_source("s");
    n.add_edge("s", "r");
    n.add_edge("s", "r");
    n.add_edge("r", "t");
    n.add_edge("r", "t");
    n.add_receiver("t");
    return n;
}

Network gen_butterfly() {
    Network n;
    n.add_source("s");
    n.add_edge("s", "a");
    n.add_edge("s", "b");
    n.add_edge("a", "c");
    n.add_edge("b", "c");
    n.add_edge("c", "d");
    n.add_edge("a", "t1");
    n.add_edge("b", "t2");
    n.add_edge("d", "t1");
    n.add_edge("d", "t2");
    n.add_receiver("t1");
    n.add_receiver("t2");
    return n;
}

Network gen_combination(std::size_t count) {
    if (count < 2) throw DomainError("combination network needs n >= 2");
    Network n;
    n.add_source("s");
    n.add_edge("s", "r");
    n.add_edge("s", "r");
    for (std::size_t j = 1; j <= count; ++j) n.add_edge("r", "u" + std::to_string(j));
    std::size_t t = 0;
    for (std::size_t i = 1; i <= count; ++i)
        for (std::size_t j = i + 1; j <= count; ++j) {
            const std::string name = "t" + std::to_string(++t);
            n.add_edge("u" + std::to_string(i), name);
            n.add_edge("u" + std::to_string(j), name);
        }
    for (std::size_t k = 1; k <= t; ++k) n.add_receiver("t" + std::to_string(k));
    return n;
}

Network gen_swirl(std::size_t w) {
    if (w < 3) throw DomainError("swirl network needs omega >= 3");
    Network n;
    n.add_source("s");
    auto a = [](std::size_t i) { return "a" + std::to_string(i + 1); };
    auto b = [](std::size_t i) { return "b" + std::to_string(i + 1); };
    auto c = [](std::size_t i, int k) { return "c" + std::to_string(i + 1) + "_" + std::to_string(k); };
    for (std::size_t i = 0; i < w; ++i) n.add_edge("s", a(i));
    for (std::size_t i = 0; i < w; ++i) {
        n.add_edge(a(i), b(i));
        n.add_edge(a(i), b((i + 1) % w));
    }
    std::vector<std::size_t> layer4;
    for (std::size_t i = 0; i < w; ++i)
        for (int k = 1; k <= 2; ++k) {
            n.add_edge(b(i), c(i, k));
            layer4.push_back(n.node_id(c(i, k)));
        }
    // every w-subset of the 2w layer-4 nodes, lexicographic
    const std::size_t src = n.node_id("s");
    std::vector<std::vector<std::size_t>> chosen;
    std::vector<std::size_t> idx(w);
    std::iota(idx.begin(), idx.end(), 0);
    const std::size_t m = layer4.size();
    for (;;) {
        std::vector<std::size_t> set;
        for (auto i : idx) set.push_back(layer4[i]);
        if (max_flow(n, src, set) == w) chosen.push_back(set);
        std::size_t p = w;
        while (p > 0 && idx[p - 1] == m - w + p - 1) --p;
        if (p == 0) break;
        ++idx[p - 1];
        for (std::size_t q = p; q < w; ++q) idx[q] = idx[q - 1] + 1;
    }
    for (std::size_t k = 0; k < chosen.size(); ++k) {
        const std::string t = "t" + std::to_string(k + 1);
        for (auto v : chosen[k]) n.add_edge(v, n.add_node(t));
    }
    for (std::size_t k = 0; k < chosen.size(); ++k) n.add_receiver("t" + std::to_string(k + 1));
    return n;
}

namespace {
std::size_t parse_count(std::string_view s, std::string_view what) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw DomainError("bad " + std::string(what) + ": " + std::string(s));
    return v;
}
}  // namespace

Network gen_topology(std::string_view spec) {
    if (spec == "example1") return gen_example1();
    if (spec == "butterfly") return gen_butterfly();
    if (spec.starts_with("combination:")) return gen_combination(parse_count(spec.substr(12), "combination size"));
    if (spec.starts_with("swirl:")) return gen_swirl(parse_count(spec.substr(6), "swirl omega"));
    throw DomainError("unknown topology '" + std::string(spec) + "'");
}

Network gen_random_dag(Rng& rng, std::size_t layers, std::size_t width, double density, std::size_t omega) {
    Network n;
    n.add_source("s");
    auto node = [](std::size_t l, std::size_t i) { return "v" + std::to_string(l) + "_" + std::to_string(i); };
    for (std::size_t l = 0; l < layers; ++l)
        for (std::size_t i = 0; i < width; ++i) n.add_node(node(l, i));
    for (std::size_t k = 0; k < omega; ++k) n.add_edge("s", node(0, uniform_below(rng, width)));
    const auto thresh = static_cast<std::uint64_t>(density * 1e6);
    for (std::size_t l = 0; l + 1 < layers; ++l)
        for (std::size_t i = 0; i < width; ++i)
            for (std::size_t l2 = l + 1; l2 < layers; ++l2)
                for (std::size_t j = 0; j < width; ++j) {
                    const std::uint64_t limit = l2 == l + 1 ? thresh : thresh / 4;
                    if (uniform_below(rng, 1000000) < limit) n.add_edge(node(l, i), node(l2, j));
                }
    // receivers: random omega-subsets of non-source nodes with full flow
    const std::size_t src = n.node_id("s");
    const std::size_t internal = layers * width;
    std::size_t made = 0;
    for (std::size_t attempt = 0; attempt < 40 && made < 4; ++attempt) {
        std::vector<std::size_t> set;
        while (set.size() < std::min(omega, internal)) {
            const std::size_t v = 1 + uniform_below(rng, internal);
            if (std::find(set.begin(), set.end(), v) == set.end()) set.push_back(v);
        }
        Network trial = n;
        const std::string t = "t" + std::to_string(made + 1);
        const std::size_t tn = trial.add_node(t);
        for (auto v : set) trial.add_edge(v, tn);
        if (max_flow(trial, src, {tn}) != omega) continue;
        trial.add_receiver(t);
        n = std::move(trial);
        ++made;
    }
    return n;
}

// ---------------------------------------------------------------- text format

Network parse_network(std::string_view text) {
    // Without any `node` line, names are created on first use; once nodes are
    // declared, an undeclared name is an error.
    bool declared = false;
    {
        std::istringstream scan{std::string(text)};
        std::string line;
        while (std::getline(scan, line)) {
            std::istringstream ls(line);
            std::string kw;
            if (ls >> kw && kw == "node") declared = true;
        }
    }
    Network net;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto ref = [&](const std::string& name) -> std::size_t {
        if (declared && !net.has_node(name)) throw ParseError(lineno, "unknown node '" + name + "'");
        return net.add_node(name);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        try {
            if (kw == "node") {
                if (tok.size() != 2) throw ParseError(lineno, "expected: node <name>");
                net.add_node(tok[1]);
            } else if (kw == "edge") {
                if (tok.size() != 3) throw ParseError(lineno, "expected: edge <tail> <head>");
                const std::size_t t = ref(tok[1]);
                net.add_edge(t, ref(tok[2]));
            } else if (kw == "source") {
                if (tok.size() != 2) throw ParseError(lineno, "expected: source <name>");
                ref(tok[1]);
                net.add_source(tok[1]);
            } else if (kw == "receiver") {
                if (tok.size() < 2) throw ParseError(lineno, "expected: receiver <name> [demands <source>...]");
                ref(tok[1]);
                std::vector<std::size_t> dem;
                if (tok.size() > 2) {
                    if (tok[2] != "demands" || tok.size() == 3)
                        throw ParseError(lineno, "expected 'demands <source>...' after receiver name");
                    for (std::size_t i = 3; i < tok.size(); ++i) {
                        const std::size_t id = ref(tok[i]);
                        if (!net.is_source(id)) throw ParseError(lineno, "'" + tok[i] + "' is not a source");
                        dem.push_back(net.source_index(id));
                    }
                }
                net.add_receiver(tok[1], std::move(dem));
            } else {
                throw ParseError(lineno, "unknown keyword '" + kw + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception& ex) {
            throw ParseError(lineno, ex.what());
        }
    }
    try {
        net.validate();
    } catch (const DomainError& ex) {
        throw ParseError(0, ex.what());
    }
    return net;
}

std::string serialize_network(const Network& net) {
    std::ostringstream out;
    for (std::size_t v = 0; v < net.node_count(); ++v) out << "node " << net.name(v) << '\n';
    for (auto s : net.sources()) out << "source " << net.name(s) << '\n';
    for (const auto& e : net.edges()) out << "edge " << net.name(e.tail) << ' ' << net.name(e.head) << '\n';
    for (const auto& r : net.receivers()) {
        out << "receiver " << net.name(r.node);
        if (r.demands.size() != net.sources().size()) {
            out << " demands";
            for (auto d : r.demands) out << ' ' << net.name(net.sources()[d]);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace cslnc
