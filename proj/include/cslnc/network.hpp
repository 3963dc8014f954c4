#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cslnc/rng.hpp"

namespace cslnc {

struct Edge {
    std::size_t tail;
    std::size_t head;
    friend bool operator==(const Edge&, const Edge&) = default;
};

struct Receiver {
    std::size_t node;
    /// Indices into Network::sources().
    std::vector<std::size_t> demands;
    friend bool operator==(const Receiver&, const Receiver&) = default;
};

/// Acyclic directed multigraph with ordered sources and receivers. Edge indices
/// are positions in edges() and are 0-based everywhere, including file formats.
class Network {
public:
    std::size_t add_node(std::string_view name);
    std::size_t add_edge(std::size_t tail, std::size_t head);
    std::size_t add_edge(std::string_view tail, std::string_view head);
    void add_source(std::string_view name);
    /// Empty demands means every source.
    void add_receiver(std::string_view name, std::vector<std::size_t> demands = {});

    std::size_t node_count() const noexcept { return names_.size(); }
    const std::string& name(std::size_t node) const { return names_.at(node); }
    /// Throws DimensionError when absent.
    std::size_t node_id(std::string_view name) const;
    bool has_node(std::string_view name) const { return ids_.count(std::string(name)) > 0; }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<std::size_t>& in_edges(std::size_t node) const { return in_.at(node); }
    const std::vector<std::size_t>& out_edges(std::size_t node) const { return out_.at(node); }
    const std::vector<std::size_t>& sources() const noexcept { return sources_; }
    const std::vector<Receiver>& receivers() const noexcept { return receivers_; }

    bool is_source(std::size_t node) const;
    /// Position of a source node in sources(); throws when not a source.
    std::size_t source_index(std::size_t node) const;

    /// Out(S): out-edges of every source, grouped in source order, edge index
    /// order within a source. Position in this list is the coordinate index.
    std::vector<std::size_t> source_edges() const;
    /// Out(S_t) for receiver r, as positions into source_edges().
    std::vector<std::size_t> demanded_coordinates(std::size_t r) const;
    std::size_t omega() const { return source_edges().size(); }
    std::size_t omega_t(std::size_t r) const { return demanded_coordinates(r).size(); }

    /// Throws DomainError on a cycle, a source with in-edges, an edge from a
    /// source straight into a receiver, a receiver that is a source, or no source.
    void validate() const;
    /// Single source, all receivers demand it, max-flow omega everywhere.
    bool is_multicast() const;

    friend bool operator==(const Network& a, const Network& b) {
        return a.names_ == b.names_ && a.edges_ == b.edges_ && a.sources_ == b.sources_ &&
               a.receivers_ == b.receivers_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::string, std::size_t, std::less<>> ids_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> in_, out_;
    std::vector<std::size_t> sources_;
    std::vector<Receiver> receivers_;
};

/// Edge indices ordered with Out(S) first (source order, then index), then the
/// rest by Kahn position of the tail node and edge index. Throws DomainError on a cycle.
std::vector<std::size_t> topo_order(const Network& net);

/// Unit-capacity max-flow from `from` into the node set `to`.
std::size_t max_flow(const Network& net, std::size_t from, const std::vector<std::size_t>& to);

/// omega_t edge-disjoint paths from the demanded sources into receiver r, each a
/// list of edge indices from a source out-edge to an in-edge of the receiver.
/// Throws DomainError when the flow falls short of omega_t.
std::vector<std::vector<std::size_t>> edge_disjoint_paths(const Network& net, std::size_t r);

Network gen_example1();
Network gen_butterfly();
/// s =e1,e2=> r -> u_1..u_n, one receiver per pair {u_i, u_j}, i < j, lexicographic.
Network gen_combination(std::size_t n);
/// Five layers: s -> a_i; a_i -> b_i, b_{i+1 mod w}; b_i -> c_{i,1}, c_{i,2}; one
/// receiver per w-subset of the c nodes whose max-flow is w.
Network gen_swirl(std::size_t omega);
/// "example1", "butterfly", "combination:n", "swirl:w". Throws DomainError when unknown.
Network gen_topology(std::string_view spec);

/// Layered random DAG with one source. Each receiver is a new node fed by a
/// random omega-set of internal nodes, kept when its max-flow is omega. For tests.
Network gen_random_dag(Rng& rng, std::size_t layers, std::size_t width, double density, std::size_t omega);

Network parse_network(std::string_view text);
std::string serialize_network(const Network& net);

}  // namespace cslnc
