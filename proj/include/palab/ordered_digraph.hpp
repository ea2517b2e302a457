#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace palab {

struct DirectedEdge {
    int source = 0;
    int target = 0;
    int multiplicity = 1;

    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

// A digraph together with a bijective ordering sigma: every directed edge runs
// from its higher-ranked endpoint to its lower-ranked one (young -> old).
// Ranks are stored 0-based; file formats and reports print them 1-based.
struct OrderedDigraph {
    int n = 0;
    std::vector<DirectedEdge> edges;
    std::vector<int> rank;  // sigma: vertex id -> rank in [0, n)

    int rank_of(int v) const { return rank[static_cast<std::size_t>(v)]; }

    std::vector<int> vertex_by_rank() const;
    std::vector<int> out_degrees() const;  // simple (multiplicity ignored)
    std::vector<int> in_degrees() const;

    friend bool operator==(const OrderedDigraph&, const OrderedDigraph&) = default;
};

// Identity-ordered digraph on n vertices (vertex id == rank).
OrderedDigraph make_identity_ordered(int n, std::vector<DirectedEdge> edges);

struct ValidationReport {
    bool ok = true;
    std::string message;
    int offending_edge = -1;  // index into edges when the ordering is violated
};

ValidationReport validate(const OrderedDigraph& g);

// Throws std::logic_error when invalid; builders call this on everything they
// hand out.
void require_valid(const OrderedDigraph& g, const char* who);

// Pairs of identified vertices (vertex in g1, vertex in g2).
struct VertexCorrespondence {
    std::vector<std::pair<int, int>> pairs;
};

// True iff the two orderings induce the same relative order on every pair of
// identified vertices. Throws on a non-injective correspondence.
bool orderings_agree(const OrderedDigraph& g1, const OrderedDigraph& g2,
                     const VertexCorrespondence& shared);

int max_out_degree(const OrderedDigraph& g);

// Sorted adjacency built on demand for census and coloring work.
struct Adjacency {
    std::vector<std::vector<int>> out;       // targets, ascending
    std::vector<std::vector<int>> in;        // sources, ascending
    std::vector<std::vector<int>> out_mult;  // parallel to out
    bool has_edge(int source, int target) const;
    int edge_multiplicity(int source, int target) const;
};

Adjacency build_adjacency(const OrderedDigraph& g);

// Text format: header "digraph n=<int>", optional "sigma r1 ... rn" line
// (1-based ranks, identity when absent), then one "src tgt" line per edge
// multiplicity unit, 1-based vertex ids.
void write_digraph(std::ostream& os, const OrderedDigraph& g);
OrderedDigraph read_digraph(std::istream& is);
void write_digraph_file(const std::string& path, const OrderedDigraph& g);
OrderedDigraph read_digraph_file(const std::string& path);

}  // namespace palab
