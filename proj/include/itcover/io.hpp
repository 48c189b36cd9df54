#ifndef ITCOVER_IO_HPP
#define ITCOVER_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "itcover/constructor.hpp"
#include "itcover/graph.hpp"

namespace itcover {

// On-disk form of a cover graph, plus the optional extras some commands
// carry along (parameters, designated B-pairs, A-side block partitions).
struct GraphDocument {
    CoverGraph graph;
    std::optional<Params> params;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> blocks;
};

// JSON document: keys `params` (optional), `classes`, `vertices`, `edges`
// (aId first), `pairs` / `blocks` (optional). Stable key order, LF endings.
// Malformed shape raises an error naming the first offending field;
// structural defects in an otherwise well-shaped document raise the
// structure error instead.
GraphDocument graph_from_json(const std::string& text);
std::string graph_to_json(const GraphDocument& doc);
GraphDocument read_graph(const std::string& path);
void write_graph(const GraphDocument& doc, const std::string& path);

BuildTrace trace_from_json(const std::string& text);
std::string trace_to_json(const BuildTrace& t);
BuildTrace read_trace(const std::string& path);
void write_trace(const BuildTrace& t, const std::string& path);

// Cluster-graph rendering: one cluster per class, all A-clusters before the
// B-clusters, everything in ascending id order.
std::string dot_string(const CoverGraph& g);
void export_dot(const CoverGraph& g, const std::string& path);

}  // namespace itcover

#endif
