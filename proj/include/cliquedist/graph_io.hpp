#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliquedist/graph.hpp"

namespace cliquedist {

/// Parse failure with a 1-based line number where known (0 = whole stream).
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + std::move(message)
                                  : std::move(message)),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

enum class GraphFormat { edge_list, gml, pajek };

/// A parsed graph plus the external label of each dense vertex ID.
struct LoadedGraph {
    Graph graph;
    std::vector<std::string> labels;
};

/// Whitespace-separated label pairs, one edge per line, '#' comments.
/// Labels map to 0..n-1 in first-appearance order.
LoadedGraph parse_edge_list(std::istream& in);

/// GML subset: graph [ node [ id N ... ] ... edge [ source A target B ... ] ].
/// Unknown attributes (including nested lists) are skipped; any `directed`
/// flag is ignored and the graph is read as undirected.
LoadedGraph parse_gml(std::istream& in);

/// Pajek subset: *Vertices N header, then *Edges / *Arcs sections of
/// "A B [weight]" lines with 1-based endpoints. Weights are discarded and
/// arcs symmetrized.
LoadedGraph parse_pajek(std::istream& in);

LoadedGraph parse_graph(std::istream& in, GraphFormat format);
LoadedGraph load_graph_file(const std::filesystem::path& path, GraphFormat format);

/// Canonical edge list: one "u v" line per edge, u < v, ascending pairs.
std::string write_edge_list(const Graph& g);

GraphFormat format_from_name(const std::string& name);

struct DatasetDescriptor {
    std::string name;
    std::string filename;
    GraphFormat format;
    std::size_t expected_n;
    std::size_t expected_m;
};

/// The six bundled real-world datasets (see data/), with published counts.
const std::vector<DatasetDescriptor>& bundled_datasets();

/// Loads a bundled dataset and validates its vertex/edge counts.
LoadedGraph load_dataset(const std::filesystem::path& dir, const DatasetDescriptor& desc);

} // namespace cliquedist
