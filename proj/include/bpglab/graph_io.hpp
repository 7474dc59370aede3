#ifndef BPGLAB_GRAPH_IO_HPP
#define BPGLAB_GRAPH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bpglab/graph.hpp"

namespace bpglab {

/// Malformed input file or stream.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Size caps or solver preconditions not met.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text format: optional '#' comment lines anywhere, one 'p <n>' header,
/// then 'e <u> <v>' lines with 1 <= u < v <= n. UTF-8, LF line endings.
/// The writer emits edges sorted lexicographically.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& filename);

void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& filename, const Graph& g);

std::string to_text(const Graph& g);
Graph from_text(const std::string& text);

}  // namespace bpglab

#endif
