#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "fourcycle/graph.hpp"

// Edge-list text format: one edge per line as two whitespace-separated
// non-negative integers. Lines starting with '#' are comments, blank lines
// are skipped, and line order is stream order.
namespace fourcycle {

struct LoadedStream {
  EdgeStream stream;
  // labels[id] is the original label of dense vertex id.
  std::vector<std::uint64_t> labels;
};

// Labels are remapped to dense ids in order of first appearance.
// Throws Error(kIo) if the file cannot be read, Error(kMalformedStream) on
// parse errors, self-loops and duplicate edges.
LoadedStream load_edge_list(const std::string& path);
LoadedStream parse_edge_list(std::istream& in);

void write_edge_list(std::ostream& out, const EdgeStream& stream);

struct StreamDiagnostics {
  bool parsed = false;  // every non-comment line held exactly two integers
  bool valid = false;   // parsed, no self-loops, no duplicates
  std::uint64_t n = 0;
  std::uint64_t m = 0;  // distinct non-loop edges
  std::uint64_t comment_lines = 0;
  std::vector<std::uint64_t> duplicate_lines;
  std::vector<std::uint64_t> self_loop_lines;
  std::vector<std::uint64_t> malformed_lines;
};

// Never throws on content; throws Error(kIo) only when the file is unreadable.
StreamDiagnostics validate_edge_list(const std::string& path);
StreamDiagnostics validate_edge_list(std::istream& in);

}  // namespace fourcycle
