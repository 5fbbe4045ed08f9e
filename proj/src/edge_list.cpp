#include "fourcycle/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "fourcycle/error.hpp"

namespace fourcycle {
namespace {

enum class LineKind { kSkip, kEdge, kMalformed };

struct ParsedLine {
  LineKind kind = LineKind::kSkip;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::optional<std::uint64_t> next_number(std::string_view& rest) {
  while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
  if (rest.empty()) return std::nullopt;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || ptr == rest.data()) return std::nullopt;
  const auto used = static_cast<std::size_t>(ptr - rest.data());
  if (used < rest.size() && !is_space(rest[used])) return std::nullopt;
  rest.remove_prefix(used);
  return value;
}

ParsedLine parse_line(std::string_view line) {
  std::string_view rest = line;
  while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
  if (rest.empty() || rest.front() == '#') return {};
  const auto a = next_number(rest);
  const auto b = a ? next_number(rest) : std::nullopt;
  while (!rest.empty() && is_space(rest.front())) rest.remove_prefix(1);
  if (!a || !b || !rest.empty()) return {LineKind::kMalformed};
  return {LineKind::kEdge, *a, *b};
}

class LabelMap {
 public:
  VertexId id_of(std::uint64_t label) {
    const auto [it, inserted] = ids_.try_emplace(label, static_cast<VertexId>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }
  std::vector<std::uint64_t> take_labels() { return std::move(labels_); }
  std::size_t size() const { return labels_.size(); }

 private:
  std::unordered_map<std::uint64_t, VertexId> ids_;
  std::vector<std::uint64_t> labels_;
};

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open edge list '" + path + "'");
  return in;
}

}  // namespace

LoadedStream parse_edge_list(std::istream& in) {
  LabelMap labels;
  std::vector<Edge> edges;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const ParsedLine parsed = parse_line(line);
    if (parsed.kind == LineKind::kSkip) continue;
    if (parsed.kind == LineKind::kMalformed) {
      throw Error(ErrorKind::kMalformedStream,
                  "line " + std::to_string(line_no) + ": expected two non-negative integers");
    }
    const VertexId a = labels.id_of(parsed.a);
    const VertexId b = labels.id_of(parsed.b);
    edges.emplace_back(a, b);
  }
  const std::size_t n = labels.size();
  return LoadedStream{EdgeStream(std::move(edges), n), labels.take_labels()};
}

LoadedStream load_edge_list(const std::string& path) {
  auto in = open_or_throw(path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const EdgeStream& stream) {
  for (const Edge& e : stream.edges()) out << e.u << ' ' << e.v << '\n';
}

StreamDiagnostics validate_edge_list(std::istream& in) {
  StreamDiagnostics diag;
  LabelMap labels;
  std::unordered_set<std::uint64_t> seen;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const ParsedLine parsed = parse_line(line);
    if (parsed.kind == LineKind::kSkip) {
      const auto first = line.find_first_not_of(" \t\r\v\f");
      if (first != std::string::npos && line[first] == '#') ++diag.comment_lines;
      continue;
    }
    if (parsed.kind == LineKind::kMalformed) {
      diag.malformed_lines.push_back(line_no);
      continue;
    }
    const Edge e(labels.id_of(parsed.a), labels.id_of(parsed.b));
    if (e.is_loop()) {
      diag.self_loop_lines.push_back(line_no);
    } else if (!seen.insert(e.key()).second) {
      diag.duplicate_lines.push_back(line_no);
    }
  }
  diag.n = labels.size();
  diag.m = seen.size();
  diag.parsed = diag.malformed_lines.empty();
  diag.valid = diag.parsed && diag.duplicate_lines.empty() && diag.self_loop_lines.empty();
  return diag;
}

StreamDiagnostics validate_edge_list(const std::string& path) {
  auto in = open_or_throw(path);
  return validate_edge_list(in);
}

}  // namespace fourcycle
