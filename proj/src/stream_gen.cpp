#include "fourcycle/stream_gen.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "fourcycle/error.hpp"
#include "fourcycle/rng.hpp"

namespace fourcycle::gen {
namespace {

[[noreturn]] void bad_param(const std::string& what) {
  throw Error(ErrorKind::kParameter, what);
}

template <typename T>
T parse_integer(const std::string& text, const std::string& key) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    bad_param("generator parameter '" + key + "' is not a non-negative integer: '" + text + "'");
  }
  return value;
}

double parse_probability(const std::string& text, const std::string& key) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(value >= 0.0 && value <= 1.0)) {
    bad_param("generator parameter '" + key + "' must be a probability in [0,1]: '" + text + "'");
  }
  return value;
}

const std::string& require(const GenSpec& spec, const std::string& key) {
  const auto it = spec.params.find(key);
  if (it == spec.params.end()) bad_param("generator '" + spec.name + "' needs parameter '" + key + "'");
  return it->second;
}

std::uint32_t require_u32(const GenSpec& spec, const std::string& key) {
  return parse_integer<std::uint32_t>(require(spec, key), key);
}

void append_biclique(std::vector<Edge>& out, VertexId offset, BicliqueSize size) {
  for (VertexId i = 0; i < size.left; ++i) {
    for (VertexId j = 0; j < size.right; ++j) {
      out.emplace_back(offset + i, offset + size.left + j);
    }
  }
}

void shuffle_edges(std::vector<Edge>& edges, std::uint64_t seed) {
  Rng rng(seed);
  for (std::size_t i = edges.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(edges[i - 1], edges[j]);
  }
}

}  // namespace

EdgeStream biclique(std::uint32_t a, std::uint32_t b) {
  if (a < 1 || b < 1) bad_param("biclique sides must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(std::size_t{a} * b);
  append_biclique(edges, 0, {a, b});
  return EdgeStream(std::move(edges), std::size_t{a} + b);
}

EdgeStream erdos_renyi(std::uint32_t n, double edge_prob, std::uint64_t seed) {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) bad_param("edge probability must lie in [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) {
      if (rng.uniform() < edge_prob) edges.emplace_back(i, j);
    }
  }
  return EdgeStream(std::move(edges), n);
}

EdgeStream cycle(std::uint32_t n) {
  if (n < 3) bad_param("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return EdgeStream(std::move(edges), n);
}

EdgeStream complete(std::uint32_t n) { return erdos_renyi(n, 1.0, 0); }

std::vector<BicliqueSize> parse_bicliques(const std::string& text) {
  std::vector<BicliqueSize> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, '+')) {
    const auto x = item.find('x');
    if (x == std::string::npos) bad_param("biclique size must look like AxB, got '" + item + "'");
    const BicliqueSize size{parse_integer<std::uint32_t>(item.substr(0, x), "k"),
                            parse_integer<std::uint32_t>(item.substr(x + 1), "k")};
    if (size.left < 1 || size.right < 1) bad_param("biclique sides must be >= 1");
    out.push_back(size);
  }
  return out;
}

EdgeStream planted(const GenSpec& noise, const std::vector<BicliqueSize>& bicliques,
                   std::uint64_t seed) {
  const EdgeStream base = noise.name.empty() ? EdgeStream() : generate(noise);
  std::vector<Edge> edges(base.edges().begin(), base.edges().end());
  auto offset = static_cast<VertexId>(base.n());
  for (const BicliqueSize& size : bicliques) {
    append_biclique(edges, offset, size);
    offset += size.left + size.right;
  }
  shuffle_edges(edges, seed);
  return EdgeStream(std::move(edges), offset);
}

EdgeStream permute_stream(const EdgeStream& stream, std::uint64_t seed) {
  std::vector<Edge> edges(stream.edges().begin(), stream.edges().end());
  shuffle_edges(edges, seed);
  return EdgeStream(std::move(edges), stream.n());
}

GenSpec GenSpec::parse(const std::string& text) {
  GenSpec spec;
  const auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (spec.name.empty()) bad_param("empty generator spec");
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) bad_param("generator parameter must be key=value: '" + item + "'");
      const std::string key = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (key == "seed") {
        spec.seed = parse_integer<std::uint64_t>(value, key);
      } else {
        spec.params[key] = value;
      }
    }
  }
  // Validate eagerly so bad specs fail at parse time.
  if (spec.name == "biclique") {
    require_u32(spec, "a");
    require_u32(spec, "b");
  } else if (spec.name == "er" || spec.name == "planted") {
    require_u32(spec, "n");
    parse_probability(require(spec, "p"), "p");
    if (spec.name == "planted" && spec.params.count("k")) parse_bicliques(spec.params.at("k"));
  } else if (spec.name == "cycle" || spec.name == "complete") {
    require_u32(spec, "n");
  } else {
    bad_param("unknown generator '" + spec.name + "'");
  }
  return spec;
}

std::string GenSpec::to_string() const {
  std::string out = name;
  char sep = ':';
  for (const auto& [key, value] : params) {
    out += sep;
    out += key + "=" + value;
    sep = ',';
  }
  if (name == "er" || name == "planted") {
    out += sep;
    out += "seed=" + std::to_string(seed);
  }
  return out;
}

EdgeStream generate(const GenSpec& spec) {
  if (spec.name == "biclique") return biclique(require_u32(spec, "a"), require_u32(spec, "b"));
  if (spec.name == "cycle") return cycle(require_u32(spec, "n"));
  if (spec.name == "complete") return complete(require_u32(spec, "n"));
  if (spec.name == "er") {
    return erdos_renyi(require_u32(spec, "n"), parse_probability(require(spec, "p"), "p"), spec.seed);
  }
  if (spec.name == "planted") {
    GenSpec noise;
    noise.name = "er";
    noise.params = {{"n", require(spec, "n")}, {"p", require(spec, "p")}};
    noise.seed = derive_seed(spec.seed, 1);
    const auto it = spec.params.find("k");
    const auto sizes = it == spec.params.end() ? std::vector<BicliqueSize>{} : parse_bicliques(it->second);
    return planted(noise, sizes, derive_seed(spec.seed, 2));
  }
  bad_param("unknown generator '" + spec.name + "'");
}

}  // namespace fourcycle::gen
