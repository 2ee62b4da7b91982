#include "coxpart/graph.hpp"

#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

#include "coxpart/error.hpp"

namespace coxpart {

namespace {

int parse_label_token(const std::string& tok) {
  if (tok == "inf" || tok == "infinity" || tok == "oo") return kInfiniteLabel;
  std::size_t used = 0;
  int m = 0;
  try {
    m = std::stoi(tok, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::malformed_spec, "bad edge label '" + tok + "'");
  }
  if (used != tok.size()) fail(ErrorKind::malformed_spec, "bad edge label '" + tok + "'");
  if (m == kInfiniteLabel || !is_supported_label(m))
    fail(ErrorKind::unsupported_label, "unsupported edge label m=" + tok);
  return m;
}

CoxeterGraph path_graph(std::size_t n, std::string name) {
  auto g = CoxeterGraph::free_of_edges(n, std::move(name));
  for (std::size_t i = 0; i + 1 < n; ++i) g.set_label(i, i + 1, 3);
  return g;
}

CoxeterGraph named_graph(const std::string& spec) {
  std::smatch m;
  static const std::regex kFamily(R"(^([ABDE])(\d+)$)");
  static const std::regex kDihedral(R"(^I2\((\d+|inf)\)$)");
  static const std::regex kTriangle(R"(^tri\((\w+),(\w+),(\w+)\)$)");
  static const std::regex kUniversal(R"(^universal\((\d+)\)$)");
  static const std::regex kAffineA(R"(^affineA(\d+)$)");

  if (std::regex_match(spec, m, kFamily)) {
    const char family = m[1].str()[0];
    const std::size_t n = std::stoul(m[2].str());
    switch (family) {
      case 'A':
        if (n < 1) break;
        return path_graph(n, spec);
      case 'B': {
        if (n < 2) break;
        auto g = path_graph(n, spec);
        g.set_label(0, 1, 4);
        return g;
      }
      case 'D': {
        if (n < 4) break;
        // Bourbaki: path 1..n-1, node n attached to node n-2.
        auto d = CoxeterGraph::free_of_edges(n, spec);
        for (std::size_t i = 0; i + 2 < n; ++i) d.set_label(i, i + 1, 3);
        d.set_label(n - 3, n - 1, 3);
        return d;
      }
      case 'E': {
        if (n < 6 || n > 8) break;
        // Bourbaki: 1-3-4-5-6-..., 2 attached to 4.
        auto g = CoxeterGraph::free_of_edges(n, spec);
        g.set_label(0, 2, 3);
        g.set_label(1, 3, 3);
        for (std::size_t i = 2; i + 1 < n; ++i) g.set_label(i, i + 1, 3);
        return g;
      }
      default: break;
    }
    fail(ErrorKind::malformed_spec, "unsupported rank in '" + spec + "'");
  }
  if (spec == "F4") {
    auto g = path_graph(4, spec);
    g.set_label(1, 2, 4);
    return g;
  }
  if (spec == "H3" || spec == "H4") {
    auto g = path_graph(spec == "H3" ? 3 : 4, spec);
    g.set_label(0, 1, 5);
    return g;
  }
  if (spec == "G2") {
    auto g = CoxeterGraph::free_of_edges(2, spec);
    g.set_label(0, 1, 6);
    return g;
  }
  if (std::regex_match(spec, m, kDihedral)) {
    auto g = CoxeterGraph::free_of_edges(2, spec);
    g.set_label(0, 1, parse_label_token(m[1].str()));
    return g;
  }
  if (std::regex_match(spec, m, kAffineA)) {
    const std::size_t n = std::stoul(m[1].str());
    if (n < 2) fail(ErrorKind::malformed_spec, "affineA needs rank parameter >= 2");
    auto g = CoxeterGraph::free_of_edges(n + 1, spec);
    for (std::size_t i = 0; i <= n; ++i) g.set_label(i, (i + 1) % (n + 1), 3);
    return g;
  }
  if (spec == "affineB2" || spec == "affineC2") {
    auto g = CoxeterGraph::free_of_edges(3, spec);
    g.set_label(0, 1, 4);
    g.set_label(1, 2, 4);
    return g;
  }
  if (spec == "affineG2") {
    auto g = CoxeterGraph::free_of_edges(3, spec);
    g.set_label(0, 1, 3);
    g.set_label(1, 2, 6);
    return g;
  }
  if (std::regex_match(spec, m, kTriangle)) {
    auto g = CoxeterGraph::free_of_edges(3, spec);
    g.set_label(0, 1, parse_label_token(m[1].str()));
    g.set_label(1, 2, parse_label_token(m[2].str()));
    g.set_label(0, 2, parse_label_token(m[3].str()));
    return g;
  }
  if (spec == "paw") {
    // triangle 1-2-3 with a pendant node 4 on node 3
    auto g = CoxeterGraph::free_of_edges(4, spec);
    g.set_label(0, 1, 3);
    g.set_label(1, 2, 3);
    g.set_label(0, 2, 3);
    g.set_label(2, 3, 3);
    return g;
  }
  if (spec == "D4-fig1") {
    // D4 with the branch node labelled 3: edges 1-3, 2-3, 3-4
    auto g = CoxeterGraph::free_of_edges(4, spec);
    g.set_label(0, 2, 3);
    g.set_label(1, 2, 3);
    g.set_label(2, 3, 3);
    return g;
  }
  if (std::regex_match(spec, m, kUniversal)) {
    const std::size_t n = std::stoul(m[1].str());
    if (n < 1) fail(ErrorKind::malformed_spec, "universal needs rank >= 1");
    auto g = CoxeterGraph::free_of_edges(n, spec);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) g.set_label(i, j, kInfiniteLabel);
    return g;
  }
  fail(ErrorKind::malformed_spec, "unknown group '" + spec + "'");
}

int json_label(const nlohmann::json& v) {
  if (v.is_string()) return parse_label_token(v.get<std::string>());
  if (!v.is_number_integer()) fail(ErrorKind::malformed_spec, "edge label must be an integer or \"inf\"");
  const int m = v.get<int>();
  if (m == kInfiniteLabel || !is_supported_label(m))
    fail(ErrorKind::unsupported_label, "unsupported edge label m=" + std::to_string(m));
  return m;
}

CoxeterGraph json_graph(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::malformed_spec, std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rank") || !doc["rank"].is_number_integer())
    fail(ErrorKind::malformed_spec, "graph JSON needs an integer \"rank\"");
  const long rank = doc["rank"].get<long>();
  if (rank < 1 || rank > 32) fail(ErrorKind::malformed_spec, "graph rank must be in [1, 32]");
  auto g = CoxeterGraph::free_of_edges(static_cast<std::size_t>(rank),
                                       doc.value("name", std::string{}));
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) fail(ErrorKind::malformed_spec, "\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer())
        fail(ErrorKind::malformed_spec, "each edge is [i, j, m] with 1-based nodes");
      const long i = e[0].get<long>(), j = e[1].get<long>();
      if (i < 1 || j < 1 || i > rank || j > rank || i == j)
        fail(ErrorKind::malformed_spec, "edge endpoints out of range");
      const int m = json_label(e[2]);
      const int existing = g.label(i - 1, j - 1);
      if (existing != 2 && existing != m)
        fail(ErrorKind::malformed_spec, "conflicting labels for one edge");
      g.set_label(i - 1, j - 1, m);
    }
  }
  return g;
}

}  // namespace

CoxeterGraph::CoxeterGraph(std::size_t rank, std::vector<int> labels, std::string name)
    : rank_(rank), labels_(std::move(labels)), name_(std::move(name)) {
  if (rank_ == 0) fail(ErrorKind::malformed_spec, "rank must be positive");
  if (labels_.size() != rank_ * rank_) fail(ErrorKind::malformed_spec, "label matrix has wrong size");
  for (std::size_t i = 0; i < rank_; ++i) {
    if (label(i, i) != 1) fail(ErrorKind::malformed_spec, "diagonal labels must be 1");
    for (std::size_t j = 0; j < rank_; ++j) {
      if (i == j) continue;
      if (label(i, j) != label(j, i)) fail(ErrorKind::malformed_spec, "label matrix must be symmetric");
      if (!is_supported_label(label(i, j)))
        fail(ErrorKind::unsupported_label, "unsupported edge label m=" + std::to_string(label(i, j)));
    }
  }
  refresh_values();
}

CoxeterGraph CoxeterGraph::free_of_edges(std::size_t rank, std::string name) {
  std::vector<int> labels(rank * rank, 2);
  for (std::size_t i = 0; i < rank; ++i) labels[i * rank + i] = 1;
  return CoxeterGraph(rank, std::move(labels), std::move(name));
}

void CoxeterGraph::set_label(std::size_t i, std::size_t j, int m) {
  if (i >= rank_ || j >= rank_ || i == j) fail(ErrorKind::index_out_of_range, "bad edge endpoints");
  if (!is_supported_label(m)) fail(ErrorKind::unsupported_label, "unsupported edge label m=" + std::to_string(m));
  labels_[i * rank_ + j] = labels_[j * rank_ + i] = m;
  refresh_values();
}

void CoxeterGraph::refresh_values() {
  edge_values_.assign(rank_ * rank_, QuadScalar(0));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      if (i != j) edge_values_[i * rank_ + j] = from_label(label(i, j));
}

std::string CoxeterGraph::canonical() const {
  std::ostringstream os;
  os << "rank=" << rank_ << ";";
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = i + 1; j < rank_; ++j)
      if (label(i, j) != 2)
        os << i + 1 << "-" << j + 1 << ":" << (label(i, j) == kInfiniteLabel ? std::string("inf") : std::to_string(label(i, j))) << ";";
  return os.str();
}

std::uint64_t CoxeterGraph::canonical_hash() const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string CoxeterGraph::to_json() const {
  nlohmann::json doc;
  doc["rank"] = rank_;
  auto edges = nlohmann::json::array();
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = i + 1; j < rank_; ++j) {
      const int m = label(i, j);
      if (m == 2) continue;
      if (m == kInfiniteLabel) edges.push_back({i + 1, j + 1, "inf"});
      else edges.push_back({i + 1, j + 1, m});
    }
  doc["edges"] = edges;
  if (!name_.empty()) doc["name"] = name_;
  return doc.dump();
}

CoxeterGraph parse_graph(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (c != ' ' || !s.empty()) s.push_back(c);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\n')) s.pop_back();
  if (s.empty()) fail(ErrorKind::malformed_spec, "empty group spec");
  if (s.front() == '{') return json_graph(s);
  return named_graph(s);
}

CoxeterGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::malformed_spec, "cannot open graph file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto g = json_graph(buf.str());
  if (g.name().empty()) g.set_name(path);
  return g;
}

}  // namespace coxpart
