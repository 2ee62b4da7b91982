#include "coxpart/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "coxpart/error.hpp"

namespace coxpart {

namespace fs = std::filesystem;

fs::path cache_file(const fs::path& dir, const CoxeterGraph& graph, std::size_t radius) {
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(graph.canonical_hash()));
  return dir / ("ball-" + std::string(hash) + "-r" + std::to_string(radius) + "-" + kEngineVersion + ".json");
}

std::optional<fs::path> resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return fs::path(*flag);
  if (const char* env = std::getenv("COXPART_CACHE_DIR"); env && *env) return fs::path(env);
  return std::nullopt;
}

void save_ball(const Ball& ball, const fs::path& file) {
  nlohmann::json j;
  j["engine"] = kEngineVersion;
  j["graph"] = ball.graph().canonical();
  j["radius"] = ball.radius();
  j["size"] = ball.size();
  auto& words = j["words"] = nlohmann::json::array();
  for (ElementId id = 0; id < ball.size(); ++id) words.push_back(ball.word(id));

  std::error_code ec;
  if (file.has_parent_path()) fs::create_directories(file.parent_path(), ec);
  const fs::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) fail(ErrorKind::cache_error, "cannot write " + tmp.string());
    out << j.dump();
    if (!out) fail(ErrorKind::cache_error, "cannot write " + tmp.string());
  }
  fs::rename(tmp, file, ec);
  if (ec) fail(ErrorKind::cache_error, "cannot move cache file into place: " + ec.message());
}

Ball load_ball(const CoxeterGraph& graph, std::size_t radius, const fs::path& file) {
  std::ifstream in(file);
  if (!in) fail(ErrorKind::cache_error, "cannot read " + file.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::cache_error, std::string("bad cache file: ") + e.what());
  }
  try {
    if (j.at("engine").get<std::string>() != kEngineVersion) fail(ErrorKind::cache_error, "cache from another engine version");
    if (j.at("graph").get<std::string>() != graph.canonical()) fail(ErrorKind::cache_error, "cache for another graph");
    if (j.at("radius").get<std::size_t>() != radius) fail(ErrorKind::cache_error, "cache for another radius");
    const auto words = j.at("words").get<std::vector<Word>>();
    if (words.size() != j.at("size").get<std::size_t>()) fail(ErrorKind::cache_error, "truncated cache file");
    return Ball::from_words(graph, radius, words);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::cache_error, std::string("bad cache file: ") + e.what());
  }
}

Ball cached_ball(const CoxeterGraph& graph, std::size_t radius, const std::optional<fs::path>& dir, std::size_t element_cap) {
  if (!dir) return Ball::build(graph, radius, element_cap);
  const fs::path file = cache_file(*dir, graph, radius);
  if (fs::exists(file)) {
    try {
      Ball ball = load_ball(graph, radius, file);
      if (ball.size() <= element_cap) return ball;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::cache_error) throw;
    }
  }
  Ball ball = Ball::build(graph, radius, element_cap);
  save_ball(ball, file);
  return ball;
}

}  // namespace coxpart
