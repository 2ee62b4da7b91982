#pragma once

// On-disk cache of balls: the element words in ball order, keyed by the
// canonical graph hash, the radius and the engine version.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "coxpart/ball.hpp"

namespace coxpart {

inline constexpr const char* kEngineVersion = "coxpart-ball-1";

std::filesystem::path cache_file(const std::filesystem::path& dir, const CoxeterGraph& graph, std::size_t radius);

// The explicit directory, else $COXPART_CACHE_DIR, else none.
std::optional<std::filesystem::path> resolve_cache_dir(const std::optional<std::string>& flag);

void save_ball(const Ball& ball, const std::filesystem::path& file);
// Throws ErrorKind::cache_error when the file is unreadable, belongs to
// another graph, radius or engine version, or does not replay to a ball.
Ball load_ball(const CoxeterGraph& graph, std::size_t radius, const std::filesystem::path& file);

// Uses the cache when `dir` is set: replays a matching file, otherwise builds
// and writes one. A file that fails to replay is rebuilt and overwritten.
Ball cached_ball(const CoxeterGraph& graph, std::size_t radius, const std::optional<std::filesystem::path>& dir,
                 std::size_t element_cap = Ball::kDefaultElementCap);

}  // namespace coxpart
