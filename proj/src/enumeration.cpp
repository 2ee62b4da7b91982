#include "coxpart/enumeration.hpp"

#include <cctype>
#include <regex>
#include <sstream>

#include "json.hpp"

#include "coxpart/error.hpp"
#include "coxpart/parallel.hpp"
#include "coxpart/partitions.hpp"

namespace coxpart {

GenPoly& GenPoly::operator+=(const GenPoly& o) {
  if (o.coeffs.size() > coeffs.size()) coeffs.resize(o.coeffs.size(), 0);
  for (std::size_t i = 0; i < o.coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

SplitCounts split_counts(const Ball& ball, unsigned workers) {
  // per-length buckets so each task owns a whole level
  const std::size_t levels = ball.radius() + 1;
  auto tallies = parallel_map(levels, workers, [&](std::size_t len) {
    std::pair<std::uint64_t, std::uint64_t> t{0, 0};
    for (ElementId w = ball.level_begin(len); w < ball.level_end(len); ++w) {
      if (has_proper_bipartition(ball, w)) ++t.first;
      else ++t.second;
    }
    return t;
  });
  SplitCounts out{GenPoly{std::vector<std::uint64_t>(levels, 0)}, GenPoly{std::vector<std::uint64_t>(levels, 0)}};
  for (std::size_t l = 0; l < levels; ++l) {
    out.bip.coeffs[l] = tallies[l].first;
    out.pirr.coeffs[l] = tallies[l].second;
  }
  return out;
}

GenPoly bip_genfun(const Ball& ball, unsigned workers) { return split_counts(ball, workers).bip; }
GenPoly pirr_genfun(const Ball& ball, unsigned workers) { return split_counts(ball, workers).pirr; }
GenPoly growth_series(const Ball& ball) { return GenPoly{ball.growth()}; }

std::string format_poly(const GenPoly& p) {
  std::string s;
  for (std::size_t l = 0; l < p.coeffs.size(); ++l) {
    const auto c = p.coeffs[l];
    if (c == 0) continue;
    if (!s.empty()) s += " + ";
    if (l == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c) + "*";
    s += l == 1 ? "q" : "q^" + std::to_string(l);
  }
  return s.empty() ? "0" : s;
}

std::string format_json(const GenPoly& p) {
  nlohmann::json j;
  j["coeffs"] = p.coeffs;
  return j.dump();
}

std::string format_csv(const GenPoly& p) {
  std::ostringstream os;
  os << "length,count\n";
  for (std::size_t l = 0; l < p.coeffs.size(); ++l) os << l << ',' << p.coeffs[l] << '\n';
  return os.str();
}

GenPoly parse_poly(const std::string& text, std::size_t degree) {
  GenPoly p{std::vector<std::uint64_t>(degree + 1, 0)};
  std::string clean;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}' && ch != '*' && ch != '$') clean += ch;
  if (clean == "0") return p;
  static const std::regex term(R"((\d*)(q(\^(\d+))?)?)");
  std::stringstream ss(clean);
  std::string piece;
  while (std::getline(ss, piece, '+')) {
    std::smatch m;
    if (piece.empty() || !std::regex_match(piece, m, term))
      fail(ErrorKind::malformed_spec, "bad polynomial term '" + piece + "'");
    const std::uint64_t c = m[1].length() ? std::stoull(m[1].str()) : 1;
    std::size_t e = 0;
    if (m[2].matched) e = m[4].matched ? std::stoul(m[4].str()) : 1;
    if (e > degree) fail(ErrorKind::malformed_spec, "term beyond degree in '" + text + "'");
    p.coeffs[e] += c;
  }
  return p;
}

}  // namespace coxpart
