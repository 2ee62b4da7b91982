#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxpart/ball.hpp"
#include "coxpart/cache.hpp"
#include "coxpart/enumeration.hpp"
#include "coxpart/error.hpp"
#include "coxpart/graph.hpp"
#include "coxpart/partitions.hpp"
#include "coxpart/perm_b.hpp"

using namespace coxpart;

namespace {

enum Exit { kOk = 0, kViolations = 1, kUsage = 2, kResource = 3 };

struct RunConfig {
  std::string group;
  std::string group_file;
  std::string stat = "bip";
  std::optional<std::size_t> max_len;
  std::string format = "poly";
  std::optional<std::string> cache_dir;
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::size_t element_cap = Ball::kDefaultElementCap;
  int conjecture = 1;
  std::string word;
  std::string signed_word;
  std::string report;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CoxeterGraph load_group(const RunConfig& cfg) {
  if (cfg.group.empty() == cfg.group_file.empty()) throw UsageError("give exactly one of --group and --group-file");
  return cfg.group.empty() ? load_graph_file(cfg.group_file) : parse_graph(cfg.group);
}

Ball ball_for(const RunConfig& cfg, const CoxeterGraph& graph, std::size_t radius) {
  return cached_ball(graph, radius, resolve_cache_dir(cfg.cache_dir), cfg.element_cap);
}

std::size_t require_max_len(const RunConfig& cfg) {
  if (!cfg.max_len) throw UsageError("--max-len is required");
  return *cfg.max_len;
}

// The element named by --word or --signed-word, as a reduced word.
Word target_word(const RunConfig& cfg, const CoxeterGraph& graph) {
  const CoxeterSystem sys(graph);
  if (!cfg.signed_word.empty()) {
    if (!cfg.word.empty()) throw UsageError("give only one of --word and --signed-word");
    const perm::SignedPerm s = perm::parse_signed(cfg.signed_word);
    if (parse_graph("B" + std::to_string(s.n())).labels() != graph.labels())
      throw UsageError("--signed-word needs the group B" + std::to_string(s.n()));
    return perm::reduced_word_B(s);
  }
  return sys.reduced_word(sys.from_word(parse_word_labels(cfg.word, graph.rank())));
}

std::string part_text(const Ball& ball, ElementId id, bool signed_form) {
  if (!signed_form) return word_text(ball, id);
  return perm::format_signed(perm::signed_from_coxeter(ball.system(), ball.element(id)));
}

std::string given_text(const RunConfig& cfg) {
  if (!cfg.signed_word.empty()) return perm::format_signed(perm::parse_signed(cfg.signed_word));
  return cfg.word.empty() ? "e" : cfg.word;
}

std::size_t d_r(const Ball& ball, ElementId id) { return static_cast<std::size_t>(popcount(ball.right_descents(id))); }

int cmd_genfun(const RunConfig& cfg) {
  const CoxeterGraph graph = load_group(cfg);
  const Ball ball = ball_for(cfg, graph, require_max_len(cfg));
  GenPoly poly;
  if (cfg.stat == "bip")
    poly = bip_genfun(ball, cfg.workers);
  else if (cfg.stat == "pirr")
    poly = pirr_genfun(ball, cfg.workers);
  else
    throw UsageError("--stat must be bip or pirr");
  if (cfg.format == "poly")
    std::cout << format_poly(poly) << "\n";
  else if (cfg.format == "json")
    std::cout << format_json(poly) << "\n";
  else if (cfg.format == "csv")
    std::cout << format_csv(poly);
  else
    throw UsageError("--format must be poly, json or csv");
  return kOk;
}

int cmd_bipartitions(const RunConfig& cfg) {
  const CoxeterGraph graph = load_group(cfg);
  const Word word = target_word(cfg, graph);
  const Ball ball = ball_for(cfg, graph, word.size());
  const ElementId w = ball.id_of_word(word);
  const bool signed_form = !cfg.signed_word.empty();

  auto bips = bipartitions(ball, w);
  // longer part first
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (const auto& b : bips) {
    const bool swap = ball.length(b.v) > ball.length(b.u) || (ball.length(b.v) == ball.length(b.u) && b.v < b.u);
    pairs.emplace_back(swap ? b.v : b.u, swap ? b.u : b.v);
  }
  std::size_t proper = 0, broken = 0;
  const std::size_t dw = d_r(ball, w);
  nlohmann::ordered_json j;
  j["w"] = given_text(cfg);
  j["length"] = ball.length(w);
  j["descents"] = dw;
  auto& list = j["bipartitions"] = nlohmann::ordered_json::array();
  std::ostringstream text;
  text << "w = " << given_text(cfg) << "  length " << ball.length(w) << "  d_R " << dw << "\n";
  for (const auto& [u, v] : pairs) {
    const bool is_proper = u != 0 && v != 0;
    proper += is_proper;
    const std::size_t du = d_r(ball, u), dv = d_r(ball, v);
    broken += dw != du + dv;
    text << "{" << part_text(ball, u, signed_form) << ", " << part_text(ball, v, signed_form) << "}"
         << (is_proper ? " proper" : "") << "  d_R " << dw << (dw == du + dv ? " = " : " != ") << du << " + " << dv
         << "\n";
    list.push_back({{"u", part_text(ball, u, signed_form)},
                    {"v", part_text(ball, v, signed_form)},
                    {"proper", is_proper},
                    {"descents", {du, dv}}});
  }
  text << "bipartitions " << pairs.size() << "  proper " << proper << "\n";
  j["proper"] = proper;
  if (cfg.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text.str();
  return broken ? kViolations : kOk;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.conjecture < 1 || cfg.conjecture > 3) throw UsageError("--conjecture must be 1, 2 or 3");
  const CoxeterGraph graph = load_group(cfg);
  const Ball ball = ball_for(cfg, graph, require_max_len(cfg));
  Report report = verify_conjecture(ball, cfg.conjecture, cfg.workers);
  if (!cfg.group.empty()) report.group = cfg.group;
  std::cout << report.to_json(false) << "\n";
  if (!cfg.report.empty()) {
    std::ofstream out(cfg.report);
    if (!out) throw UsageError("cannot write " + cfg.report);
    out << report.to_json(true) << "\n";
  }
  return report.violations.empty() ? kOk : kViolations;
}

int cmd_interval(const RunConfig& cfg) {
  const CoxeterGraph graph = load_group(cfg);
  const Word word = target_word(cfg, graph);
  const Ball ball = ball_for(cfg, graph, word.size());
  const ElementId w = ball.id_of_word(word);
  const bool signed_form = !cfg.signed_word.empty();
  const Interval iv = interval(ball, w);

  auto join = [&](const std::vector<ElementId>& ids) {
    std::string s;
    for (ElementId id : ids) s += (s.empty() ? "" : " ") + part_text(ball, id, signed_form);
    return s;
  };
  std::cout << "interval [e, " << given_text(cfg) << "]  length " << ball.length(w) << "  members "
            << iv.members.size() << "\n";
  std::cout << "members: " << join(iv.members) << "\n";
  std::cout << "atoms: " << join(atoms(ball, iv)) << "\n";
  std::cout << "coatoms: " << join(coatoms(ball, iv)) << "\n";
  const std::size_t cw = coatom_count(ball, w), aw = atom_count(ball, 0, w);
  bool broken = false;
  for (const auto& [u, v] : diameters(ball, w)) {
    const std::size_t cu = coatom_count(ball, u), cv = coatom_count(ball, v);
    const std::size_t au = atom_count(ball, u, w), av = atom_count(ball, v, w);
    broken = broken || cw != cu + cv || aw != au + av;
    std::cout << "diameter {" << part_text(ball, u, signed_form) << ", " << part_text(ball, v, signed_form)
              << "}  coatoms " << cw << (cw == cu + cv ? " = " : " != ") << cu << " + " << cv << "  atoms " << aw
              << (aw == au + av ? " = " : " != ") << au << " + " << av << "\n";
  }
  return broken ? kViolations : kOk;
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::resource_cap:
    case ErrorKind::cap_exceeded:
      return kResource;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartitions and weak-order intervals of Coxeter groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "group name, e.g. A3, B4, affineG2, tri(3,3,4), or edge list");
    sub->add_option("--group-file", cfg.group_file, "JSON file with a Coxeter matrix");
    sub->add_option("--cache-dir", cfg.cache_dir, "ball cache directory (default $COXPART_CACHE_DIR)");
    sub->add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--element-cap", cfg.element_cap, "largest ball to build")->check(CLI::PositiveNumber);
  };

  auto* genfun = app.add_subcommand("genfun", "length generating function of bip or pirr");
  common(genfun);
  genfun->add_option("--stat", cfg.stat, "bip or pirr")->check(CLI::IsMember({"bip", "pirr"}));
  genfun->add_option("--max-len", cfg.max_len, "largest length k");
  genfun->add_option("--format", cfg.format, "poly, json or csv")->check(CLI::IsMember({"poly", "json", "csv"}));

  auto* bip = app.add_subcommand("bipartitions", "list the bipartitions of one element");
  common(bip);
  bip->add_option("--word", cfg.word, "1-based generator labels, e.g. 32123");
  bip->add_option("--signed-word", cfg.signed_word, "signed permutation in B_n, e.g. \"2 -1 | 1 -2\"");
  bip->add_option("--format", cfg.format, "poly (text) or json")->check(CLI::IsMember({"poly", "json"}));

  auto* verify = app.add_subcommand("verify", "check a conjecture on every element up to a length");
  common(verify);
  verify->add_option("--conjecture", cfg.conjecture, "1, 2 or 3")->check(CLI::Range(1, 3));
  verify->add_option("--max-len", cfg.max_len, "largest length k");
  verify->add_option("--report", cfg.report, "also write the report with timing to this file");

  auto* iv = app.add_subcommand("interval", "atoms, coatoms and diameters of [e, w]");
  common(iv);
  iv->add_option("--word", cfg.word, "1-based generator labels");
  iv->add_option("--signed-word", cfg.signed_word, "signed permutation in B_n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*genfun) return cmd_genfun(cfg);
    if (*bip) return cmd_bipartitions(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*iv) return cmd_interval(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::bad_alloc&) {
    std::cerr << "error: out of memory\n";
    return kResource;
  }
  return kUsage;
}
