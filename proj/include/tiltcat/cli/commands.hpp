#pragma once

// Command implementations behind the tiltcat executable. Each command writes
// to the given streams and returns the process exit code.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tiltcat/combinatorics.hpp"
#include "tiltcat/crosscheck.hpp"
#include "tiltcat/engine/harada_algebra.hpp"
#include "tiltcat/harada.hpp"
#include "tiltcat/io.hpp"
#include "tiltcat/render.hpp"

namespace tiltcat::cli {

enum ExitCode : int { kOk = 0, kReject = 1, kUsage = 2, kInconsistent = 3 };

enum class Format { json, text, svg };

struct RunConfig {
  std::string command;
  std::vector<int> blocks;
  std::string lambda = "field";
  std::uint32_t prime = 101;
  std::uint64_t seed = 42;
  Format format = Format::text;
  std::string out;
  std::size_t limit = 0;
  bool count_only = false;
  int n = 0;
  std::string what;
  std::string module_file;
  std::string algebra_file;
};

/// 101 unless TILTCAT_PRIME is set.
inline std::uint32_t default_prime() {
  if (const char* env = std::getenv("TILTCAT_PRIME"); env && *env) return static_cast<std::uint32_t>(std::stoul(env));
  return 101;
}

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::vector<int> parse_blocks(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad block size '" + item + "'");
    }
    if (used != item.size() || v < 1) throw UsageError("bad block size '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--blocks needs at least one positive size");
  return out;
}

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  if (s == "svg") return Format::svg;
  throw UsageError("unknown format '" + s + "'");
}

/// field | trunc:L | nakayama:M:L, checked against the number of blocks.
/// "field" with m blocks is the product of m copies of the field.
inline engine::AlgebraPtr build_lambda(const std::string& choice, std::size_t blocks, std::uint32_t p) {
  auto parts = std::vector<std::string>{};
  std::stringstream ss(choice);
  for (std::string t; std::getline(ss, t, ':');) parts.push_back(t);
  auto num = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      throw UsageError("bad number in --lambda: '" + t + "'");
    }
    if (used != t.size() || v < 1) throw UsageError("bad number in --lambda: '" + t + "'");
    return v;
  };
  if (parts.size() == 1 && parts[0] == "field") return engine::nakayama_qf(static_cast<int>(blocks), 1, p);
  if (parts.size() == 2 && parts[0] == "trunc") {
    if (blocks != 1) throw UsageError("--lambda trunc:L has one idempotent but --blocks has " + std::to_string(blocks));
    return engine::nakayama_qf(1, num(parts[1]), p);
  }
  if (parts.size() == 3 && parts[0] == "nakayama") {
    const int m = num(parts[1]);
    if (static_cast<std::size_t>(m) != blocks)
      throw UsageError("--lambda nakayama:" + parts[1] + ":L has " + parts[1] + " idempotents but --blocks has " +
                       std::to_string(blocks));
    return engine::nakayama_qf(m, num(parts[2]), p);
  }
  throw UsageError("unknown --lambda '" + choice + "' (expected field | trunc:L | nakayama:M:L)");
}

namespace detail {

/// Writes to --out when given, else to `out`. Returns false on I/O failure.
inline bool emit(const RunConfig& cfg, std::ostream& out, std::ostream& err, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return true;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) {
    err << "error: cannot write " << cfg.out << "\n";
    return false;
  }
  return true;
}

inline std::string module_text(const harada::HaradaModule& m) {
  std::string line;
  for (int i = 1; i <= m.type.m(); ++i) {
    std::vector<comb::Coordinate> cs;
    for (const auto& x : m.summands)
      if (x.block == i) cs.push_back(harada::f_object(m.type, x).coord);
    std::sort(cs.begin(), cs.end());
    if (i > 1) line += ' ';
    line += "block" + std::to_string(i) + ": " + render::coordinates_text(cs);
  }
  return line;
}

inline nlohmann::json big_json(const comb::BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

}  // namespace detail

inline int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const harada::HaradaType h(cfg.blocks);
  const auto total = harada::count_tilting(h);
  std::ostringstream os;
  if (cfg.format == Format::json) {
    nlohmann::json factors = nlohmann::json::array();
    for (int n : h.blocks()) factors.push_back({{"n", n}, {"catalan", detail::big_json(comb::catalan(n))}});
    os << nlohmann::json{{"blocks", h.blocks()}, {"count", detail::big_json(total)}, {"factors", factors}}.dump()
       << "\n";
  } else {
    for (int n : h.blocks()) os << "catalan(" << n << ") = " << comb::catalan(n) << "\n";
    os << total << "\n";
  }
  return detail::emit(cfg, out, err, os.str()) ? kOk : kUsage;
}

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const harada::HaradaType h(cfg.blocks);
  if (cfg.count_only) return cmd_count(cfg, out, err);
  for (int n : h.blocks())
    if (n > render::kMaxRenderN) {
      err << "error: block size " << n << " exceeds " << render::kMaxRenderN << "; use --count-only\n";
      return kUsage;
    }
  std::ostringstream os;
  const auto mods = harada::enumerate_tilting(h, cfg.limit);
  if (cfg.format == Format::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& m : mods) arr.push_back(io::to_json(m));
    os << arr.dump() << "\n";
  } else if (cfg.format == Format::text) {
    for (const auto& m : mods) os << detail::module_text(m) << "\n";
  } else {
    err << "error: enumerate supports --format json|text\n";
    return kUsage;
  }
  return detail::emit(cfg, out, err, os.str()) ? kOk : kUsage;
}

/// Accepts a single module object or an array of them; exit 0 iff all are
/// tilting.
inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  nlohmann::json doc;
  try {
    std::ifstream f(cfg.module_file);
    if (!f) {
      err << "error: cannot read " << cfg.module_file << "\n";
      return kUsage;
    }
    doc = nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  }
  std::vector<harada::HaradaModule> mods;
  try {
    if (doc.is_array())
      for (const auto& m : doc) mods.push_back(io::harada_module_from_json(m));
    else
      mods.push_back(io::harada_module_from_json(doc));
  } catch (const std::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  }
  int code = kOk;
  for (const auto& m : mods) {
    if (!cfg.blocks.empty() && m.type.blocks() != cfg.blocks) {
      err << "error: module type " << m.type.str() << " does not match --blocks\n";
      return kUsage;
    }
    const auto v = harada::check_tilting(m);
    if (v.accepted()) {
      out << "accept " << detail::module_text(m) << "\n";
    } else {
      out << "reject: " << v.message() << "\n";
      code = kReject;
    }
  }
  return code;
}

inline int cmd_crosscheck(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  engine::AlgebraPtr alg;
  if (!cfg.algebra_file.empty()) {
    std::ifstream f(cfg.algebra_file);
    if (!f) {
      err << "error: cannot read " << cfg.algebra_file << "\n";
      return kUsage;
    }
    try {
      alg = io::algebra_from_json(nlohmann::json::parse(f));
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
    if (!cfg.blocks.empty() && alg->grid_shape() != cfg.blocks) {
      err << "error: algebra grid does not match --blocks\n";
      return kUsage;
    }
  } else {
    const auto lambda = build_lambda(cfg.lambda, cfg.blocks.size(), cfg.prime);
    alg = engine::block_extension(lambda, cfg.blocks);
  }
  std::ostringstream os;
  bool ok = true;
  const auto type = engine::grid_type(*alg);
  os << "algebra: blocks " << type.str() << ", dim " << alg->dim() << ", p " << alg->field().modulus() << "\n";
  std::set<int> sizes(type.blocks().begin(), type.blocks().end());
  for (int n : sizes) {
    const auto mism = check::compare_factor_rules(check::factor_oracle(n, alg->field().modulus()));
    ok = ok && mism.empty();
    os << (mism.empty() ? "PASS" : "FAIL") << "  factor rules T_" << n << ": " << mism.size() << " disagreements";
    for (const auto& m : mism) os << "; " << m.what;
    os << "\n";
  }
  const auto r = check::harada_crosscheck(alg, {cfg.seed, 64});
  for (const auto& l : r.lines) {
    os << (l.pass ? "PASS" : "FAIL") << "  " << l.name << ": " << l.detail << "\n";
    ok = ok && l.pass;
  }
  os << "tilting count " << r.engine_tilting_count << "\n";
  if (!detail::emit(cfg, out, err, os.str())) return kUsage;
  return ok ? kOk : kInconsistent;
}

inline int cmd_render(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    render::check_budget(cfg.n);
  } catch (const std::invalid_argument& e) {
    err << "refused: " << e.what() << "\n";
    return kUsage;
  }
  if (cfg.what == "arquiver") {
    const auto q = comb::ar_quiver(cfg.n);
    return detail::emit(cfg, out, err, cfg.format == Format::svg ? render::arquiver_svg(q) : render::arquiver_text(q))
               ? kOk
               : kUsage;
  }
  if (cfg.what != "triangulations") {
    err << "error: --what must be triangulations or arquiver\n";
    return kUsage;
  }
  const auto& ts = comb::cached_triangulations(cfg.n);
  if (cfg.format != Format::svg) {
    std::ostringstream os;
    for (const auto& t : ts) {
      if (cfg.format == Format::json)
        os << io::to_json(t).dump() << "\n";
      else
        os << render::coordinates_text(t.diagonals()) << "\n";
    }
    return detail::emit(cfg, out, err, os.str()) ? kOk : kUsage;
  }
  // one SVG file per triangulation, written into the --out directory
  const std::filesystem::path dir = cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const int width = static_cast<int>(std::to_string(ts.size()).size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::ostringstream name;
    name << "triangulation_n" << cfg.n << "_" << std::setw(width) << std::setfill('0') << (i + 1) << ".svg";
    const auto path = dir / name.str();
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << render::triangulation_svg(ts[i]))) {
      err << "error: cannot write " << path.string() << "\n";
      return kUsage;
    }
    out << path.string() << "\n";
  }
  return kOk;
}

/// Writes the block extension selected by --lambda/--blocks as algebra JSON.
inline int cmd_algebra(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto lambda = build_lambda(cfg.lambda, cfg.blocks.size(), cfg.prime);
  const auto alg = engine::block_extension(lambda, cfg.blocks);
  return detail::emit(cfg, out, err, io::to_json(*alg).dump() + "\n") ? kOk : kUsage;
}

/// Dispatches a parsed configuration, mapping exceptions to exit codes.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "count") return cmd_count(cfg, out, err);
    if (cfg.command == "enumerate") return cmd_enumerate(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "crosscheck") return cmd_crosscheck(cfg, out, err);
    if (cfg.command == "render") return cmd_render(cfg, out, err);
    if (cfg.command == "algebra") return cmd_algebra(cfg, out, err);
    err << "error: unknown command '" << cfg.command << "'\n";
    return kUsage;
  } catch (const internal_error& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const construction_rejected& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace tiltcat::cli
