// tiltcat: count, list and check tilting modules over left Harada algebras.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tiltcat/cli/commands.hpp"

namespace {

struct Raw {
  std::string blocks;
  std::string format = "text";
};

void add_common(CLI::App* sub, tiltcat::cli::RunConfig& cfg, Raw& raw, bool blocks_required) {
  auto* b = sub->add_option("--blocks", raw.blocks, "block sizes, e.g. 3 or 2,1");
  if (blocks_required) b->required();
  sub->add_option("--prime", cfg.prime, "prime field characteristic (default 101, or TILTCAT_PRIME)");
  sub->add_option("--seed", cfg.seed, "seed for randomized checks");
  sub->add_option("--format", raw.format, "json | text | svg");
  sub->add_option("--out", cfg.out, "output path");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tiltcat::cli;
  RunConfig cfg;
  Raw raw;
  try {
    cfg.prime = default_prime();
  } catch (const std::exception&) {
    std::cerr << "error: TILTCAT_PRIME is not a number\n";
    return kUsage;
  }

  CLI::App app{"Tilting modules over left Harada algebras"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "number of basic tilting modules");
  add_common(count, cfg, raw, true);

  auto* enumerate = app.add_subcommand("enumerate", "list tilting modules");
  add_common(enumerate, cfg, raw, true);
  enumerate->add_option("--limit", cfg.limit, "stop after N modules");
  enumerate->add_flag("--count-only", cfg.count_only, "print the count instead of the list");

  auto* verify = app.add_subcommand("verify", "check a module (or array of modules) from JSON");
  add_common(verify, cfg, raw, false);
  verify->add_option("module", cfg.module_file, "module JSON file")->required();

  auto* cross = app.add_subcommand("crosscheck", "compare the engine with the combinatorial rules");
  add_common(cross, cfg, raw, false);
  cross->add_option("--lambda", cfg.lambda, "field | trunc:L | nakayama:M:L");
  cross->add_option("--algebra", cfg.algebra_file, "algebra JSON file instead of --lambda");

  auto* render = app.add_subcommand("render", "draw triangulations or the AR quiver");
  add_common(render, cfg, raw, false);
  render->add_option("--n", cfg.n, "polygon has n+2 vertices")->required();
  render->add_option("--what", cfg.what, "triangulations | arquiver")->required();

  auto* algebra = app.add_subcommand("algebra", "write the block extension as JSON");
  add_common(algebra, cfg, raw, true);
  algebra->add_option("--lambda", cfg.lambda, "field | trunc:L | nakayama:M:L");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (!raw.blocks.empty()) cfg.blocks = parse_blocks(raw.blocks);
    cfg.format = parse_format(raw.format);
    if (cfg.command == "crosscheck" && cfg.blocks.empty() && cfg.algebra_file.empty())
      throw UsageError("crosscheck needs --blocks or --algebra");
    if (!tiltcat::engine::is_prime(cfg.prime)) throw UsageError("--prime must be prime");
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return run(cfg, std::cout, std::cerr);
}
