// weylsym: run exact verification suites for symmetric orderings in the
// completed Weyl algebra.

#include <chrono>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "weylsym/verify.hpp"

namespace {

struct Flags {
  std::size_t n = 3;
  std::size_t k = 3;
  unsigned max_order = 2;
  std::optional<unsigned> order;
  std::size_t trials = 10;
  std::uint64_t seed = 0;
  std::optional<std::string> sc_path;
  std::string output = "text";
  std::string sparsity = "1/2";
  unsigned jobs = 1;
  bool timing = false;
};

void add_common(CLI::App* sub, Flags& f, bool needs_sc) {
  sub->add_option("--n", f.n, "Weyl algebra dimension n");
  sub->add_option("--k", f.k, "word length k");
  sub->add_option("--n-max", f.max_order, "largest series order N_max");
  sub->add_option("--D", f.order, "truncation order (default depends on the command)");
  sub->add_option("--trials", f.trials, "number of seeded trials");
  sub->add_option("--seed", f.seed, "base seed; trial t uses seed + t");
  auto* sc = sub->add_option("--sc", f.sc_path, "structure constants JSON file");
  if (needs_sc) sc->required();
  sub->add_option("--sparsity", f.sparsity, "coefficient density, a rational in [0,1]");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of symmetric orderings in the completed Weyl algebra"};
  app.require_subcommand(1);
  Flags f;
  app.add_option("--output", f.output, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--jobs", f.jobs, "worker threads (report is independent of this)");
  app.add_flag("--timing", f.timing, "print wall time to stderr");

  struct Sub {
    weylsym::Command command;
    const char* help;
  };
  const Sub subs[] = {
      {weylsym::Command::verify_theorem, "check the symmetric-ordering identity on random families"},
      {weylsym::Command::verify_iota, "check the universal embedding for a structure-constant file"},
      {weylsym::Command::cancellation, "evaluate the cancellation sums on random families"},
      {weylsym::Command::span_dim, "rank of degree-k words versus symmetric polynomials"},
      {weylsym::Command::bernoulli, "table of Bernoulli numbers B_0..B_{n-max}"},
  };
  std::vector<std::pair<CLI::App*, weylsym::Command>> handles;
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(weylsym::command_name(s.command), s.help);
    add_common(sub, f, s.command == weylsym::Command::verify_iota);
    sub->add_option("--output", f.output, "report format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", f.jobs, "worker threads");
    sub->add_flag("--timing", f.timing, "print wall time to stderr");
    handles.emplace_back(sub, s.command);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    weylsym::RunConfig cfg;
    for (const auto& [sub, command] : handles)
      if (sub->parsed()) cfg.command = command;
    cfg.n = f.n;
    cfg.k = f.k;
    cfg.max_order = f.max_order;
    cfg.order = f.order;
    cfg.trials = f.trials;
    cfg.seed = f.seed;
    cfg.sc_path = f.sc_path;
    cfg.output = f.output == "json" ? weylsym::OutputFormat::json : weylsym::OutputFormat::text;
    cfg.jobs = std::max(1u, f.jobs);
    try {
      cfg.sparsity = weylsym::parse_rational(f.sparsity);
    } catch (const std::invalid_argument& e) {
      throw weylsym::InputError(std::string("--sparsity: ") + e.what());
    }

    const auto start = std::chrono::steady_clock::now();
    const auto report = weylsym::run(cfg);
    std::cout << weylsym::render(report);
    if (f.timing) {
      const std::chrono::duration<double> wall = std::chrono::steady_clock::now() - start;
      std::cerr << "wall time: " << wall.count() << " s\n";
    }
    return weylsym::exit_status(report);
  } catch (const weylsym::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
