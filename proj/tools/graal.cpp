// SPDX-License-Identifier: Apache-2.0
//
// graal <cmd> <file> [--json] [--seed N] [--max-length L]
//
// Commands: gr, dim, regular, sop, hilbert, resolve.  Input files follow
// the grammar in docs/problem-format.md.  GRAAL_VERIFY=1 replays every
// internal invariant after each computation.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "graal/problem.hpp"
#include "graal/report.hpp"

namespace {

struct CmdOptions {
  std::string file;
  bool json = false;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int max_length = -1;
  bool max_length_set = false;
};

struct Pipeline {
  graal::ProblemFile pf;
  std::shared_ptr<const graal::RingTower> T;
  std::shared_ptr<const graal::GradedPresentation> gp;
  std::uint64_t seed = 0;
  int max_length = -1;
};

Pipeline build_pipeline(const CmdOptions& o) {
  Pipeline p;
  p.pf = graal::load_problem(o.file);
  p.T = graal::build_tower(p.pf.Q, p.pf.H, p.pf.J);
  p.gp = graal::gr_presentation(graal::build_presentation(p.T));
  p.seed = o.seed_set ? o.seed : (p.pf.has_seed ? p.pf.seed : 0);
  p.max_length = o.max_length_set
                     ? o.max_length
                     : (p.pf.has_max_length ? p.pf.max_length : -1);
  return p;
}

std::vector<graal::QPoly> require_I(const Pipeline& p,
                                    const std::string& cmd) {
  if (!p.pf.has_I)
    throw graal::InputError("'" + cmd +
                            "' needs an I section in the problem file");
  return graal::resolve_I(p.pf);
}

void emit(const CmdOptions& o, const std::string& cmd, const Pipeline& p,
          const graal::Json& result, const std::string& text,
          const graal::ReportClock& clock) {
  if (o.json) {
    std::cout << graal::make_report(cmd, p.seed, *p.T, result, clock.ms())
                     .dump(2)
              << "\n";
  } else {
    std::cout << graal::make_text_report(cmd, *p.T, text, clock.ms());
  }
}

void run_command(const std::string& cmd, const CmdOptions& o) {
  graal::ReportClock clock;
  Pipeline p = build_pipeline(o);

  if (cmd == "gr") {
    auto cf = graal::compress_residue_field(*p.T, p.seed);
    emit(o, cmd, p, graal::gr_result_json(*p.gp, cf),
         graal::gr_result_text(*p.gp, cf), clock);
  } else if (cmd == "dim") {
    int d = graal::local_dim(*p.gp);
    emit(o, cmd, p, graal::dim_result_json(d),
         "dimension: " + std::to_string(d), clock);
  } else if (cmd == "regular") {
    bool reg = graal::is_regular(*p.gp);
    auto result = graal::regular_result_json(*p.gp, reg);
    std::string text = std::string("regular: ") + (reg ? "true" : "false") +
                       "\ndimension: " + result["dimension"].dump() +
                       "\nembedding dimension: " +
                       result["embedding_dimension"].dump();
    emit(o, cmd, p, result, text, clock);
  } else if (cmd == "sop") {
    auto r = graal::system_of_parameters(*p.gp, p.seed);
    emit(o, cmd, p, graal::sop_result_json(*p.gp, r),
         graal::sop_result_text(*p.gp, r), clock);
  } else if (cmd == "hilbert") {
    auto h = graal::hilbert_samuel(*p.gp, require_I(p, cmd));
    emit(o, cmd, p, graal::hilbert_result_json(h),
         graal::hilbert_result_text(h), clock);
  } else {
    auto res =
        graal::lift_resolution(p.gp, require_I(p, cmd), p.max_length);
    emit(o, cmd, p, graal::resolve_result_json(res),
         graal::resolve_result_text(res), clock);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"localizations of affine coordinate rings and their "
               "associated graded rings"};
  app.require_subcommand(1);

  const struct {
    const char* name;
    const char* desc;
    bool takes_max_length;
  } cmds[] = {
      {"gr", "present the associated graded ring and its residue field",
       false},
      {"dim", "Krull dimension of the localized ring", false},
      {"regular", "test the localized ring for regularity", false},
      {"sop", "find a homogeneous system of parameters", false},
      {"hilbert", "Hilbert-Samuel polynomial of the ideal I", false},
      {"resolve", "lift a graded free resolution of I", true},
  };

  CmdOptions opts;
  std::string picked;
  for (auto& c : cmds) {
    auto* sub = app.add_subcommand(c.name, c.desc);
    sub->add_option("file", opts.file, "problem file")->required();
    sub->add_flag("--json", opts.json, "machine-readable report");
    sub->add_option("--seed", opts.seed, "seed for randomized steps")
        ->trigger_on_parse()
        ->each([&](const std::string&) { opts.seed_set = true; });
    if (c.takes_max_length)
      sub->add_option("--max-length", opts.max_length,
                      "stop the resolution after this many steps")
          ->trigger_on_parse()
          ->each([&](const std::string&) { opts.max_length_set = true; });
    sub->callback([&picked, name = std::string(c.name)] { picked = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  return graal::run_guarded([&] { run_command(picked, opts); });
}
