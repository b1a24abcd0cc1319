// Copyright 2026 The Centralizer Lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end over the C API. Exit codes: 0 all checks pass,
// 1 a check failed, 2 the input was rejected.

#include <CLI11.hpp>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <string>

#include "centralizer/centralizer.h"

namespace {

struct Globals {
  bool timings = false;
  bool json = false;
  std::string output;
  uint64_t seed = 1;
};

struct Params {
  int m = 1, n = 0, f = 0;
  long p = 0;
  std::string field = "Q";
  std::string a, b, algebra, module, name;
};

using Command = std::function<cl_status(cl_session*, char**, char**)>;

int execute(const Globals& g, const std::string& field, const Command& cmd) {
  std::unique_ptr<cl_session, decltype(&cl_session_free)> s(cl_session_new(field.c_str()),
                                                           &cl_session_free);
  if (!s) {
    std::cerr << "error: " << cl_last_error(nullptr) << "\n";
    return 2;
  }
  cl_session_set_timings(s.get(), g.timings ? 1 : 0);
  cl_session_set_seed(s.get(), g.seed);
  char* report = nullptr;
  char* summary = nullptr;
  cl_status st = cmd(s.get(), &report, &summary);
  if (!report) {
    std::cerr << "error: " << cl_last_error(s.get()) << "\n";
    return st == CL_PRECONDITION ? 2 : 1;
  }
  std::cout << (g.json ? report : summary);
  if (!g.output.empty()) {
    std::ofstream out(g.output, std::ios::binary);
    out << report;
    if (!out) {
      std::cerr << "error: cannot write " << g.output << "\n";
      st = CL_FAIL;
    }
  }
  cl_string_free(report);
  cl_string_free(summary);
  return st == CL_PASS ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double centralizer checks for Brauer algebras, symplectic tensor space and stratified algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(cl_version()));
  Globals g;
  Params p;
  app.add_flag("--timings", g.timings, "Include wall-clock timings in the report");
  app.add_flag("--json", g.json, "Print the JSON report instead of the summary");
  app.add_option("--output", g.output, "Write the JSON report to this file");
  app.add_option("--seed", g.seed, "Seed for randomized checks")->capture_default_str();

  Command cmd;
  auto field_opt = [&](CLI::App* c) {
    c->add_option("--field", p.field, "Q, F<p>, GF(<p>) or a prime")->capture_default_str();
  };

  auto* brauer = app.add_subcommand("brauer", "Brauer algebra with parameter -2m");
  brauer->require_subcommand(1);
  auto* mul = brauer->add_subcommand("mul", "Product of two diagrams");
  mul->add_option("a", p.a, "First diagram, e.g. \"[(1,2),(1',2')]\"")->required();
  mul->add_option("b", p.b, "Second diagram")->required();
  mul->add_option("--m", p.m, "Parameter delta = -2m")->capture_default_str();
  field_opt(mul);
  mul->callback([&] {
    cmd = [&](cl_session* s, char** r, char** sm) { return cl_brauer_mul(s, p.a.c_str(), p.b.c_str(), p.m, r, sm); };
  });
  auto* ideal = brauer->add_subcommand("ideal-dim", "Dimension of the ideal generated by e_1 e_3 ... e_{2f-1}");
  ideal->add_option("--n", p.n, "Strands")->required();
  ideal->add_option("--f", p.f, "Number of arcs")->required();
  ideal->add_option("--m", p.m, "Parameter delta = -2m")->capture_default_str();
  field_opt(ideal);
  ideal->callback([&] {
    cmd = [&](cl_session* s, char** r, char** sm) { return cl_brauer_ideal_dim(s, p.n, p.f, p.m, r, sm); };
  });

  auto* spsw = app.add_subcommand("spsw", "Symplectic tensor space V^n, dim V = 2m");
  spsw->require_subcommand(1);
  auto mn = [&](CLI::App* c) {
    c->add_option("--m", p.m, "Half the dimension of V")->required();
    c->add_option("--n", p.n, "Tensor power")->required();
  };
  auto* schur = spsw->add_subcommand("schur", "Symplectic Schur algebra as a commutant");
  mn(schur);
  field_opt(schur);
  schur->callback([&] {
    cmd = [&](cl_session* s, char** r, char** sm) { return cl_spsw_schur(s, p.m, p.n, r, sm); };
  });
  auto* harmonic = spsw->add_subcommand("harmonic", "Subspaces W_f, H_f^* and partially harmonic tensors");
  mn(harmonic);
  harmonic->add_option("--f", p.f, "Ideal index")->required();
  field_opt(harmonic);
  harmonic->callback([&] {
    cmd = [&](cl_session* s, char** r, char** sm) { return cl_spsw_harmonic(s, p.m, p.n, p.f, r, sm); };
  });
  auto* thm = spsw->add_subcommand("check-thm19", "Surjectivity onto the commutant on Q_f and the exact sequence");
  mn(thm);
  thm->add_option("--f", p.f, "Ideal index")->required();
  field_opt(thm);
  thm->callback([&] {
    cmd = [&](cl_session* s, char** r, char** sm) { return cl_spsw_quotient_duality(s, p.m, p.n, p.f, r, sm); };
  });
  auto* weights = spsw->add_subcommand("weights", "Dominant weights, Lambda_f^+ and dot-action separation");
  mn(weights);
  weights->add_option("--f", p.f, "Ideal index")->required();
  weights->add_option("--p", p.p, "Prime for the dot-action search (omit to skip)");
  weights->callback([&] {
    cmd = [&](cl_session* s, char** r, char** sm) { return cl_spsw_weights(s, p.m, p.n, p.f, p.p, r, sm); };
  });

  auto* dcp = app.add_subcommand("dcp", "Double centralizer property of a module over an algebra file");
  dcp->add_option("--algebra", p.algebra, "Algebra JSON file")->required()->check(CLI::ExistingFile);
  dcp->add_option("--module", p.module, "Module JSON file (default: regular module)")->check(CLI::ExistingFile);
  dcp->callback([&] {
    cmd = [&](cl_session* s, char** r, char** sm) {
      return cl_dcp_file(s, p.algebra.c_str(), p.module.empty() ? nullptr : p.module.c_str(), r, sm);
    };
  });

  auto* corpus = app.add_subcommand("corpus", "Run the algebra checks on the built-in corpus");
  corpus->add_option("--name", p.name, "Single corpus entry (default: all)");
  field_opt(corpus);
  corpus->callback([&] {
    cmd = [&](cl_session* s, char** r, char** sm) { return cl_corpus_check(s, p.name.c_str(), r, sm); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (!cmd) return 2;
  return execute(g, p.field, cmd);
}
