// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// vsverify: translate, check and measure visual scripts.
//
// Exit codes: 0 success / all specs hold, 1 some spec fails, 2 invalid input
// or engine failure, 3 state cap or timeout.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vsv/vsv.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;

struct Args {
  std::string input;
  std::string semantics;
  std::vector<std::string> spec_files;
  std::string opt = "none";
  std::string engine = "internal";
  std::string out;
  std::string format = "text";
  double timeout = 0;
  std::size_t state_cap = vsv::kDefaultStateCap;
  bool compare = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vsv::Error(vsv::ErrorKind::kSyntax, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// JSON spec documents, or plain text with one CTL formula per line.
std::vector<vsv::SpecRequest> load_specs(const std::vector<std::string>& files) {
  std::vector<vsv::SpecRequest> out;
  for (const auto& f : files) {
    const std::string text = read_file(f);
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '{' || text[first] == '[')) {
      for (auto& s : vsv::parse_spec_requests(text)) out.push_back(std::move(s));
      continue;
    }
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos || line.compare(b, 2, "--") == 0 || line[b] == '#') continue;
      out.push_back({vsv::parse_ctl(line.substr(b))});
    }
  }
  return out;
}

struct Loaded {
  vsv::Model model;
  bool from_system = false;
};

Loaded load(const Args& a, const std::vector<vsv::SpecRequest>& specs, const vsv::PipelineOptions& opts) {
  const std::string text = read_file(a.input);
  Loaded l;
  if (vsv::looks_like_system(text)) {
    l.from_system = true;
    l.model.system = vsv::parse_system(text);
    for (const auto& s : specs) l.model.system.specs.push_back(s.formula());
    vsv::check_well_formed(l.model.system);
    return l;
  }
  const vsv::SemanticsRegistry reg =
      a.semantics.empty() ? vsv::builtin_registry() : vsv::load_semantics(read_file(a.semantics));
  l.model = vsv::build_model(vsv::parse_graph(text), reg, specs, opts);
  return l;
}

int report_diagnostics(const vsv::Model& m) {
  for (const auto& d : m.diagnostics) std::cerr << vsv::to_string(d) << "\n";
  for (const auto& w : m.warnings) std::cerr << "warning: " << w << "\n";
  return m.ok() ? kExitOk : kExitInput;
}

std::string summary(const vsv::TransitionSystem& ts, const vsv::PipelineOptions& opts) {
  std::size_t count[4] = {0, 0, 0, 0};
  for (const auto& v : ts.variables) ++count[static_cast<int>(v.role)];
  std::ostringstream s;
  s << ts.variables.size() << " variables (" << count[0] << " input, " << count[1] << " output, " << count[2]
    << " state, " << count[3] << " script), " << ts.specs.size() << " spec(s), opt=" << opts.str() << "\n";
  return s.str();
}

std::vector<std::string> variable_order(const vsv::TransitionSystem& ts) {
  std::vector<std::string> names;
  for (const auto& v : ts.variables) names.push_back(v.name);
  return names;
}

json trace_json(const vsv::Trace& t) {
  return {{"prefix", t.prefix}, {"loop", t.loop}, {"loop_start", t.loop_start()}};
}

json flow_json(const vsv::ControlFlowPath& p) {
  json events = json::array();
  for (const auto& e : p.events)
    events.push_back({{"node", e.node}, {"port", e.port}, {"direction", e.input ? "in" : "out"}, {"step", e.step}});
  json notes = json::array();
  for (const auto& n : p.annotations)
    notes.push_back({{"step", n.step}, {"variable", n.variable}, {"value", n.value}, {"unmapped", n.unmapped}});
  return {{"events", events}, {"annotations", notes}, {"rendered", p.render()}};
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw vsv::Error(vsv::ErrorKind::kSyntax, "cannot write " + path);
}

int cmd_translate(const Args& a) {
  const auto opts = vsv::parse_opt(a.opt);
  const auto specs = load_specs(a.spec_files);
  const Loaded l = load(a, specs, opts);
  if (report_diagnostics(l.model) != kExitOk) return kExitInput;
  const std::string smv = vsv::emit_smv(l.model.system);
  if (a.format == "json") {
    json j = {{"variables", json::array()}, {"opt", opts.str()}, {"passes", l.model.report.text()}};
    for (const auto& v : l.model.system.variables)
      j["variables"].push_back({{"name", v.name}, {"role", vsv::to_string(v.role)}, {"domain", v.domain}});
    if (!a.out.empty()) {
      write_output(a.out, smv);
      j["out"] = a.out;
    } else {
      j["model"] = smv;
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  if (a.out.empty()) {
    std::cout << smv;
    std::cerr << summary(l.model.system, opts);
    return kExitOk;
  }
  write_output(a.out, smv);
  std::cout << "wrote " << a.out << "\n" << summary(l.model.system, opts);
  if (opts.any()) std::cout << l.model.report.text();
  return kExitOk;
}

int cmd_check(const Args& a) {
  const auto opts = vsv::parse_opt(a.opt);
  const auto specs = load_specs(a.spec_files);
  const Loaded l = load(a, specs, opts);
  if (report_diagnostics(l.model) != kExitOk) return kExitInput;
  const vsv::TransitionSystem& ts = l.model.system;
  if (ts.specs.empty()) {
    std::cerr << "error: no specification given (use --spec)\n";
    return kExitInput;
  }
  std::vector<vsv::SpecReport> reports;
  if (a.engine == "internal") {
    reports = vsv::check_internal(ts, vsv::CheckerOptions{a.state_cap});
  } else {
    const std::string stem = std::filesystem::path(a.input).stem().string();
    reports = vsv::check_nusmv(ts, vsv::default_nusmv_binary(), a.timeout, stem);
  }
  bool all = true;
  for (const auto& r : reports) all = all && r.holds;

  if (a.format == "json") {
    json j = {{"engine", a.engine}, {"opt", opts.str()}, {"all_hold", all}, {"specs", json::array()}};
    for (const auto& r : reports) {
      json s = {{"spec", r.spec}, {"holds", r.holds}};
      if (r.trace) s["trace"] = trace_json(*r.trace);
      if (r.flow) s["control_flow"] = flow_json(*r.flow);
      j["specs"].push_back(s);
    }
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << "-- specification " << r.spec << "  is " << (r.holds ? "true" : "false") << "\n";
      if (r.flow) {
        std::cout << "control flow:\n";
        for (const auto& e : r.flow->events)
          std::cout << "  step " << e.step << ": " << e.str() << " (" << (e.input ? "in" : "out") << ")\n";
        for (const auto& n : r.flow->annotations)
          std::cout << "  step " << n.step << ": " << n.variable << " = " << n.value
                    << (n.unmapped ? " (unmapped)" : "") << "\n";
      }
      if (r.trace) std::cout << "trace:\n" << vsv::render_trace(*r.trace, variable_order(ts));
    }
  }
  return all ? kExitOk : kExitFails;
}

std::string percent(double unopt, double opt) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "↓ %.1f %%", vsv::reduction_percent(unopt, opt));
  return buf;
}

int cmd_stats(const Args& a) {
  auto opts = vsv::parse_opt(a.opt);
  if (a.compare && !opts.any()) opts = vsv::PipelineOptions{true, true};
  const vsv::CheckerOptions copts{a.state_cap};
  std::vector<vsv::StatsRow> rows;
  std::vector<vsv::PipelineOptions> settings;
  if (a.compare) settings.push_back({});
  settings.push_back(opts);
  for (const auto& s : settings) {
    const Loaded l = load(a, {}, s);
    if (rows.empty() && report_diagnostics(l.model) != kExitOk) return kExitInput;
    rows.push_back(vsv::stats_row(l.model.system, l.from_system ? "none" : s.str(), copts));
  }

  if (a.format == "json") {
    json j = {{"rows", json::array()}};
    for (const auto& r : rows) {
      j["rows"].push_back({{"opt", r.setting},
                           {"variables", r.variables},
                           {"reachable_states", r.states.count},
                           {"reachable_log2", r.states.formatted},
                           {"seconds", r.seconds}});
    }
    if (rows.size() == 2) {
      j["reduction_percent"] = {
          {"variables", vsv::reduction_percent(rows[0].variables, rows[1].variables)},
          {"reachable_states", vsv::reduction_percent(rows[0].states.count, rows[1].states.count)},
          {"seconds", vsv::reduction_percent(rows[0].seconds, rows[1].seconds)}};
    }
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::printf("%-12s %8s %12s %14s %10s\n", "opt", "# vars", "states", "reachable", "time[s]");
  for (const auto& r : rows) {
    std::printf("%-12s %8zu %12zu %14s %10.4f\n", r.setting.c_str(), r.variables, r.states.count,
                r.states.formatted.c_str(), r.seconds);
  }
  if (rows.size() == 2) {
    std::printf("%-12s %8s %12s %14s %10s\n", "reduction",
                percent(static_cast<double>(rows[0].variables), static_cast<double>(rows[1].variables)).c_str(),
                percent(static_cast<double>(rows[0].states.count), static_cast<double>(rows[1].states.count)).c_str(),
                "", percent(rows[0].seconds, rows[1].seconds).c_str());
  }
  return kExitOk;
}

void common(CLI::App* c, Args& a, bool with_spec) {
  c->add_option("input", a.input, "Graph JSON, or transition-system JSON")->required();
  c->add_option("--semantics", a.semantics, "Node semantics JSON (default: built-in kinds)");
  if (with_spec) c->add_option("--spec", a.spec_files, "Spec file (JSON or one CTL formula per line)");
  c->add_option("--opt", a.opt, "Optimizations: none, or a comma list of nose,encode");
  c->add_option("--format", a.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  c->add_option("--state-cap", a.state_cap, "Maximum number of reachable states");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Model-check node-based visual game scripts"};
  app.require_subcommand(1);
  Args a;

  auto* tr = app.add_subcommand("translate", "Emit the SMV model of a graph");
  common(tr, a, true);
  tr->add_option("--out", a.out, "Write the model here instead of stdout");

  auto* ck = app.add_subcommand("check", "Check specifications");
  common(ck, a, true);
  ck->add_option("--engine", a.engine, "Checking engine")->check(CLI::IsMember({"internal", "nusmv"}));
  ck->add_option("--timeout", a.timeout, "NuSMV timeout in seconds (0 = none)");

  auto* st = app.add_subcommand("stats", "Variable and reachable-state counts");
  common(st, a, false);
  st->add_flag("--compare", a.compare, "Also run without optimizations and print reductions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (tr->parsed()) return cmd_translate(a);
    if (ck->parsed()) return cmd_check(a);
    return cmd_stats(a);
  } catch (const vsv::Error& e) {
    std::cerr << "error: " << vsv::to_string(e.kind()) << ": " << e.what() << "\n";
    if (e.kind() == vsv::ErrorKind::kStateCap || e.kind() == vsv::ErrorKind::kTimeout) return kExitLimit;
    return kExitInput;
  }
}
