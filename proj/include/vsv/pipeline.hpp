// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// Graph -> optimized graph -> transition system -> verdicts.

#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vsv/checker.hpp"
#include "vsv/error.hpp"
#include "vsv/graph.hpp"
#include "vsv/nusmv.hpp"
#include "vsv/optimizer.hpp"
#include "vsv/semantics.hpp"
#include "vsv/smv.hpp"
#include "vsv/translator.hpp"
#include "vsv/validate.hpp"

namespace vsv {

struct PipelineOptions {
  bool nose = false;
  bool encode = false;

  bool any() const { return nose || encode; }
  std::string str() const {
    if (!any()) return "none";
    if (nose && encode) return "nose,encode";
    return nose ? "nose" : "encode";
  }
};

// "none", or a comma-separated subset of {nose, encode}.
inline PipelineOptions parse_opt(const std::string& text) {
  PipelineOptions o;
  if (text == "none" || text.empty()) return o;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "nose") {
      o.nose = true;
    } else if (item == "encode") {
      o.encode = true;
    } else {
      throw Error(ErrorKind::kSchema, "unknown optimization '" + item + "' (expected nose, encode or none)");
    }
  }
  return o;
}

struct Model {
  NodeGraph graph;  // after the graph-level passes
  TransitionSystem system;
  PassReport report;
  std::vector<Diagnostic> diagnostics;  // validation errors and warnings
  std::vector<std::string> warnings;    // translation warnings

  bool ok() const { return !has_errors(diagnostics); }
};

// Validation errors are returned in `diagnostics`, not thrown.
inline Model build_model(const NodeGraph& graph, const SemanticsRegistry& reg, const std::vector<SpecRequest>& specs,
                         const PipelineOptions& opts = {}) {
  Model m;
  m.diagnostics = validate_graph(graph, reg);
  if (has_errors(m.diagnostics)) return m;
  for (auto& w : unconnected_ports(graph, reg)) m.diagnostics.push_back(std::move(w));
  m.graph = opts.nose ? remove_nose_nodes(graph, reg, &m.report) : graph;
  Translation t = translate_with_report(m.graph, reg, specs, TranslateOptions{opts.encode});
  m.system = std::move(t.system);
  m.report.encoded_nodes = std::move(t.report.encoded_nodes);
  m.report.not_applicable = std::move(t.report.not_applicable);
  m.warnings = std::move(t.warnings);
  return m;
}

struct SpecReport {
  std::string spec;
  bool holds = false;
  std::optional<Trace> trace;
  std::optional<ControlFlowPath> flow;
};

inline std::vector<SpecReport> check_internal(const TransitionSystem& ts, const CheckerOptions& opts = {}) {
  std::vector<SpecReport> out;
  for (auto& v : check_all(ts, opts)) {
    SpecReport r{to_string(v.spec), v.holds, std::move(v.counterexample), std::nullopt};
    if (r.trace) r.flow = map_trace(*r.trace, ts);
    out.push_back(std::move(r));
  }
  return out;
}

inline std::vector<SpecReport> check_nusmv(const TransitionSystem& ts, const std::string& binary,
                                           double timeout_seconds, const std::string& stem = "model") {
  const NusmvRun run = run_nusmv(emit_smv(ts), binary, timeout_seconds, stem);
  auto outcomes = parse_traces(run.output);
  if (outcomes.size() != ts.specs.size()) {
    throw Error(ErrorKind::kEngineFailure, "NuSMV reported " + std::to_string(outcomes.size()) + " verdict(s) for " +
                                               std::to_string(ts.specs.size()) + " spec(s)");
  }
  std::vector<SpecReport> out;
  for (auto& o : outcomes) {
    SpecReport r{o.spec, o.holds, std::nullopt, std::nullopt};
    if (o.trace) {
      r.trace = complete_with_initial(*o.trace, ts);
      r.flow = map_trace(*r.trace, ts);
    }
    out.push_back(std::move(r));
  }
  return out;
}

struct StatsRow {
  std::string setting;
  std::size_t variables = 0;
  ReachableStats states;
  double seconds = 0;
};

inline StatsRow stats_row(const TransitionSystem& ts, const std::string& setting, const CheckerOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  StatsRow r;
  r.setting = setting;
  r.variables = ts.variables.size();
  r.states = reachable_stats(ts, opts);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

// (1 - optimized / unoptimized) * 100.
inline double reduction_percent(double unoptimized, double optimized) {
  if (unoptimized <= 0) return 0;
  return (1.0 - optimized / unoptimized) * 100.0;
}

}  // namespace vsv
