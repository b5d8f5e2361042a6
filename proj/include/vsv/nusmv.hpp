// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// NuSMV bridge: run the external checker in batch mode, parse its verdicts
// and counterexamples, and map traces back to node-level control flow.

#pragma once

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vsv/error.hpp"
#include "vsv/ir.hpp"
#include "vsv/trace.hpp"

namespace vsv {

inline constexpr const char* kNusmvEnv = "VSVERIFY_NUSMV";

struct NusmvRun {
  std::string output;  // stdout and stderr, interleaved
  int exit_status = 0;
};

namespace nusmv_detail {

inline bool executable(const std::string& p) {
  struct stat st {};
  return ::stat(p.c_str(), &st) == 0 && S_ISREG(st.st_mode) && ::access(p.c_str(), X_OK) == 0;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline bool starts_with(const std::string& s, const char* p) { return s.rfind(p, 0) == 0; }

}  // namespace nusmv_detail

// Resolves a binary name: paths are taken as is, bare names are searched on
// PATH. Returns nullopt when nothing executable is found.
inline std::optional<std::string> find_nusmv(const std::string& name) {
  if (name.find('/') != std::string::npos) {
    if (nusmv_detail::executable(name)) return name;
    return std::nullopt;
  }
  const char* path = std::getenv("PATH");
  if (path == nullptr) return std::nullopt;
  std::stringstream ss(path);
  std::string dir;
  while (std::getline(ss, dir, ':')) {
    if (dir.empty()) continue;
    const std::string cand = dir + "/" + name;
    if (nusmv_detail::executable(cand)) return cand;
  }
  return std::nullopt;
}

// $VSVERIFY_NUSMV when set, else NuSMV on PATH.
inline std::string default_nusmv_binary() {
  const char* env = std::getenv(kNusmvEnv);
  return env != nullptr && *env != '\0' ? env : "NuSMV";
}

// Writes the model to a private temp directory as `<stem>.smv` and runs
// `<binary> <file>`. A timeout of 0 disables the limit.
inline NusmvRun run_nusmv(const std::string& model_text, const std::string& binary, double timeout_seconds,
                          const std::string& stem = "model") {
  const auto resolved = find_nusmv(binary);
  if (!resolved) throw Error(ErrorKind::kBinaryMissing, "NuSMV binary not found: " + binary);

  std::string tmpl = (std::filesystem::temp_directory_path() / "vsverify-XXXXXX").string();
  if (::mkdtemp(tmpl.data()) == nullptr) throw Error(ErrorKind::kEngineFailure, "cannot create temp directory");
  const std::filesystem::path dir = tmpl;
  const std::filesystem::path file = dir / (stem + ".smv");
  {
    std::ofstream out(file);
    out << model_text;
    if (!out) throw Error(ErrorKind::kEngineFailure, "cannot write " + file.string());
  }
  auto cleanup = [&] {
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
  };

  int pipefd[2];
  if (::pipe(pipefd) != 0) {
    cleanup();
    throw Error(ErrorKind::kEngineFailure, "pipe failed");
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    cleanup();
    throw Error(ErrorKind::kEngineFailure, "fork failed");
  }
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(pipefd[1], STDOUT_FILENO);
    ::dup2(pipefd[1], STDERR_FILENO);
    ::close(pipefd[0]);
    ::close(pipefd[1]);
    const std::string f = file.string();
    ::execl(resolved->c_str(), resolved->c_str(), f.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(pipefd[1]);

  NusmvRun run;
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::duration<double>(timeout_seconds);
  bool timed_out = false;
  char buf[4096];
  while (true) {
    int wait_ms = -1;
    if (timeout_seconds > 0) {
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
      if (left.count() <= 0) {
        timed_out = true;
        break;
      }
      wait_ms = static_cast<int>(left.count());
    }
    pollfd p{pipefd[0], POLLIN, 0};
    const int r = ::poll(&p, 1, wait_ms);
    if (r < 0 && errno == EINTR) continue;
    if (r == 0) {
      timed_out = true;
      break;
    }
    const ssize_t n = ::read(pipefd[0], buf, sizeof buf);
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    run.output.append(buf, static_cast<std::size_t>(n));
  }
  ::close(pipefd[0]);
  if (timed_out) ::kill(-pid, SIGKILL);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  cleanup();
  if (timed_out) {
    throw Error(ErrorKind::kTimeout, "NuSMV did not finish within " + std::to_string(timeout_seconds) + " s");
  }
  run.exit_status = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
  if (run.exit_status != 0) {
    throw Error(ErrorKind::kEngineFailure,
                "NuSMV exited with status " + std::to_string(run.exit_status) + ":\n" + run.output);
  }
  return run;
}

struct SpecOutcome {
  std::string spec;
  bool holds = false;
  std::optional<Trace> trace;
};

namespace nusmv_detail {

// With `bare`, the text is a state listing without a specification header.
inline std::vector<SpecOutcome> parse_outcomes(const std::string& raw, bool bare) {
  std::vector<SpecOutcome> out;
  std::istringstream in(raw);
  std::string line;
  std::size_t lineno = 0;

  if (bare) out.push_back({{}, false, std::nullopt});
  SpecOutcome* cur = bare ? &out.back() : nullptr;
  std::vector<Assignment> states;
  std::optional<std::size_t> loop_start;
  bool pending_loop = false;
  bool in_input = false;

  auto finish = [&] {
    if (cur == nullptr || cur->holds) return;
    if (states.empty()) return;
    Trace t;
    if (loop_start) {
      // The closing state repeats the loop start.
      if (states.size() > *loop_start + 1 && states.back() == states[*loop_start]) states.pop_back();
      t.prefix.assign(states.begin(), states.begin() + static_cast<std::ptrdiff_t>(*loop_start));
      t.loop.assign(states.begin() + static_cast<std::ptrdiff_t>(*loop_start), states.end());
    } else {
      t.prefix = states;
    }
    cur->trace = std::move(t);
  };
  auto err = [&](const std::string& what) {
    return Error(ErrorKind::kTraceParse, "line " + std::to_string(lineno) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (starts_with(t, "-- specification ")) {
      finish();
      const bool is_true = t.size() >= 8 && t.compare(t.size() - 8, 8, " is true") == 0;
      const bool is_false = t.size() >= 9 && t.compare(t.size() - 9, 9, " is false") == 0;
      if (!is_true && !is_false) throw err("specification line without verdict");
      std::string spec = t.substr(17, t.size() - 17 - (is_true ? 8 : 9));
      out.push_back({trim(spec), is_true, std::nullopt});
      cur = &out.back();
      states.clear();
      loop_start.reset();
      pending_loop = false;
      in_input = false;
      continue;
    }
    if (cur == nullptr || cur->holds) continue;
    if (t.empty() || t == "...") continue;
    if (t == "-- Loop starts here") {
      pending_loop = true;
      continue;
    }
    if (starts_with(t, "-> State:")) {
      if (t.size() < 12 || t.compare(t.size() - 2, 2, "<-") != 0) throw err("malformed state header");
      states.push_back(states.empty() ? Assignment{} : states.back());
      if (pending_loop) loop_start = states.size() - 1;
      pending_loop = false;
      in_input = false;
      continue;
    }
    if (starts_with(t, "-> Input:")) {
      in_input = true;
      continue;
    }
    if (starts_with(t, "-- as demonstrated") || t == "execution sequence" || starts_with(t, "Trace Description:") ||
        starts_with(t, "Trace Type:") || starts_with(t, "***")) {
      continue;
    }
    const auto eq = t.find(" = ");
    if (eq == std::string::npos) {
      if (states.empty()) continue;
      throw err("unexpected text in trace: " + t);
    }
    if (in_input) continue;
    if (states.empty()) throw err("assignment before the first state");
    const std::string name = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 3));
    if (name.empty() || value.empty()) throw err("malformed assignment: " + t);
    states.back()[name] = value;
  }
  finish();
  return out;
}

}  // namespace nusmv_detail

// Parses `-- specification ... is true|false` lines and the state blocks of
// each counterexample. NuSMV prints only changed variables per state; the
// rest are carried forward from the previous state.
inline std::vector<SpecOutcome> parse_traces(const std::string& raw) {
  return nusmv_detail::parse_outcomes(raw, false);
}

// A single state listing, as printed under a false specification.
inline Trace parse_trace(const std::string& listing) {
  auto out = nusmv_detail::parse_outcomes(listing, true);
  if (out.size() != 1 || !out.front().trace) throw Error(ErrorKind::kTraceParse, "no states in trace listing");
  return *out.front().trace;
}

// Fills variables missing from the first state with their (unique) initial
// value and carries them forward.
inline Trace complete_with_initial(const Trace& t, const TransitionSystem& ts) {
  Trace r = t;
  std::vector<Assignment*> all;
  for (auto& s : r.prefix) all.push_back(&s);
  for (auto& s : r.loop) all.push_back(&s);
  if (all.empty()) return r;
  for (const auto& v : ts.variables) {
    if (all.front()->count(v.name) || v.init.size() != 1) continue;
    for (auto* s : all) {
      if (s->count(v.name)) break;
      (*s)[v.name] = v.init.front();
    }
  }
  return r;
}

struct FlowEvent {
  std::string node;
  std::string port;  // display label
  bool input = false;
  std::size_t step = 0;

  std::string str() const { return node + ":" + port; }
  friend bool operator==(const FlowEvent&, const FlowEvent&) = default;
};

struct FlowAnnotation {
  std::size_t step = 0;
  std::string variable;
  std::string value;
  bool unmapped = false;

  friend bool operator==(const FlowAnnotation&, const FlowAnnotation&) = default;
};

struct ControlFlowPath {
  std::vector<FlowEvent> events;
  std::vector<FlowAnnotation> annotations;

  std::string render(const char* sep = " -> ") const {
    std::string s;
    for (std::size_t i = 0; i < events.size(); ++i) {
      if (i) s += sep;
      s += events[i].str();
    }
    return s;
  }
};

// One event per input/output variable that takes a non-none value it did not
// have in the previous step. Script and state changes become annotations.
inline ControlFlowPath map_trace(const Trace& t, const TransitionSystem& ts) {
  ControlFlowPath path;
  const auto states = t.states();
  std::vector<std::string> order;
  for (const auto& v : ts.variables) order.push_back(v.name);
  for (const auto& s : states)
    for (const auto& [name, value] : s)
      if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);

  for (std::size_t i = 0; i < states.size(); ++i) {
    for (const auto& name : order) {
      auto it = states[i].find(name);
      if (it == states[i].end()) continue;
      const std::string& value = it->second;
      if (i > 0) {
        auto prev = states[i - 1].find(name);
        if (prev != states[i - 1].end() && prev->second == value) continue;
      }
      auto prov = ts.provenance.find(name);
      if (prov == ts.provenance.end()) {
        path.annotations.push_back({i, name, value, true});
        continue;
      }
      const Provenance& p = prov->second;
      const bool signal = p.role == VarRole::kInput || p.role == VarRole::kOutput;
      if (!signal) {
        path.annotations.push_back({i, name, value, false});
        continue;
      }
      if (value == kNone) continue;
      std::string label = value;
      if (auto l = p.value_labels.find(value); l != p.value_labels.end()) label = l->second;
      if (!p.port.empty()) label = p.port;
      path.events.push_back({p.node_id, label, p.role == VarRole::kInput, i});
    }
  }
  return path;
}

}  // namespace vsv
