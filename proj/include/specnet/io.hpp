#pragma once

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "specnet/construct.hpp"
#include "specnet/consensus.hpp"
#include "specnet/digraph.hpp"
#include "specnet/errors.hpp"
#include "specnet/spectrum.hpp"
#include "specnet/verify.hpp"

namespace specnet {

inline std::string fmt_double(double v, int digits = 17) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline const char* fmt_bool(bool b) { return b ? "true" : "false"; }

// ---- edge list: "n m" then one "tail head [weight]" line per arc ----

inline void write_edge_list(std::ostream& os, const DiGraph& g) {
  os << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (size_t k = 0; k < g.arcs().size(); ++k) {
    os << g.arcs()[k].first << ' ' << g.arcs()[k].second;
    if (g.weighted()) os << ' ' << g.weights()[k];
    os << '\n';
  }
}

inline DiGraph read_edge_list(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) fail(errc::parse_error, "empty edge-list input");
  std::istringstream head(line);
  long long n = 0, m = 0;
  if (!(head >> n >> m) || n < 1 || m < 0) fail(errc::parse_error, "bad header line: " + line);
  std::string extra;
  if (head >> extra) fail(errc::parse_error, "trailing tokens on header line");
  std::vector<Arc> arcs;
  std::vector<long long> weights;
  bool weighted = false;
  for (long long k = 0; k < m; ++k) {
    if (!std::getline(is, line)) fail(errc::parse_error, "expected " + std::to_string(m) + " arcs");
    std::istringstream ls(line);
    long long t = 0, h = 0, w = 0;
    if (!(ls >> t >> h)) fail(errc::parse_error, "bad arc line: " + line);
    bool has_w = bool(ls >> w);
    if (ls >> extra) fail(errc::parse_error, "trailing tokens on arc line: " + line);
    if (k == 0) weighted = has_w;
    if (has_w != weighted) fail(errc::parse_error, "mixed weighted and unweighted arc lines");
    if (t < 1 || t > n || h < 1 || h > n) fail(errc::parse_error, "endpoint out of range: " + line);
    arcs.push_back({(int)t, (int)h});
    if (weighted) weights.push_back(w);
  }
  if (weighted) return DiGraph((int)n, std::move(arcs), std::move(weights));
  return DiGraph((int)n, std::move(arcs));
}

// ---- JSON: {"n": ..., "arcs": [[t,h],...], "weights": [...]} ----

inline nlohmann::json to_json(const DiGraph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.first, a.second});
  j["arcs"] = std::move(arcs);
  if (g.weighted()) j["weights"] = g.weights();
  return j;
}

inline DiGraph from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arcs"))
    fail(errc::parse_error, "JSON graph needs keys 'n' and 'arcs'");
  if (!j["n"].is_number_integer()) fail(errc::parse_error, "'n' must be an integer");
  int n = j["n"].get<int>();
  if (!j["arcs"].is_array()) fail(errc::parse_error, "'arcs' must be an array");
  std::vector<Arc> arcs;
  for (const auto& e : j["arcs"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail(errc::parse_error, "each arc must be [tail, head]");
    arcs.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  if (j.contains("weights")) {
    if (!j["weights"].is_array() || j["weights"].size() != arcs.size())
      fail(errc::parse_error, "'weights' must align with 'arcs'");
    std::vector<long long> w;
    for (const auto& e : j["weights"]) {
      if (!e.is_number_integer()) fail(errc::parse_error, "weights must be integers");
      w.push_back(e.get<long long>());
    }
    return DiGraph(n, std::move(arcs), std::move(w));
  }
  return DiGraph(n, std::move(arcs));
}

inline DiGraph read_json_graph(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

// ---- DOT: a bidirectional pair is drawn once with dir=both ----

inline void write_dot(std::ostream& os, const DiGraph& g) {
  os << "digraph G {\n";
  for (int v = 1; v <= g.vertex_count(); ++v) os << "  " << v << ";\n";
  for (size_t k = 0; k < g.arcs().size(); ++k) {
    const Arc& a = g.arcs()[k];
    bool paired = !g.weighted() && g.has_arc(a.second, a.first);
    if (paired && a.first > a.second) continue;  // drawn at the (i<j) arc
    os << "  " << a.first << " -> " << a.second;
    std::vector<std::string> attrs;
    if (paired) attrs.push_back("dir=both");
    if (g.weighted()) attrs.push_back("label=\"" + std::to_string(g.weights()[k]) + "\"");
    if (!attrs.empty()) {
      os << " [" << attrs[0];
      for (size_t i = 1; i < attrs.size(); ++i) os << ", " << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
}

// ---- construction trace ----

inline void write_trace(std::ostream& os, const ConstructionTrace& tr) {
  os << tr.n << ' ' << tr.final_m() << '\n';
  for (size_t k = 0; k < tr.tree_arcs.size(); ++k) {
    if (k) os << ' ';
    os << tr.tree_arcs[k].first << ':' << tr.tree_arcs[k].second;
  }
  os << '\n';
  for (const TraceStep& s : tr.steps) os << s.m << ' ' << s.v << ' ' << s.u << '\n';
}

inline ConstructionTrace read_trace(std::istream& is) {
  ConstructionTrace tr;
  std::string line;
  if (!std::getline(is, line)) fail(errc::parse_error, "empty trace input");
  std::istringstream head(line);
  long long m = 0;
  if (!(head >> tr.n >> m) || tr.n < 2) fail(errc::parse_error, "bad trace header: " + line);
  if (!std::getline(is, line)) fail(errc::parse_error, "missing seed-arc line");
  std::istringstream seeds(line);
  std::string tok;
  while (seeds >> tok) {
    size_t colon = tok.find(':');
    if (colon == std::string::npos) fail(errc::parse_error, "bad seed arc token: " + tok);
    try {
      tr.tree_arcs.push_back(
          {std::stoi(tok.substr(0, colon)), std::stoi(tok.substr(colon + 1))});
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad seed arc token: " + tok);
    }
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    TraceStep s{};
    if (!(ls >> s.m >> s.v >> s.u)) fail(errc::parse_error, "bad trace step: " + line);
    tr.steps.push_back(s);
  }
  if (tr.final_m() != m)
    fail(errc::parse_error, "trace header arc count does not match steps");
  return tr;
}

// ---- CSV emitters ----

inline void write_spectrum_csv(std::ostream& os, const Spectrum& s) {
  for (Complex v : s.sorted_values())
    os << fmt_double(v.real()) << ',' << fmt_double(v.imag()) << '\n';
}

inline void write_conjecture_csv(std::ostream& os, const ConjectureReport& r) {
  os << "n,m,graphs_checked,min_sigma_sq,sigma_min_sq,minimizer_count,all_minimizers_optimal\n";
  os << r.n << ',' << r.m << ',' << r.graphs_checked << ',' << fmt_double(r.min_sigma_sq) << ','
     << fmt_double(r.sigma_min_sq.to_double()) << ',' << r.minimizer_count << ','
     << fmt_bool(r.all_minimizers_optimal) << '\n';
}

inline void write_sweep_csv(std::ostream& os, const SweepReport& r) {
  os << "cases_run,failures\n" << r.cases_run << ',' << r.failures.size() << '\n';
}

inline void write_trajectory_csv(std::ostream& os, const ConsensusRun& run) {
  os << 't';
  for (size_t i = 1; i <= run.x0.size(); ++i) os << ",x" << i;
  os << ",disagreement\n";
  for (size_t s = 0; s < run.times.size(); ++s) {
    os << fmt_double(run.times[s], 12);
    for (double v : run.trajectory[s]) os << ',' << fmt_double(v);
    os << ',' << fmt_double(run.disagreement[s]) << '\n';
  }
}

}  // namespace specnet
