#pragma once

#include <stdexcept>
#include <string>

namespace specnet {

// Every failure the library reports deliberately carries one of these codes,
// so callers (and the CLI exit-code mapping) can dispatch without parsing
// message text.
enum class errc {
  self_arc,
  duplicate_arc,
  endpoint_out_of_range,
  zero_weight,
  weighted_unsupported,
  empty_keep_set,
  no_zero_eigenvalue,
  not_acyclic,
  convergence_failure,
  root_finding_failure,
  invalid_tree_arcs,
  rank_out_of_range,
  n_out_of_range,
  m_out_of_range,
  internal_u_not_found,
  degree_infeasible,
  instance_too_large,
  unstable_step_size,
  parse_error,
  precondition,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::self_arc: return "SelfArc";
    case errc::duplicate_arc: return "DuplicateArc";
    case errc::endpoint_out_of_range: return "EndpointOutOfRange";
    case errc::zero_weight: return "ZeroWeight";
    case errc::weighted_unsupported: return "WeightedUnsupported";
    case errc::empty_keep_set: return "EmptyKeepSet";
    case errc::no_zero_eigenvalue: return "NoZeroEigenvalue";
    case errc::not_acyclic: return "NotAcyclic";
    case errc::convergence_failure: return "ConvergenceFailure";
    case errc::root_finding_failure: return "RootFindingFailure";
    case errc::invalid_tree_arcs: return "InvalidTreeArcs";
    case errc::rank_out_of_range: return "RankOutOfRange";
    case errc::n_out_of_range: return "NOutOfRange";
    case errc::m_out_of_range: return "MOutOfRange";
    case errc::internal_u_not_found: return "InternalUNotFound";
    case errc::degree_infeasible: return "DegreeInfeasible";
    case errc::instance_too_large: return "InstanceTooLarge";
    case errc::unstable_step_size: return "UnstableStepSize";
    case errc::parse_error: return "ParseError";
    case errc::precondition: return "Precondition";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace specnet
