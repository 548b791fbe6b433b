#pragma once

#include <iosfwd>
#include <string>

#include "hk/enumeration.hpp"
#include "hk/graph.hpp"
#include "hk/representation.hpp"
#include "hk/rewrite.hpp"

namespace hk {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitInput = 4;

/// One job's worth of configuration; the CLI front end fills this from
/// flags, tests construct it directly.
struct JobConfig {
  std::string graph_file;  // exactly one of graph_file / builder
  std::string builder;

  std::string weights;       // "a>b=2,b>c=-1"
  long weights_const = 0;    // used when weights_const_set
  bool weights_const_set = false;
  bool allow_zero = false;

  size_t cap = 200000;  // HK_CAP env overrides the default
  CompletionLimits limits;
  int oracle_max_len = 6;
  int oracle_slack = 2;

  int max_n = 5;
  bool all_orientations = false;
  std::string format = "text";  // text | machine
  int jobs = 1;

  std::string word;
  int n = 0;       // check-zn
  int kmax = 10;   // check-cycle
  std::string priority;  // comma-separated labels or indices

  DirectedGraph load() const;
  RewriteSystem system_for(const DirectedGraph& g) const;
  WeightFunction weights_for(const DirectedGraph& g, long fallback = 1) const;
  bool machine() const { return format == "machine"; }
};

/// Element cap default, honoring the HK_CAP environment variable.
size_t default_cap();

int cmd_enumerate(const JobConfig& cfg, std::ostream& out);
int cmd_verify(const JobConfig& cfg, const std::string& suite, std::ostream& out);
int cmd_rep(const JobConfig& cfg, const std::string& action, std::ostream& out);
int cmd_reduce(const JobConfig& cfg, std::ostream& out);

}  // namespace hk
