#pragma once

#include <string>
#include <vector>

#include "dsgrp/common.hpp"
#include "dsgrp/parallel.hpp"

namespace dsgrp {

enum class ClaimStatus { pass, fail, flagged, skipped };
const char* to_string(ClaimStatus s);

// One verified statement: a stable id, a human-readable description, a
// stable anchor slug naming the underlying fact, the outcome, and the
// evidence (or failure) text. Details never contain timings or other
// run-dependent data, so suite output is byte-identical across runs.
struct ClaimResult {
  std::string id;
  std::string description;
  std::string anchor;
  ClaimStatus status = ClaimStatus::fail;
  std::string details;
};

struct SuiteResult {
  std::string suite;
  std::string tier;
  std::vector<ClaimResult> claims;
  bool ok() const;  // true iff no claim has status fail
};

struct SuiteOptions {
  std::string tier = "fast";   // "fast" | "full"
  bool with_u42 = false;       // run the optional order-25920 bound row
  std::string data_dir = "data";  // directory holding the .grp data files
};

// Runs the named suite ("paper" is the only registered suite) with a
// deterministic claim list and ordering. Each claim body runs under its own
// exception trap: a throw fails that claim only. Claims whose data files are
// absent are reported skipped; only fail affects ok(). Unknown suite or tier
// names throw std::invalid_argument.
SuiteResult run_suite(const std::string& suite, const SuiteOptions& opt = {},
                      const Limits& limits = {},
                      par::ExecMode mode = par::ExecMode::parallel);

// The fixed expression sweep (orders <= 2000) shared by the consistency
// claims and the acceptance checks.
const std::vector<std::string>& sweep_expressions();

}  // namespace dsgrp
