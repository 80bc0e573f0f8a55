// Rendering of results for the command line tool: human-readable text
// and canonical JSON (sorted keys, stable formatting, byte-for-byte
// reproducible for equal inputs).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homtoric/problem_spec.hpp"

namespace homtoric {

enum class OutputFormat { human, json };

std::string emit_report(const ProblemSpec& spec, const Evaluation& ev, OutputFormat format);
std::string emit_flag_info(const FlagManifold& fm, OutputFormat format);
std::string emit_polytope(const CanonicalPolytope& poly, OutputFormat format);

struct SweepRow {
  int n = 0;
  bool verdict = false;
  bool boundary = false;
  std::optional<Rational> min_margin;
};

/// Evaluate a preset family over an inclusive parameter range.
std::vector<SweepRow> sweep(const std::string& preset, int lo, int hi);

std::string emit_sweep(const std::string& preset, const std::vector<SweepRow>& rows,
                       OutputFormat format);

}  // namespace homtoric
