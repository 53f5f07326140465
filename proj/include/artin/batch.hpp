#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/amalgam.hpp"
#include "artin/trace.hpp"

namespace artin {

enum class Exec { Serial, Parallel };

// Errors thrown while processing one item are caught and reported per item.
struct SolveOutcome {
  std::optional<Solution> solution;
  std::string error;
};

std::vector<SolveOutcome> batch_solve(const Presentation& p, const std::vector<Word>& words, Exec exec,
                                      DecomposeOptions options = {});
std::vector<VerifyReport> batch_verify(const Presentation& p, const std::vector<Trace>& traces, Exec exec);

// Geodesic representatives of a large-type presentation.
std::vector<Word> batch_geodesics(const Presentation& p, const std::vector<Word>& words, Exec exec);

int worker_count();

}  // namespace artin
