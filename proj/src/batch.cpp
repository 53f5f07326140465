#include "artin/batch.hpp"

#include <omp.h>

#include <exception>

#include "artin/largetype.hpp"

namespace artin {

namespace {

template <class Fn>
void for_each_index(std::size_t n, Exec exec, Fn&& fn) {
  const long long count = static_cast<long long>(n);
  if (exec == Exec::Serial) {
    for (long long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
    return;
  }
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
}

}  // namespace

int worker_count() { return omp_get_max_threads(); }

std::vector<SolveOutcome> batch_solve(const Presentation& p, const std::vector<Word>& words, Exec exec,
                                      DecomposeOptions options) {
  std::vector<SolveOutcome> out(words.size());
  const DecompositionTree tree = decompose(p, options);
  for_each_index(words.size(), exec, [&](std::size_t i) {
    try {
      check_alphabet(p, words[i]);
      IdentityResult r = reduce_identity(tree, words[i]);
      Solution s;
      s.answer = r.identity ? Answer::EqualOne : Answer::NotEqualOne;
      s.trace = std::move(r.trace);
      s.certificate = std::move(r.certificate);
      out[i].solution = std::move(s);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  });
  return out;
}

std::vector<VerifyReport> batch_verify(const Presentation& p, const std::vector<Trace>& traces, Exec exec) {
  std::vector<VerifyReport> out(traces.size());
  for_each_index(traces.size(), exec, [&](std::size_t i) { out[i] = verify_trace(p, traces[i]); });
  return out;
}

std::vector<Word> batch_geodesics(const Presentation& p, const std::vector<Word>& words, Exec exec) {
  std::vector<Word> out(words.size());
  for_each_index(words.size(), exec, [&](std::size_t i) { out[i] = reduce_to_geodesic(p, words[i]).first; });
  return out;
}

}  // namespace artin
