// End-to-end acceptance suite: runs every verification criterion at its
// stated tolerance (all comparisons are exact) and prints one line per
// criterion.  Exit code 0 only if everything passes.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "drinfeld/verify.hpp"

int main(int argc, char** argv) {
  drinfeld::verify::Options opts;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      char* tok = std::strtok(argv[++i], ",");
      while (tok) {
        opts.only.emplace_back(tok);
        tok = std::strtok(nullptr, ",");
      }
    } else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc) {
      opts.threads = static_cast<unsigned>(std::atoi(argv[++i]));
    } else {
      std::fprintf(stderr, "usage: %s [--only A1,A2,...] [--threads N]\n", argv[0]);
      return 2;
    }
  }

  const auto results = drinfeld::verify::run_paper_checks(opts);
  unsigned passed = 0;
  for (const auto& r : results) {
    std::printf("[%s] %s — %s (%.2fs, budget %.0fs)\n",
                r.passed ? "PASS" : "FAIL", r.id.c_str(), r.title.c_str(),
                r.seconds, r.budget_seconds);
    if (!r.detail.empty()) std::printf("       %s\n", r.detail.c_str());
    if (r.passed) ++passed;
  }
  std::printf("%u/%zu criteria passed\n", passed, results.size());
  return drinfeld::verify::all_passed(results) ? 0 : 1;
}
