#pragma once

#include <cstdint>
#include <ostream>
#include <string>

namespace bsr::cli {

// Everything a single invocation needs, already parsed from argv. Flag
// defaults mirror the library defaults so that "no flag" and "default value"
// produce identical cache keys.
struct CommandConfig {
  std::string command;      // nu | nu-set | bs-roots | char0-roots | compare | cartier | bracket
  std::string ideal_text;   // text grammar or JSON; "-" was resolved by main
  std::string j_text;       // nu only
  std::size_t vars = 0;     // 0 = infer dimension from the highest index used
  std::string q_text;       // nu, bracket (decimal, may exceed 64 bits)
  std::uint64_t p = 0;      // nu-set, bs-roots, cartier
  unsigned e = 1;           // nu-set, cartier
  unsigned levels = 0;      // bs-roots: 0 = auto depth
  std::string method = "grid";  // nu-set: grid | chain | both
  long long m_max = 60;     // char0-roots, compare
  unsigned grid_scale = 1;
  unsigned samples = 3;     // certification samples (bs-roots, compare)
  bool no_certify = false;  // bs-roots: skip certification
  bool check_grid = false;  // char0-roots: probe an enlarged grid
  std::string primes_csv;   // compare
  std::string format = "json";
  std::string cache_path;   // empty = caching disabled
  int jobs = 1;
};

// Dispatches to the library, renders to `out`, diagnostics to `err`.
// Exit codes: 0 ok, 2 bad input or precondition, 3 resource budget, 1 bug.
int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace bsr::cli
