#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace b1grid {

// Exit codes returned by run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // infeasible input or failed check
inline constexpr int kExitUsage = 2;   // bad arguments or unparsable file

// Entry point of the command-line tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct BenchSuite {
  std::string algo = "mis";  // mis | mds-vpg | mds-epg
  std::string family;        // vpg | vpg-any | double-crossing | vertical-crossing; empty picks the algo's default
  std::size_t n_min = 4;
  std::size_t n_max = 12;
  std::uint64_t seed = 1;    // first seed
  std::size_t seeds = 3;     // seeds per size
  bool timing = true;        // false leaves runtime_ms blank so output is byte-stable
};

// CSV with header instance_id,n,algo,size,opt,ratio,runtime_ms. opt is blank
// above the exact solver's cap. ratio is opt/size for mis and size/opt for
// the dominating set algorithms, so it is always >= 1. Rows are sorted by
// (instance_id, algo).
std::string bench(const BenchSuite& suite);

}  // namespace b1grid
