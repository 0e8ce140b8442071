#pragma once

#include <string>
#include <vector>

namespace homshift {

struct ReproduceResult {
  std::string example_id;
  bool pass = false;
  std::string log;  // per-check lines; diffs on mismatch
};

// example_id in {ex1.4, ex2.3, ex2.10a, ex2.10b}. data_dir holds the golden
// files and example inputs.
ReproduceResult reproduce_example(const std::string& example_id,
                                  const std::string& data_dir);

std::vector<std::string> reproduce_example_ids();

// Compile-time default for the repository's data directory.
std::string default_data_dir();

}  // namespace homshift
