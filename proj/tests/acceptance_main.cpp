// Copyright 2026 The ri1d Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the acceptance criteria and prints one line per criterion. Exits
// nonzero when any criterion fails.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "ri1d/acceptance.hpp"

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  const auto results = ri1d::run_acceptance(
      ri1d::RunOptions{}, only, [](const ri1d::CriterionResult& r) {
        std::printf("%s\n", ri1d::format_criterion(r).c_str());
        std::fflush(stdout);
      });
  int failed = 0;
  for (const auto& r : results) failed += r.pass() ? 0 : 1;
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}
