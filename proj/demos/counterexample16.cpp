// Copyright 2026 The cayspec Authors
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

// At n = 16 the class 5^3 1^1 is ruled by (11,5) and its transpose,
// neither of which lies in the eight shallow families.

#include <iostream>

#include "cayspec/normal_spectra.hpp"

int main() {
  using namespace cayspec;
  const CycleType mu = CycleType::parse("5^3 1^1");
  const auto rule = ruling_set(16, mu);
  const auto eight = eight_max(16, mu);
  std::cout << "class " << mu.to_string() << " in S_16\n";
  std::cout << "  ruling value " << to_string(rule.value) << " at";
  for (const auto& p : rule.irreps) std::cout << " (" << p.to_string() << ')';
  std::cout << "\n  best of the eight families " << to_string(eight.value) << " at";
  for (const auto& p : eight.argmax) std::cout << " (" << p.to_string() << ')';
  std::cout << '\n';

  const auto scan = check_eight_theorem(16, {});
  std::cout << "classes of S_16 where the eight families lose: " << scan.violation_count() << '\n';
  return 0;
}
