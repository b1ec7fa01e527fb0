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

// Builds a normal element of S_n with every depth <= k eigenvalue equal
// to zero, then lists the depth k+1 irreps that sit above it.

#include <cstdlib>
#include <iostream>

#include "cayspec/constructions.hpp"

int main(int argc, char** argv) {
  using namespace cayspec;
  const int n = argc > 1 ? std::atoi(argv[1]) : 100;
  const int k = argc > 2 ? std::atoi(argv[2]) : 2;
  try {
    const auto spec = build_annihilator(n, k, 2 * k);
    for (const auto& row : spec.rows) {
      std::cout << "weight " << to_string(row.probability) << "  class " << row.cls.to_string() << '\n';
    }
    const NormalElement sigma = spec.element();
    const auto zero = verify_annihilation(sigma, k);
    std::cout << zero.values.size() << " irreps of depth <= " << k << (zero.all_zero ? " vanish\n" : " do not all vanish\n");
    for (const auto& v : find_beating_irrep(sigma, k)) {
      std::cout << "  (" << v.irrep.to_string() << ")  eigenvalue " << to_string(v.eigenvalue) << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}
