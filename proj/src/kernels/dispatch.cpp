// Copyright 2026 The wsat Authors
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


#include <cstdlib>
#include <string_view>

#include "wsat/kernels.hpp"

namespace wsat::kernels {
namespace {

const KernelTable& resolve() {
  const char* env = std::getenv("WSAT_KERNELS");
  std::string_view want = env ? env : "";
  if (want == "scalar") return scalar_table();
  if (want == "avx2" && avx2_table()) return *avx2_table();
  if (want == "neon" && neon_table()) return *neon_table();
  if (const KernelTable* t = avx2_table()) return *t;
  if (const KernelTable* t = neon_table()) return *t;
  return scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = resolve();
  return table;
}

}  // namespace wsat::kernels
