// Copyright 2026 The exq Authors
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

#include <atomic>
#include <cstdlib>
#include <string>

#include "exq/error.hpp"
#include "exq/kernels.hpp"

namespace exq::kernels {
namespace {

bool cpu_has_avx2() {
#if defined(EXQ_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

bool force_scalar_from_env() {
  const char* v = std::getenv("EXQ_FORCE_SCALAR");
  return v != nullptr && *v != '\0' && std::string(v) != "0";
}

const KernelTable* pick_default() {
  if (!force_scalar_from_env() && isa_available(Isa::Avx2)) return avx2_table();
  return &scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> ptr{pick_default()};
  return ptr;
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
      return avx2_table() != nullptr && cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!isa_available(isa))
    throw Error(ErrorKind::InvalidParameter,
                "kernel ISA not available: " + std::string(to_string(isa)));
  return isa == Isa::Avx2 ? *avx2_table() : scalar_table();
}

const KernelTable& active() {
  return *current().load(std::memory_order_acquire);
}

void select(Isa isa) { current().store(&table(isa), std::memory_order_release); }

}  // namespace exq::kernels
