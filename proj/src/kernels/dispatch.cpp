/* Copyright 2026 The Parrondo Walk Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "parrondo/kernels.hpp"

namespace parrondo::kernels {

#ifndef PARRONDO_HAVE_AVX2
const KernelTable* avx2_table() { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() {
#if defined(PARRONDO_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect() {
  const char* forced = std::getenv("PARRONDO_SIMD");
  if (forced != nullptr) {
    const std::string choice(forced);
    if (choice == "scalar") return Isa::kScalar;
    if (choice == "avx2" && isa_available(Isa::kAvx2)) return Isa::kAvx2;
  }
  return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{detect()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
      return avx2_table() != nullptr && cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("kernel ISA not available: " +
                                std::string(isa_name(isa)));
  }
  return isa == Isa::kAvx2 ? *avx2_table() : scalar_table();
}

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

const KernelTable& active() {
  // Availability was checked when the slot was written.
  return active_isa() == Isa::kAvx2 ? *avx2_table() : scalar_table();
}

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("kernel ISA not available: " +
                                std::string(isa_name(isa)));
  }
  active_slot().store(isa, std::memory_order_relaxed);
}

}  // namespace parrondo::kernels
