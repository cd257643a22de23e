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

#ifndef PARRONDO_ERRORS_HPP_
#define PARRONDO_ERRORS_HPP_

#include <stdexcept>

namespace parrondo {

// A shift would move amplitude off the pre-allocated capital lattice.
class LatticeExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The capital mod 3 chain has no unique stationary drift.
class DegenerateChain : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A win probability of 0 or 1 makes the ratchet potential infinite.
class SingularPotential : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Position requested outside the alias-free range of a momentum grid.
class ReconstructionRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace parrondo

#endif  // PARRONDO_ERRORS_HPP_
