/* Copyright 2026 The dedkit Authors. All Rights Reserved.

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

#ifndef DEDKIT_SRC_PRIMES_HPP_
#define DEDKIT_SRC_PRIMES_HPP_

#include <vector>

namespace dedkit {

// Yields 2, 3, 5, 7, ... by trial division against the primes found so far.
// Sequence positions in a Godel code rarely run past a few hundred, so this
// is plenty.
class PrimeWalker {
 public:
  unsigned long next() {
    unsigned long c = found_.empty() ? 2 : found_.back() + (found_.back() == 2 ? 1 : 2);
    for (;; c += 2) {
      bool prime = true;
      for (unsigned long p : found_) {
        if (p * p > c) break;
        if (c % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) break;
    }
    found_.push_back(c);
    return c;
  }

 private:
  std::vector<unsigned long> found_;
};

}  // namespace dedkit

#endif  // DEDKIT_SRC_PRIMES_HPP_
