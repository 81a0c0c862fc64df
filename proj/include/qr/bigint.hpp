/*
   Copyright 2026 The qrlab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qr {

/// Arbitrary-precision signed integer used for all exact (characteristic-0)
/// arithmetic. Coefficient magnitudes in fraction-free elimination exceed
/// machine words well before the desk-scale sweeps finish.
using BigInt = boost::multiprecision::cpp_int;

/// Thrown when an enumeration would exceed its message budget.
class budget_error : public std::runtime_error {
  public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an internal consistency check fails. These conditions are
/// asserted constructively and must never fire on valid inputs.
class consistency_error : public std::logic_error {
  public:
    explicit consistency_error(const std::string& what) : std::logic_error(what) {}
};

inline bool is_prime(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline bool is_odd_prime(unsigned long long n) { return n != 2 && is_prime(n); }

}  // namespace qr
