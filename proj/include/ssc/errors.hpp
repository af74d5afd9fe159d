/*
   Copyright 2026 The ssc Authors

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

#ifndef SSC_ERRORS_HPP
#define SSC_ERRORS_HPP

#include <stdexcept>

namespace ssc {

/// A violated precondition: malformed input, mismatched fields or sizes.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A brute-force enumeration or scan would exceed its configured bound.
struct BoundExceeded : std::length_error {
    using std::length_error::length_error;
};

/// Reconstruction attempted from a coalition that cannot reach the secret.
struct UnqualifiedSet : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Overdetermined shares that no dealer vector could have produced.
struct InconsistentShares : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace ssc

#endif  // SSC_ERRORS_HPP
