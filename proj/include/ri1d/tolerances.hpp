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

#pragma once

// Error constants for comparisons between exact values and their
// asymptotic forms. Only the orders are known analytically; the constants
// below are loose multiples of those orders.

#include <cstdint>

namespace ri1d::tol {

/// |h / first-mode - 1| <= kFirstModeScale / n^2.
inline constexpr double kFirstModeScale = 10.0;
/// |E[sin] / (pi/4) - 1| <= kPi4Scale / n^2.
inline constexpr double kPi4Scale = 10.0;
/// |no-hit / asymptotic - 1| <= kNoHitScale / n.
inline constexpr double kNoHitScale = 20.0;
/// exact mid-interval tail <= bound * (1 + kMidTailScale / n).
inline constexpr double kMidTailScale = 50.0;
/// relative tolerance kEndpointScale * (delta / n^2 + y^2 / delta).
inline constexpr double kEndpointScale = 3.0;

/// Binomial band width used by every Monte Carlo frequency check.
inline constexpr double kSigmaBand = 4.0;

/// Agreement between the recursion and spectral kernels.
inline constexpr double kKernelRelative = 1e-9;

}  // namespace ri1d::tol
