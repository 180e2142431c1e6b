// Copyright 2026 The pmgauss Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/multiprecision/float128.hpp>

namespace pmgauss {

/// Quad precision scalar for routes that form determinants of sheared
/// covariance matrices or take finite differences of them. The scaled
/// covariance reaches condition numbers near 1e15, which leaves nothing
/// of a double-precision determinant.
using Wide = boost::multiprecision::float128;

inline double to_double(const Wide& w) { return w.convert_to<double>(); }

} // namespace pmgauss
