/*
 * Copyright 2026 The detident Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "detident/matrix.hpp"

namespace detident::fixtures {

/// [[1,2,3],[4,5,6],[7,8,10]], det -3.
inline Matrix worked() { return Matrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}; }

/// [[1,2,3],[4,0,6],[7,8,9]], zero interior entry, det 60.
inline Matrix zero_interior() { return Matrix{{1, 2, 3}, {4, 0, 6}, {7, 8, 9}}; }

}  // namespace detident::fixtures
