// Copyright 2026 The tdl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "tdl/exactnum.hpp"

#include <ostream>

namespace tdl {

// Readable failure messages for exact values.
inline void PrintTo(const Cyclotomic& x, std::ostream* os) { *os << to_string(x); }
inline void PrintTo(const TorsionPhase& x, std::ostream* os) { *os << to_string(x.value()); }

}  // namespace tdl
