// Copyright 2026 The pcakit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PCAKIT_SCREE_SVG_HPP_
#define PCAKIT_SCREE_SVG_HPP_

#include <string>

#include "pcakit/reduction.hpp"

namespace pcakit {

/// Standalone 800x600 SVG 1.1 scree plot: one marker per eigenvalue joined
/// by a line, a dashed horizontal reference at the Kaiser level, and axis
/// labels. Output is deterministic for identical input.
std::string render_scree_svg(const ScreeData& scree);

}  // namespace pcakit

#endif  // PCAKIT_SCREE_SVG_HPP_
