/*
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

#include <span>
#include <string>
#include <vector>

namespace srde {

/// A set of m-dimensional sample vectors, optionally class-labeled.
/// Points are stored row-major in one flat buffer.
struct Dataset {
    std::vector<double> points;             // n * m values
    std::size_t m = 0;
    std::vector<std::string> labels;        // empty or length n
    std::vector<std::string> feature_names; // empty or length m

    std::size_t size() const { return m == 0 ? 0 : points.size() / m; }
    bool has_labels() const { return !labels.empty(); }

    std::span<const double> point(std::size_t i) const {
        return {points.data() + i * m, m};
    }

    void add_point(std::span<const double> p);
    void add_point(std::span<const double> p, std::string label);

    /// Enforces the structural invariants: row dimension, finite values,
    /// label count. Throws std::invalid_argument on violation.
    void validate() const;
};

}  // namespace srde
