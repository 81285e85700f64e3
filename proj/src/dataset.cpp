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
#include "srde/dataset.hpp"

#include <cmath>
#include <stdexcept>

namespace srde {

void Dataset::add_point(std::span<const double> p) {
    if (p.size() != m) {
        throw std::invalid_argument("Dataset: point dimension " +
                                    std::to_string(p.size()) +
                                    " does not match m = " + std::to_string(m));
    }
    points.insert(points.end(), p.begin(), p.end());
}

void Dataset::add_point(std::span<const double> p, std::string label) {
    add_point(p);
    labels.push_back(std::move(label));
}

void Dataset::validate() const {
    if (m == 0) {
        throw std::invalid_argument("Dataset: dimension m must be positive");
    }
    if (points.size() % m != 0) {
        throw std::invalid_argument("Dataset: flat buffer size is not a multiple of m");
    }
    for (double v : points) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("Dataset: non-finite feature value");
        }
    }
    if (!labels.empty() && labels.size() != size()) {
        throw std::invalid_argument("Dataset: label count " +
                                    std::to_string(labels.size()) +
                                    " does not match point count " +
                                    std::to_string(size()));
    }
    if (!feature_names.empty() && feature_names.size() != m) {
        throw std::invalid_argument("Dataset: feature name count does not match m");
    }
}

}  // namespace srde
