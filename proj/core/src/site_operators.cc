// Copyright 2026 The quditev Authors
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

#include "quditev/site_operators.h"

#include <cmath>

namespace quditev {

SiteOperators build_ladder_operators(std::size_t dimension, LadderFamily family) {
    if (dimension < 2) {
        throw InvalidFamily("ladder dimension must be >= 2");
    }
    if (family == LadderFamily::ChargingBidirectional && dimension % 2 == 0) {
        throw InvalidFamily("bi-directional charging ladder needs an odd dimension, got " +
                            std::to_string(dimension));
    }
    if (family == LadderFamily::TripBinary && dimension != 2) {
        throw InvalidFamily("binary trip ladder is two-level");
    }

    const auto n = static_cast<Eigen::Index>(dimension);
    const std::vector<double> eig = family_eigenvalues(family, dimension);

    SiteOperators ops;
    ops.z = ComplexMatrix::Zero(n, n);
    ops.z_squared = ComplexMatrix::Zero(n, n);
    ops.plus = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        ops.z(k, k) = eig[static_cast<std::size_t>(k)];
        ops.z_squared(k, k) = eig[static_cast<std::size_t>(k)] * eig[static_cast<std::size_t>(k)];
    }
    // Symmetric ladder with m = k - (d-1)/2: sqrt((j-m)(j+m+1)) = sqrt((d-1-k)(k+1)).
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        ops.plus(k + 1, k) = std::sqrt(static_cast<double>((n - 1 - k) * (k + 1)));
    }
    ops.minus = ops.plus.adjoint();
    ops.x = 0.5 * (ops.plus + ops.minus);
    ops.y = (ops.plus - ops.minus) / Complex(0.0, 2.0);
    return ops;
}

}  // namespace quditev
