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

#ifndef QUDITEV_SITE_OPERATORS_H
#define QUDITEV_SITE_OPERATORS_H

#include <complex>
#include <cstddef>
#include <stdexcept>

#include <Eigen/Dense>

#include "quditev/register.h"

namespace quditev {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

struct InvalidFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Angular-momentum operator set of a single site.
///
/// The raising/lowering coefficients are those of a spin j = (d-1)/2 ladder,
/// plus|k> = sqrt((d-1-k)(k+1)) |k+1> in digit terms. z carries the family's
/// eigenvalue ladder, so for uni-directional charging and trip families it is
/// a shifted copy of the symmetric spin z. x = (plus + minus)/2 and
/// y = (plus - minus)/(2i).
struct SiteOperators {
    ComplexMatrix z;
    ComplexMatrix plus;
    ComplexMatrix minus;
    ComplexMatrix x;
    ComplexMatrix y;
    ComplexMatrix z_squared;
};

SiteOperators build_ladder_operators(std::size_t dimension, LadderFamily family);

}  // namespace quditev

#endif
