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

#ifndef QUDITEV_REGISTER_H
#define QUDITEV_REGISTER_H

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace quditev {

/// Raised when a digit string does not fit a register.
struct InvalidConfiguration : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when operand shapes disagree (site dimension, vector length, ...).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Operator family of a site. Determines the eigenvalue ladder of z.
enum class LadderFamily {
    ChargingBidirectional,   // {-(d-1)/2, ..., (d-1)/2}, d odd
    ChargingUnidirectional,  // {0, ..., d-1}
    TripBinary,              // {0, 1}
    TripInteger,             // {0, ..., n_ev}
};

enum class SiteRole { Charging, TripBinary, TripInteger };

struct Site {
    std::size_t dimension = 2;
    LadderFamily family = LadderFamily::TripBinary;
    SiteRole role = SiteRole::TripBinary;
    /// Charging: (ev, time). TripBinary: (ev, trip). TripInteger: (0, trip).
    std::size_t first = 0;
    std::size_t second = 0;
    std::vector<double> eigenvalues;

    static Site charging(std::size_t dimension, bool bidirectional, std::size_t ev, std::size_t t);
    static Site trip_binary(std::size_t ev, std::size_t trip);
    static Site trip_integer(std::size_t n_ev, std::size_t trip);
};

/// One digit per site, each in [0, dimension).
struct Configuration {
    std::vector<std::size_t> digits;

    bool operator==(const Configuration &other) const = default;
};

/// Eigenvalue ladder of the z operator for a family, indexed by digit.
std::vector<double> family_eigenvalues(LadderFamily family, std::size_t dimension);

/// Ordered list of sites spanning a mixed-radix product space. Site 0 is the
/// most significant digit of the flat index. Immutable after construction.
class Register {
   public:
    Register() = default;
    explicit Register(std::vector<Site> sites);

    std::size_t num_sites() const { return sites_.size(); }
    const Site &site(std::size_t k) const { return sites_[k]; }
    const std::vector<Site> &sites() const { return sites_; }
    std::size_t dimension(std::size_t k) const { return sites_[k].dimension; }
    /// Flat-index weight of site k (product of the dimensions after it).
    std::size_t stride(std::size_t k) const { return strides_[k]; }
    std::size_t total_size() const { return total_size_; }
    bool all_two_level() const;

    std::size_t encode(const Configuration &config) const;
    Configuration decode(std::size_t index) const;
    std::size_t digit(std::size_t index, std::size_t k) const {
        return (index / strides_[k]) % sites_[k].dimension;
    }
    /// Writes all digits of `index` into `out` (size num_sites()).
    void decode_into(std::size_t index, std::size_t *out) const;
    void validate(const Configuration &config) const;

    bool operator==(const Register &other) const;

   private:
    std::vector<Site> sites_;
    std::vector<std::size_t> strides_;
    std::size_t total_size_ = 1;
};

std::string describe(const Site &site);

}  // namespace quditev

#endif
