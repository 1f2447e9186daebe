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

#include "quditev/register.h"

#include <sstream>

namespace quditev {

std::vector<double> family_eigenvalues(LadderFamily family, std::size_t dimension) {
    std::vector<double> values(dimension);
    const double offset =
        family == LadderFamily::ChargingBidirectional ? (static_cast<double>(dimension) - 1.0) / 2.0 : 0.0;
    for (std::size_t k = 0; k < dimension; ++k) {
        values[k] = static_cast<double>(k) - offset;
    }
    return values;
}

Site Site::charging(std::size_t dimension, bool bidirectional, std::size_t ev, std::size_t t) {
    Site s;
    s.dimension = dimension;
    s.family = bidirectional ? LadderFamily::ChargingBidirectional : LadderFamily::ChargingUnidirectional;
    s.role = SiteRole::Charging;
    s.first = ev;
    s.second = t;
    s.eigenvalues = family_eigenvalues(s.family, dimension);
    return s;
}

Site Site::trip_binary(std::size_t ev, std::size_t trip) {
    Site s;
    s.dimension = 2;
    s.family = LadderFamily::TripBinary;
    s.role = SiteRole::TripBinary;
    s.first = ev;
    s.second = trip;
    s.eigenvalues = family_eigenvalues(s.family, 2);
    return s;
}

Site Site::trip_integer(std::size_t n_ev, std::size_t trip) {
    Site s;
    s.dimension = n_ev + 1;
    s.family = LadderFamily::TripInteger;
    s.role = SiteRole::TripInteger;
    s.first = 0;
    s.second = trip;
    s.eigenvalues = family_eigenvalues(s.family, n_ev + 1);
    return s;
}

Register::Register(std::vector<Site> sites) : sites_(std::move(sites)), strides_(sites_.size()) {
    for (const Site &s : sites_) {
        if (s.dimension < 2) {
            throw DimensionError("site dimension must be >= 2: " + describe(s));
        }
        if (s.eigenvalues.size() != s.dimension) {
            throw DimensionError("eigenvalue count does not match dimension: " + describe(s));
        }
        if (s.family == LadderFamily::TripBinary && s.dimension != 2) {
            throw DimensionError("binary trip site must be two-level: " + describe(s));
        }
    }
    std::size_t stride = 1;
    for (std::size_t k = sites_.size(); k-- > 0;) {
        strides_[k] = stride;
        if (stride > SIZE_MAX / sites_[k].dimension) {
            throw DimensionError("register size overflows size_t");
        }
        stride *= sites_[k].dimension;
    }
    total_size_ = stride;
}

bool Register::all_two_level() const {
    for (const Site &s : sites_) {
        if (s.dimension != 2) {
            return false;
        }
    }
    return true;
}

void Register::validate(const Configuration &config) const {
    if (config.digits.size() != sites_.size()) {
        throw InvalidConfiguration("configuration has " + std::to_string(config.digits.size()) +
                                   " digits, register has " + std::to_string(sites_.size()) + " sites");
    }
    for (std::size_t k = 0; k < sites_.size(); ++k) {
        if (config.digits[k] >= sites_[k].dimension) {
            throw InvalidConfiguration("digit " + std::to_string(config.digits[k]) + " out of range at site " +
                                       std::to_string(k) + " (" + describe(sites_[k]) + ")");
        }
    }
}

std::size_t Register::encode(const Configuration &config) const {
    validate(config);
    std::size_t index = 0;
    for (std::size_t k = 0; k < sites_.size(); ++k) {
        index += config.digits[k] * strides_[k];
    }
    return index;
}

Configuration Register::decode(std::size_t index) const {
    if (index >= total_size_) {
        throw InvalidConfiguration("index " + std::to_string(index) + " out of range [0, " +
                                   std::to_string(total_size_) + ")");
    }
    Configuration config;
    config.digits.resize(sites_.size());
    decode_into(index, config.digits.data());
    return config;
}

void Register::decode_into(std::size_t index, std::size_t *out) const {
    for (std::size_t k = sites_.size(); k-- > 0;) {
        const std::size_t d = sites_[k].dimension;
        out[k] = index % d;
        index /= d;
    }
}

bool Register::operator==(const Register &other) const {
    if (sites_.size() != other.sites_.size()) {
        return false;
    }
    for (std::size_t k = 0; k < sites_.size(); ++k) {
        const Site &a = sites_[k];
        const Site &b = other.sites_[k];
        if (a.dimension != b.dimension || a.family != b.family || a.role != b.role || a.first != b.first ||
            a.second != b.second) {
            return false;
        }
    }
    return true;
}

std::string describe(const Site &site) {
    std::ostringstream out;
    switch (site.role) {
        case SiteRole::Charging:
            out << "charging(ev=" << site.first << ", t=" << site.second << ")";
            break;
        case SiteRole::TripBinary:
            out << "trip_binary(ev=" << site.first << ", trip=" << site.second << ")";
            break;
        case SiteRole::TripInteger:
            out << "trip_integer(trip=" << site.second << ")";
            break;
    }
    out << " d=" << site.dimension;
    return out.str();
}

}  // namespace quditev
