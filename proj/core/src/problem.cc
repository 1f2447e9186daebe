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

#include "quditev/problem.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace quditev {

std::string_view to_string(ChargingMode mode) {
    return mode == ChargingMode::Bidirectional ? "bidirectional" : "unidirectional";
}

std::string_view to_string(EncodingKind enc) { return enc == EncodingKind::BinaryTrips ? "binary" : "integer"; }

ChargingMode parse_charging_mode(std::string_view text) {
    if (text == "bidirectional" || text == "bi") {
        return ChargingMode::Bidirectional;
    }
    if (text == "unidirectional" || text == "uni") {
        return ChargingMode::Unidirectional;
    }
    throw std::invalid_argument("unknown charging mode '" + std::string(text) + "'");
}

EncodingKind parse_encoding(std::string_view text) {
    if (text == "binary") {
        return EncodingKind::BinaryTrips;
    }
    if (text == "integer") {
        return EncodingKind::IntegerTrips;
    }
    throw std::invalid_argument("unknown encoding '" + std::string(text) + "'");
}

bool Trip::overlaps(const Trip &other) const { return std::max(start, other.start) <= std::min(end, other.end); }

double ConstraintReport::total() const {
    return valid_assignment + no_overlap + no_charge_during_trip + soc_lower + soc_upper + soc_final + grid_lower +
           grid_upper;
}

void validate(const ProblemInstance &p) {
    auto fail = [](const std::string &what) { throw InvalidInstance(what); };
    auto finite = [](double v) { return std::isfinite(v); };
    if (p.n_ev == 0) fail("n_ev must be >= 1");
    if (p.horizon == 0) fail("horizon must be >= 1");
    if (p.levels < 2) fail("levels must be >= 2");
    if (p.mode == ChargingMode::Bidirectional && p.levels % 2 == 0) {
        fail("bi-directional charging needs an odd number of levels");
    }
    if (p.prices.size() != p.horizon) fail("prices length must equal horizon");
    if (p.e0.size() != p.n_ev || p.e_min.size() != p.n_ev || p.e_cap.size() != p.n_ev) {
        fail("e0, e_min and e_cap must have one entry per EV");
    }
    for (std::size_t n = 0; n < p.n_ev; ++n) {
        if (!finite(p.e0[n]) || !finite(p.e_min[n]) || !finite(p.e_cap[n])) fail("non-finite SOC parameter");
        if (p.e_min[n] < 0.0 || p.e_min[n] > p.e_cap[n]) fail("need 0 <= e_min <= e_cap for every EV");
    }
    for (double c : p.prices) {
        if (!finite(c)) fail("non-finite price");
    }
    if (!(p.delta_t > 0.0) || !finite(p.delta_t)) fail("delta_t must be positive");
    if (!(p.p_min <= p.p_max)) fail("need p_min <= p_max");
    if (!(p.lambda > 0.0) || !finite(p.lambda)) fail("lambda must be positive");
    if (!(p.alpha > 0.0) || !finite(p.alpha)) fail("alpha must be positive");
    for (const Trip &t : p.trips) {
        if (t.start > t.end || t.end >= p.horizon) fail("trip window must satisfy start <= end <= horizon - 1");
        if (!(t.energy >= 0.0) || !finite(t.energy)) fail("trip energy must be nonnegative");
    }
}

Register build_register(const ProblemInstance &instance, EncodingKind enc) {
    validate(instance);
    const bool bi = instance.mode == ChargingMode::Bidirectional;
    std::vector<Site> sites;
    for (std::size_t n = 0; n < instance.n_ev; ++n) {
        for (std::size_t t = 0; t < instance.horizon; ++t) {
            sites.push_back(Site::charging(instance.levels, bi, n, t));
        }
    }
    if (enc == EncodingKind::BinaryTrips) {
        for (std::size_t n = 0; n < instance.n_ev; ++n) {
            for (std::size_t i = 0; i < instance.num_trips(); ++i) {
                sites.push_back(Site::trip_binary(n, i));
            }
        }
    } else {
        for (std::size_t i = 0; i < instance.num_trips(); ++i) {
            sites.push_back(Site::trip_integer(instance.n_ev, i));
        }
    }
    return Register(std::move(sites));
}

double dimension_ratio(std::size_t n_ev, std::size_t r) {
    const double rd = static_cast<double>(r);
    const double nd = static_cast<double>(n_ev);
    return std::exp2(-rd * nd + rd * std::log2(nd + 1.0));
}

ProblemModel::ProblemModel(ProblemInstance instance, EncodingKind enc)
    : instance_(std::move(instance)),
      enc_(enc),
      reg_(std::make_shared<const Register>(build_register(instance_, enc))) {
    level_values_ = reg_->site(0).eigenvalues;
    for (std::size_t i = 0; i < instance_.num_trips(); ++i) {
        for (std::size_t j = i + 1; j < instance_.num_trips(); ++j) {
            if (instance_.trips[i].overlaps(instance_.trips[j])) {
                overlapping_pairs_.emplace_back(i, j);
            }
        }
    }
}

std::size_t ProblemModel::trip_site(std::size_t ev, std::size_t trip) const {
    const std::size_t offset = instance_.n_ev * instance_.horizon;
    if (enc_ == EncodingKind::BinaryTrips) {
        return offset + ev * instance_.num_trips() + trip;
    }
    return offset + trip;
}

double ProblemModel::level(std::span<const std::size_t> digits, std::size_t ev, std::size_t t) const {
    return level_values_[digits[charging_site(ev, t)]];
}

bool ProblemModel::serves(std::span<const std::size_t> digits, std::size_t ev, std::size_t trip) const {
    if (enc_ == EncodingKind::BinaryTrips) {
        return digits[trip_site(ev, trip)] == 1;
    }
    return digits[trip_site(0, trip)] == ev + 1;
}

std::size_t ProblemModel::assigned_ev(std::span<const std::size_t> digits, std::size_t trip) const {
    if (enc_ == EncodingKind::IntegerTrips) {
        return digits[trip_site(0, trip)];
    }
    for (std::size_t n = 0; n < instance_.n_ev; ++n) {
        if (serves(digits, n, trip)) {
            return n + 1;
        }
    }
    return 0;
}

Evaluation ProblemModel::evaluate(const Configuration &config) const {
    reg_->validate(config);
    return evaluate_digits(config.digits);
}

Evaluation ProblemModel::evaluate_index(std::size_t index) const {
    if (index >= reg_->total_size()) {
        throw InvalidConfiguration("index out of range");
    }
    std::vector<std::size_t> digits(reg_->num_sites());
    reg_->decode_into(index, digits.data());
    return evaluate_digits(digits);
}

Evaluation ProblemModel::evaluate_digits(std::span<const std::size_t> digits) const {
    const ProblemInstance &p = instance_;
    const std::size_t n_ev = p.n_ev;
    const std::size_t horizon = p.horizon;
    const std::size_t r = p.num_trips();
    Evaluation out;
    ConstraintReport &rep = out.report;

    double charging = 0.0;
    for (std::size_t t = 0; t < horizon; ++t) {
        double power = 0.0;
        for (std::size_t n = 0; n < n_ev; ++n) {
            power += level(digits, n, t);
        }
        charging += p.prices[t] * power;
        rep.grid_lower += std::max(0.0, p.p_min - power);
        rep.grid_upper += std::max(0.0, power - p.p_max);
    }
    std::size_t unserved = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (assigned_ev(digits, i) == 0) {
            ++unserved;
        }
    }
    out.base_cost = p.delta_t * charging + p.lambda * static_cast<double>(unserved);

    if (enc_ == EncodingKind::BinaryTrips) {
        for (std::size_t i = 0; i < r; ++i) {
            std::size_t count = 0;
            for (std::size_t n = 0; n < n_ev; ++n) {
                count += serves(digits, n, i) ? 1 : 0;
            }
            rep.valid_assignment += count > 1 ? static_cast<double>(count * (count - 1) / 2) : 0.0;
        }
        for (const auto &[i, j] : overlapping_pairs_) {
            for (std::size_t n = 0; n < n_ev; ++n) {
                if (serves(digits, n, i) && serves(digits, n, j)) {
                    rep.no_overlap += 1.0;
                }
            }
        }
    } else {
        for (const auto &[i, j] : overlapping_pairs_) {
            const std::size_t qi = digits[trip_site(0, i)];
            if (qi != 0 && qi == digits[trip_site(0, j)]) {
                rep.no_overlap += 1.0;
            }
        }
    }

    for (std::size_t n = 0; n < n_ev; ++n) {
        for (std::size_t i = 0; i < r; ++i) {
            if (!serves(digits, n, i)) {
                continue;
            }
            for (std::size_t t = p.trips[i].start; t <= p.trips[i].end; ++t) {
                rep.no_charge_during_trip += std::abs(level(digits, n, t));
            }
        }
        // Running SOC at t: charge strictly before t, trips started at or before t.
        double charged = 0.0;
        for (std::size_t t = 0; t < horizon; ++t) {
            double drawn = 0.0;
            for (std::size_t i = 0; i < r; ++i) {
                if (p.trips[i].start <= t && serves(digits, n, i)) {
                    drawn += p.trips[i].energy;
                }
            }
            const double soc = p.e0[n] + p.delta_t * charged - drawn;
            rep.soc_lower += std::max(0.0, -soc);
            rep.soc_upper += std::max(0.0, soc - p.e_cap[n]);
            charged += level(digits, n, t);
        }
        double drawn = 0.0;
        for (std::size_t i = 0; i < r; ++i) {
            if (serves(digits, n, i)) {
                drawn += p.trips[i].energy;
            }
        }
        const double final_soc = p.e0[n] + p.delta_t * charged - drawn;
        rep.soc_final += std::max(0.0, p.e_min[n] - final_soc);
    }

    out.total_energy = out.base_cost + p.alpha * rep.total();
    return out;
}

Evaluation evaluate(const ProblemInstance &instance, EncodingKind enc, const Configuration &config) {
    return ProblemModel(instance, enc).evaluate(config);
}

bool is_feasible(const ProblemInstance &instance, EncodingKind enc, const Configuration &config) {
    return evaluate(instance, enc, config).report.feasible();
}

Configuration map_feasible(const ProblemInstance &instance, const Configuration &integer_config) {
    const ProblemModel integer(instance, EncodingKind::IntegerTrips);
    if (!integer.is_feasible(integer_config)) {
        throw MappingUndefined("map_feasible: integer configuration is infeasible");
    }
    const ProblemModel binary(instance, EncodingKind::BinaryTrips);
    Configuration out;
    out.digits.assign(binary.reg().num_sites(), 0);
    const std::size_t charging_sites = instance.n_ev * instance.horizon;
    std::copy_n(integer_config.digits.begin(), charging_sites, out.digits.begin());
    for (std::size_t i = 0; i < instance.num_trips(); ++i) {
        const std::size_t q = integer_config.digits[integer.trip_site(0, i)];
        if (q != 0) {
            out.digits[binary.trip_site(q - 1, i)] = 1;
        }
    }
    return out;
}

Configuration unmap_feasible(const ProblemInstance &instance, const Configuration &binary_config) {
    const ProblemModel binary(instance, EncodingKind::BinaryTrips);
    if (!binary.is_feasible(binary_config)) {
        throw MappingUndefined("unmap_feasible: binary configuration is infeasible");
    }
    const ProblemModel integer(instance, EncodingKind::IntegerTrips);
    Configuration out;
    out.digits.assign(integer.reg().num_sites(), 0);
    const std::size_t charging_sites = instance.n_ev * instance.horizon;
    std::copy_n(binary_config.digits.begin(), charging_sites, out.digits.begin());
    for (std::size_t i = 0; i < instance.num_trips(); ++i) {
        out.digits[integer.trip_site(0, i)] = binary.assigned_ev(binary_config.digits, i);
    }
    return out;
}

}  // namespace quditev
