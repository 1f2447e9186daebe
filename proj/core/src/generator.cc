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

#include "quditev/generator.h"

#include <fstream>
#include <sstream>

#include "json_codec.h"
#include "quditev/rng.h"

namespace quditev {

ProblemClass ProblemClass::bidirectional_benchmark() { return ProblemClass{}; }

ProblemClass ProblemClass::unidirectional_benchmark(std::size_t trips) {
    ProblemClass c;
    c.mode = ChargingMode::Unidirectional;
    c.levels = 2;
    c.n_ev = 2;
    c.horizon = 3;
    c.trips = trips;
    return c;
}

std::string ProblemClass::label() const {
    std::ostringstream out;
    out << to_string(mode) << "-d" << levels << "-n" << n_ev << "-t" << horizon << "-r" << trips;
    return out.str();
}

void validate(const ProblemClass &c) {
    auto fail = [](const std::string &what) { throw std::invalid_argument("invalid problem class: " + what); };
    if (c.levels < 2) fail("levels must be >= 2");
    if (c.mode == ChargingMode::Bidirectional && c.levels % 2 == 0) fail("bi-directional needs odd levels");
    if (c.n_ev == 0 || c.horizon == 0) fail("n_ev and horizon must be >= 1");
    for (const Range *r : {&c.price, &c.energy_deficit, &c.trip_energy}) {
        if (!(r->lo <= r->hi)) fail("range with lo > hi");
    }
    if (c.energy_deficit.lo < 0.0 || c.trip_energy.lo < 0.0) fail("energy ranges must be nonnegative");
    if (c.e0 < 0.0 || c.e0 + c.energy_deficit.hi > c.e_cap) fail("need 0 <= e0 and e0 + max deficit <= e_cap");
    if (!(c.p_max >= 0.0)) fail("p_max must be >= 0");
    if (!(c.delta_t > 0.0) || !(c.lambda > 0.0) || !(c.alpha > 0.0)) fail("delta_t, lambda, alpha must be > 0");
}

ProblemInstance generate_instance(const ProblemClass &cls, std::uint64_t seed) {
    validate(cls);
    Rng rng(seed);
    ProblemInstance p;
    p.n_ev = cls.n_ev;
    p.horizon = cls.horizon;
    p.levels = cls.levels;
    p.mode = cls.mode;
    p.delta_t = cls.delta_t;
    p.lambda = cls.lambda;
    p.alpha = cls.alpha;
    p.p_max = cls.p_max;
    p.p_min = -cls.p_max;
    p.prices.resize(cls.horizon);
    for (double &c : p.prices) {
        c = rng.uniform(cls.price.lo, cls.price.hi);
    }
    p.trips.resize(cls.trips);
    for (Trip &t : p.trips) {
        t.start = static_cast<std::size_t>(rng.below(cls.horizon));
        t.end = t.start;
        t.energy = rng.uniform(cls.trip_energy.lo, cls.trip_energy.hi);
    }
    p.e0.assign(cls.n_ev, cls.e0);
    p.e_cap.assign(cls.n_ev, cls.e_cap);
    p.e_min.resize(cls.n_ev);
    for (double &e : p.e_min) {
        e = cls.e0 + rng.uniform(cls.energy_deficit.lo, cls.energy_deficit.hi);
    }
    validate(p);
    return p;
}

void to_json(Json &j, const Range &r) { j = Json::array({r.lo, r.hi}); }

void from_json(const Json &j, Range &r) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("range must be a two-element array");
    }
    r.lo = j.at(0).get<double>();
    r.hi = j.at(1).get<double>();
}

void to_json(Json &j, const ProblemClass &c) {
    j = Json{{"mode", to_string(c.mode)},
             {"levels", c.levels},
             {"n_ev", c.n_ev},
             {"horizon", c.horizon},
             {"trips", c.trips},
             {"price", c.price},
             {"energy_deficit", c.energy_deficit},
             {"trip_energy", c.trip_energy},
             {"e0", c.e0},
             {"e_cap", c.e_cap},
             {"p_max", c.p_max},
             {"delta_t", c.delta_t},
             {"lambda", c.lambda},
             {"alpha", c.alpha}};
}

void from_json(const Json &j, ProblemClass &c) {
    // Missing keys keep the bi-directional benchmark defaults.
    if (j.contains("mode")) c.mode = parse_charging_mode(j.at("mode").get<std::string>());
    if (j.contains("levels")) c.levels = j.at("levels").get<std::size_t>();
    if (j.contains("n_ev")) c.n_ev = j.at("n_ev").get<std::size_t>();
    if (j.contains("horizon")) c.horizon = j.at("horizon").get<std::size_t>();
    if (j.contains("trips")) c.trips = j.at("trips").get<std::size_t>();
    if (j.contains("price")) c.price = j.at("price").get<Range>();
    if (j.contains("energy_deficit")) c.energy_deficit = j.at("energy_deficit").get<Range>();
    if (j.contains("trip_energy")) c.trip_energy = j.at("trip_energy").get<Range>();
    if (j.contains("e0")) c.e0 = j.at("e0").get<double>();
    if (j.contains("e_cap")) c.e_cap = j.at("e_cap").get<double>();
    if (j.contains("p_max")) c.p_max = j.at("p_max").get<double>();
    if (j.contains("delta_t")) c.delta_t = j.at("delta_t").get<double>();
    if (j.contains("lambda")) c.lambda = j.at("lambda").get<double>();
    if (j.contains("alpha")) c.alpha = j.at("alpha").get<double>();
}

void to_json(Json &j, const Trip &t) { j = Json{{"start", t.start}, {"end", t.end}, {"energy", t.energy}}; }

void from_json(const Json &j, Trip &t) {
    t.start = j.at("start").get<std::size_t>();
    t.end = j.at("end").get<std::size_t>();
    t.energy = j.at("energy").get<double>();
}

void to_json(Json &j, const ProblemInstance &p) {
    j = Json{{"n_ev", p.n_ev},       {"horizon", p.horizon}, {"levels", p.levels}, {"mode", to_string(p.mode)},
             {"delta_t", p.delta_t}, {"prices", p.prices},   {"trips", p.trips},   {"e0", p.e0},
             {"e_min", p.e_min},     {"e_cap", p.e_cap},     {"p_min", p.p_min},   {"p_max", p.p_max},
             {"lambda", p.lambda},   {"alpha", p.alpha}};
}

void from_json(const Json &j, ProblemInstance &p) {
    p.n_ev = j.at("n_ev").get<std::size_t>();
    p.horizon = j.at("horizon").get<std::size_t>();
    p.levels = j.at("levels").get<std::size_t>();
    p.mode = parse_charging_mode(j.at("mode").get<std::string>());
    p.delta_t = j.at("delta_t").get<double>();
    p.prices = j.at("prices").get<std::vector<double>>();
    p.trips = j.at("trips").get<std::vector<Trip>>();
    p.e0 = j.at("e0").get<std::vector<double>>();
    p.e_min = j.at("e_min").get<std::vector<double>>();
    p.e_cap = j.at("e_cap").get<std::vector<double>>();
    p.p_min = j.at("p_min").get<double>();
    p.p_max = j.at("p_max").get<double>();
    p.lambda = j.at("lambda").get<double>();
    p.alpha = j.at("alpha").get<double>();
}

std::string instance_to_json(const InstanceFile &file) {
    Json j;
    j["format"] = "quditev-instance";
    j["version"] = 1;
    j["instance"] = file.instance;
    if (file.seed) {
        j["seed"] = *file.seed;
    }
    if (file.problem_class) {
        j["class"] = *file.problem_class;
    }
    return j.dump(2) + "\n";
}

InstanceFile instance_from_json(const std::string &text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw std::invalid_argument(std::string("instance file is not valid JSON: ") + e.what());
    }
    if (j.value("format", std::string{}) != "quditev-instance") {
        throw std::invalid_argument("not a quditev instance document");
    }
    InstanceFile file;
    try {
        file.instance = j.at("instance").get<ProblemInstance>();
        if (j.contains("seed")) {
            file.seed = j.at("seed").get<std::uint64_t>();
        }
        if (j.contains("class")) {
            file.problem_class = j.at("class").get<ProblemClass>();
        }
    } catch (const Json::exception &e) {
        throw std::invalid_argument(std::string("malformed instance document: ") + e.what());
    }
    validate(file.instance);
    return file;
}

void write_instance_file(const std::filesystem::path &path, const InstanceFile &file) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path.string() + " for writing");
    }
    out << instance_to_json(file);
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

InstanceFile read_instance_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return instance_from_json(buffer.str());
}

}  // namespace quditev
