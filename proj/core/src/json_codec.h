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

// nlohmann/json codecs shared by the instance and config readers.

#ifndef QUDITEV_SRC_JSON_CODEC_H
#define QUDITEV_SRC_JSON_CODEC_H

#include "json.hpp"
#include "quditev/generator.h"
#include "quditev/problem.h"

namespace quditev {

using Json = nlohmann::json;

void to_json(Json &j, const Range &r);
void from_json(const Json &j, Range &r);
void to_json(Json &j, const ProblemClass &c);
void from_json(const Json &j, ProblemClass &c);
void to_json(Json &j, const Trip &t);
void from_json(const Json &j, Trip &t);
void to_json(Json &j, const ProblemInstance &p);
void from_json(const Json &j, ProblemInstance &p);

}  // namespace quditev

#endif
