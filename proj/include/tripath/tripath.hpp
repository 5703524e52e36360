// Copyright 2026 The tripath Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file Umbrella header for the tripath library.

#pragma once

#include "tripath/analysis.hpp"
#include "tripath/errors.hpp"
#include "tripath/hilbert.hpp"
#include "tripath/nc_oracle.hpp"
#include "tripath/network.hpp"
#include "tripath/network_json.hpp"
#include "tripath/parse_number.hpp"
#include "tripath/presets.hpp"
#include "tripath/verify.hpp"
