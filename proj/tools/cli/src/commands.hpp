// Copyright 2026 The Bratteli Authors
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

#pragma once

#include <iosfwd>

#include "run_config.hpp"

namespace bratteli::cli {

// Each command returns the process exit status: 0 on success, 2 when a
// check or computation fails. Invalid input throws bratteli errors, which
// main maps to status 1.
int cmd_metric(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_measure(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_graph_export(const RunConfig& config, std::ostream& out);
int cmd_selftest(const RunConfig& config, std::ostream& out);

}  // namespace bratteli::cli
