// Copyright 2026 The coinforge Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coinforge::cli {

/// Tool version recorded in manifests.
const char* version();

/// Entry point for `coinforge <simulate|bench> [flags]`. `args` excludes the
/// program name. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coinforge::cli
