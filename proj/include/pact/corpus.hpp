#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pact/workspace.hpp"

namespace pact {

/// The reference workspaces shipped under fixtures/, keyed by file name.
/// Every task carries the expected results in options.expect.
std::vector<std::pair<std::string, Workspace>> fixture_workspaces();

/// Writes every fixture workspace into `dir` (created if missing) and
/// returns the written paths. Throws Io.
std::vector<std::string> emit_fixture_corpus(const std::string& dir);

}  // namespace pact
