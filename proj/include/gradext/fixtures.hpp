#pragma once

#include "gradext/io.hpp"

namespace gradext {

// Built-in laboratory instances, keyed by name.
const std::vector<std::string>& fixture_names();
bool is_fixture(const std::string& name);

// Construct one by name.  Declared finite-type certificates are replayed by
// bounded enumeration before the instance is handed out, so a fixture that
// reaches the caller has a verified classification.  Unknown names throw
// ValidationError.  Instances are memoized per process.
const Instance& fixture(const std::string& name);

// Write every fixture to dir/<name>.json in canonical form.
void write_fixture_files(const std::string& dir);

}  // namespace gradext
