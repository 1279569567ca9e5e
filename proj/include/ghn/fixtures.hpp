#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace ghn {

/// Sheaf fixtures compiled into the library from fixtures/*.json.
std::optional<std::string_view> fixture(std::string_view name);
std::vector<std::string_view> fixture_names();

}  // namespace ghn
