#pragma once

#include <string_view>

namespace asts {

enum class LogLevel { error = 0, info = 1, debug = 2 };

/// Level comes from ADAPTIVE_SAMPLER_LOG ({error|info|debug}), default error.
LogLevel log_level();

void log_error(std::string_view msg);
void log_info(std::string_view msg);
void log_debug(std::string_view msg);

}  // namespace asts
