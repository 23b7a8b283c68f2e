#pragma once

#include <string_view>

namespace tnl::cli {

enum class LogLevel { Quiet = 0, Error, Warn, Info, Debug };

/// Level from TNL_LOG (quiet|error|warn|info|debug, default warn).
LogLevel log_level_from_env();
void set_log_level(LogLevel level);
LogLevel log_level();

void log(LogLevel level, std::string_view message);

}  // namespace tnl::cli
