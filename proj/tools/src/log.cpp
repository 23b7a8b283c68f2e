#include "log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <string>

namespace tnl::cli {

namespace {
std::atomic<LogLevel> g_level{LogLevel::Warn};
std::mutex g_mutex;

const char* label(LogLevel level) {
    switch (level) {
        case LogLevel::Error: return "error";
        case LogLevel::Warn: return "warn";
        case LogLevel::Info: return "info";
        case LogLevel::Debug: return "debug";
        default: return "";
    }
}
}  // namespace

LogLevel log_level_from_env() {
    const char* env = std::getenv("TNL_LOG");
    if (!env) return LogLevel::Warn;
    const std::string v(env);
    if (v == "quiet" || v == "off" || v == "0") return LogLevel::Quiet;
    if (v == "error") return LogLevel::Error;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
}

void set_log_level(LogLevel level) { g_level = level; }
LogLevel log_level() { return g_level; }

void log(LogLevel level, std::string_view message) {
    if (level == LogLevel::Quiet || level > g_level.load()) return;
    std::lock_guard lock(g_mutex);
    std::cerr << "[tnl " << label(level) << "] " << message << '\n';
}

}  // namespace tnl::cli
