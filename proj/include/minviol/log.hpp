#pragma once

#include <string>

namespace minviol {

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

/// Current log level, read once from the MINVIOL_LOG environment variable
/// (error|warn|info|debug). Defaults to warn.
LogLevel log_level();

void log(LogLevel level, const std::string& msg);

inline void log_error(const std::string& msg) { log(LogLevel::Error, msg); }
inline void log_warn(const std::string& msg) { log(LogLevel::Warn, msg); }
inline void log_info(const std::string& msg) { log(LogLevel::Info, msg); }
inline void log_debug(const std::string& msg) { log(LogLevel::Debug, msg); }

}  // namespace minviol
