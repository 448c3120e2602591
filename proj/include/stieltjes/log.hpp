#pragma once

#include <sstream>
#include <string>

namespace stieltjes {

enum class LogLevel { error = 0, info = 1, debug = 2 };

// Parsed once from the STIELTJES_LOG environment variable
// (error | info | debug); defaults to error.
LogLevel log_level();

void log_message(LogLevel level, const std::string& text);

template <class... Args>
void log_info(const Args&... args) {
  if (log_level() < LogLevel::info) return;
  std::ostringstream os;
  (os << ... << args);
  log_message(LogLevel::info, os.str());
}

template <class... Args>
void log_debug(const Args&... args) {
  if (log_level() < LogLevel::debug) return;
  std::ostringstream os;
  (os << ... << args);
  log_message(LogLevel::debug, os.str());
}

}  // namespace stieltjes
