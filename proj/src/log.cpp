#include "stieltjes/log.hpp"

#include <cstdlib>
#include <iostream>

namespace stieltjes {

static LogLevel parse_level() {
  const char* env = std::getenv("STIELTJES_LOG");
  if (!env) return LogLevel::error;
  std::string value(env);
  if (value == "debug") return LogLevel::debug;
  if (value == "info") return LogLevel::info;
  return LogLevel::error;
}

LogLevel log_level() {
  static const LogLevel level = parse_level();
  return level;
}

void log_message(LogLevel level, const std::string& text) {
  const char* tag = level == LogLevel::debug ? "debug" : "info";
  std::cerr << "[stieltjes:" << tag << "] " << text << "\n";
}

}  // namespace stieltjes
