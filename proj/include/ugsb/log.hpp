#pragma once

#include <cstddef>
#include <string_view>

namespace ugsb::log {

/// Writes "warning: <msg>" to stderr unless silenced.
void warn(std::string_view msg);
void set_quiet(bool quiet);
/// Warnings emitted since start (including silenced ones).
std::size_t warning_count();

}  // namespace ugsb::log
