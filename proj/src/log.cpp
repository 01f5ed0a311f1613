#include "ugsb/log.hpp"

#include <atomic>
#include <cstdio>
#include <mutex>

namespace ugsb::log {
namespace {
std::atomic<bool> g_quiet{false};
std::atomic<std::size_t> g_count{0};
std::mutex g_mutex;
}  // namespace

void warn(std::string_view msg) {
  ++g_count;
  if (g_quiet) return;
  std::lock_guard lock(g_mutex);
  std::fprintf(stderr, "warning: %.*s\n", static_cast<int>(msg.size()), msg.data());
}

void set_quiet(bool quiet) { g_quiet = quiet; }

std::size_t warning_count() { return g_count; }

}  // namespace ugsb::log
