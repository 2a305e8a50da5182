#include "ringlab/config.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include "ringlab/error.hpp"

namespace ringlab {
namespace {

std::size_t carrier_from_env() {
  if (const char* env = std::getenv("RINGLAB_MAX_CARRIER")) {
    try {
      const auto v = std::stoull(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::size_t{1} << 16;
}

std::atomic<std::size_t>& carrier_cap() {
  static std::atomic<std::size_t> cap{carrier_from_env()};
  return cap;
}

std::atomic<std::size_t> g_table_threshold{2048};

std::atomic<unsigned>& threads() {
  static std::atomic<unsigned> n{std::max(1u, std::thread::hardware_concurrency())};
  return n;
}

}  // namespace

std::size_t max_carrier() { return carrier_cap().load(); }
void set_max_carrier(std::size_t n) { carrier_cap().store(n); }

std::size_t table_threshold() { return g_table_threshold.load(); }
void set_table_threshold(std::size_t n) { g_table_threshold.store(n); }

unsigned thread_count() { return threads().load(); }
void set_thread_count(unsigned n) { threads().store(n == 0 ? 1 : n); }

void require_within_cap(std::size_t n, const char* what) {
  if (n > max_carrier())
    throw ResourceLimit(std::string(what) + ": carrier of " + std::to_string(n) +
                        " elements exceeds the enumeration cap of " + std::to_string(max_carrier()));
}

}  // namespace ringlab
