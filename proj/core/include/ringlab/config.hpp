#pragma once

#include <cstddef>

namespace ringlab {

/// Largest carrier any enumerable ring may have. Defaults to 2^16 and can be
/// overridden through the RINGLAB_MAX_CARRIER environment variable.
std::size_t max_carrier();
void set_max_carrier(std::size_t n);

/// Rings up to this many elements get explicit addition/multiplication tables.
std::size_t table_threshold();
void set_table_threshold(std::size_t n);

/// Worker threads used by scans. Results never depend on this value.
unsigned thread_count();
void set_thread_count(unsigned n);

/// Throws ResourceLimit when `n` exceeds max_carrier().
void require_within_cap(std::size_t n, const char* what);

}  // namespace ringlab
