#pragma once

#include <cstdint>

namespace rama {

// Worker count for row-partitioned inner loops (spectral matrix-vector
// products). Results are bit-identical for every setting: each row is
// reduced by exactly one worker in fixed slot order.
void set_thread_count(unsigned n);
unsigned thread_count();

}  // namespace rama
