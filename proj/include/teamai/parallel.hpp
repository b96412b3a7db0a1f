#ifndef TEAMAI_PARALLEL_HPP
#define TEAMAI_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace teamai {

/// Worker-thread cap from the TEAMAI_THREADS environment variable.
/// Unset or "0" means hardware concurrency.
int worker_thread_count();

/// Splits [0, count) into fixed-size chunks and runs body(chunk_index,
/// begin, end) across worker threads. Chunk boundaries depend only on
/// (count, chunk_size), never on the thread count, so per-chunk results can
/// be reduced in chunk order for bitwise-reproducible aggregation.
void parallel_chunks(std::int64_t count, std::int64_t chunk_size,
                     const std::function<void(std::int64_t, std::int64_t,
                                              std::int64_t)>& body);

}  // namespace teamai

#endif  // TEAMAI_PARALLEL_HPP
