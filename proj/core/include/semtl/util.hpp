#ifndef SEMTL_UTIL_HPP
#define SEMTL_UTIL_HPP

#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace semtl {

// Fixed-format floating point rendering.  Used wherever a value ends up in
// an artifact so that re-runs are byte-identical.
inline std::string format_double(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

inline std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

// Number of workers for embarrassingly parallel stages.  Honors the
// SEMTL_WORKERS environment variable, defaults to hardware concurrency.
std::size_t worker_count();

// Runs fn(i) for i in [0, n) on a bounded pool.  Results must be written to
// pre-sized slots by index; the call returns once all tasks finished, so the
// overall outcome is independent of scheduling.  Exceptions are rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::vector<std::string> split_lines(const std::string& text);

}  // namespace semtl

#endif  // SEMTL_UTIL_HPP
