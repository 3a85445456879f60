#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>

namespace freqrobust {

inline constexpr const char* kLibVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

// Shortest round-trippable decimal form of a double (%.17g trimmed).
std::string format_double(double x);

// FNV-1a over the raw bytes; used to fingerprint configs in metadata blocks.
std::uint64_t fnv1a_hash(const std::string& bytes);

// Writes to <path>.tmp then renames, so readers never observe partial files.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

// Worker cap: min(hardware_concurrency, FREQROBUST_THREADS if set). At least 1.
int worker_count();

// Runs fn(i) for i in [0, n) on worker_count() threads. Callers write results
// into preallocated slots keyed by i, so outputs are independent of scheduling.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace freqrobust
