#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace curvekit {

// Error codes shared across the toolkit. CLI maps these to process exit
// codes: config/precondition -> 2, io -> 3, internal invariant -> 4.
enum class Errc {
  reject_signature,
  length_mismatch,
  not_disjoint,
  duplicate_component,
  precondition_vertex,
  origin_missing,
  invalid_loop,
  budget_exceeded,
  io_error,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

// Internal invariant check that must hold regardless of input. Violations
// are bugs and surface as Errc::internal (exit code 4 at the CLI).
inline void check_internal(bool ok, const char* what) {
  if (!ok) throw Error(Errc::internal, std::string("internal invariant: ") + what);
}

// Edge-weight vector of a multicurve in normal coordinates. Index = edge id
// of the triangulation the curve lives on.
using Coords = std::vector<int>;

// FNV-1a, used for content fingerprints in caches and reports.
inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t seed = 1469598103934665603ull) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s) {
  return fnv1a64(s.data(), s.size());
}

// Deterministic cross-platform RNG (splitmix64). std::mt19937 would also be
// portable but the distributions are not; we only ever need bounded uniforms.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n >= 1. Rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t limit = ~0ull - (~0ull % n);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % n;
  }
};

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must be
// written to preallocated slots; assembly order is by index, so output is
// deterministic regardless of scheduling.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& fn);

}  // namespace curvekit
