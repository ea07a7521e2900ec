#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace pcqa {

// ---------------------------------------------------------------------------
// String helpers
// ---------------------------------------------------------------------------

std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_ws(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string trim(std::string_view s);
std::string to_lower(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);

// Strips leading/trailing non-alphanumeric characters; inner punctuation
// ("10.0", "don't") is kept.
std::string strip_edge_punct(std::string_view s);

// Formats a double so that reading it back yields the identical bits.
std::string format_double(double v);

// ---------------------------------------------------------------------------
// Exact rational arithmetic for report numbers
// ---------------------------------------------------------------------------

// Report metrics are ratios of small integer counts. Keeping them as exact
// rationals makes rounded table values well-defined instead of depending on
// binary floating point.
struct Rational {
  long long num = 0;
  long long den = 1;  // den >= 1 after normalization; 0/0 inputs normalize to 0/1

  Rational() = default;
  Rational(long long n, long long d);

  double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }

  // Fixed-point decimal string with `digits` places, computed in integer
  // arithmetic, half-up rounding.
  std::string fixed(int digits) const;

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

// ---------------------------------------------------------------------------
// Deterministic RNG
// ---------------------------------------------------------------------------

// splitmix64. Standard-library distributions are implementation-defined, so
// everything that must be byte-reproducible across toolchains draws from this.
struct Rng {
  uint64_t state = 0;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). Modulo bias is irrelevant at our scales.
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

  double unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<size_t>(below(v.size()))];
  }
};

// Derives a sub-seed from a root seed and a purpose string. Sub-seeds are
// stable across versions as long as the purpose strings do not change; the
// derivation is fnv1a64(purpose) xor-folded into the root, then mixed.
uint64_t derive_seed(uint64_t root, std::string_view purpose);

// ---------------------------------------------------------------------------
// Ordered parallel map
// ---------------------------------------------------------------------------

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Results must be written
// by the caller into index-addressed storage, which keeps output identical to
// the sequential order regardless of scheduling. jobs <= 1 runs inline.
void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& fn);

}  // namespace pcqa
