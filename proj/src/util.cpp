#include "pcqa/util.hpp"

#include <atomic>
#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace pcqa {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      break;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.size() >= prefix.size() && s.substr(0, prefix.size()) == prefix;
}

std::string strip_edge_punct(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && !std::isalnum(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && !std::isalnum(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) {
    // 0/0 is defined as 0 for metrics; x/0 with x != 0 is a caller bug.
    if (num != 0) throw std::domain_error("rational with zero denominator");
    den = 1;
    return;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

std::string Rational::fixed(int digits) const {
  long long n = num, d = den;
  bool neg = n < 0;
  if (neg) n = -n;
  long long scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  long long scaled = n * scale;
  long long q = scaled / d;
  long long r = scaled % d;
  if (2 * r >= d) ++q;  // half up
  long long ipart = q / scale;
  long long fpart = q % scale;
  char buf[64];
  if (digits == 0) {
    std::snprintf(buf, sizeof(buf), "%s%lld", neg ? "-" : "", ipart);
  } else {
    std::snprintf(buf, sizeof(buf), "%s%lld.%0*lld", neg ? "-" : "", ipart, digits, fpart);
  }
  return buf;
}

uint64_t derive_seed(uint64_t root, std::string_view purpose) {
  uint64_t h = 0xcbf29ce484222325ULL;  // fnv1a64
  for (char c : purpose) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  Rng mix(root ^ h);
  return mix.next();
}

void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& fn) {
  if (jobs <= 1 || n < 2) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  unsigned workers = std::min<unsigned>(jobs, std::thread::hardware_concurrency());
  if (workers < 2) workers = 2;
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= n) break;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace pcqa
