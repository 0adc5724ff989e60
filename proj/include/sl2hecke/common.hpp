// common.hpp -- shared error types and small utilities.

#ifndef SL2HECKE_COMMON_HPP
#define SL2HECKE_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sl2hecke {

// All library errors derive from math_error; the `kind` string is stable
// and is what tests match on ("NonUnitInverse", "LevelError", ...).
class math_error : public std::runtime_error {
 public:
  math_error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
  throw math_error(kind, what);
}

inline void require(bool cond, const std::string& kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

// Deterministic 64-bit generator for sampling-based test suites.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

 private:
  std::uint64_t state_;
};

}  // namespace sl2hecke

#endif
