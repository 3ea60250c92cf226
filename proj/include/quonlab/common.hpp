#pragma once

#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace quonlab {

using Cplx = std::complex<double>;

/// Thrown when a matrix (or twisted-algebra element) has no usable inverse.
class SingularError : public std::runtime_error {
 public:
  explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a request would materialize more than size_cap()! objects.
class SizeCapError : public std::runtime_error {
 public:
  explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

/// Execution policy for the data-parallel kernels. Serial is the reference
/// implementation; Parallel uses OpenMP. Results are bitwise identical.
enum class Exec { Serial, Parallel };

/// Maximum n for n!-sized objects. Default 8, overridable via the
/// QUONLAB_SIZE_CAP environment variable.
inline int size_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("QUONLAB_SIZE_CAP")) {
      int v = std::atoi(env);
      if (v >= 1) return v;
    }
    return 8;
  }();
  return cap;
}

inline void check_size_cap(int n, const char* where) {
  if (n > size_cap()) {
    throw SizeCapError(std::string(where) + ": n=" + std::to_string(n) +
                       " exceeds size cap " + std::to_string(size_cap()));
  }
}

}  // namespace quonlab
