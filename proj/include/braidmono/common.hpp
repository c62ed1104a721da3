#pragma once

#include <atomic>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidmono {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};
struct RankMismatch : Error {
  using Error::Error;
};
struct StrandMismatch : Error {
  using Error::Error;
};
struct WordLengthOverflow : Error {
  using Error::Error;
};
struct UndefinedModulus : Error {
  using Error::Error;
};
struct ZeroPolynomial : Error {
  using Error::Error;
};
struct ResourceExceeded : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

// Global word-length budget in syllables.  Exceeding it is a hard error,
// never truncation.
class WordBudget {
public:
  static std::size_t max_syllables() {
    return limit_.load(std::memory_order_relaxed);
  }
  static void set_max_syllables(std::size_t n) {
    limit_.store(n, std::memory_order_relaxed);
  }

private:
  static inline std::atomic<std::size_t> limit_{1000000};
};

}  // namespace braidmono
