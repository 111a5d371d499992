#ifndef SCHURMZV_RATIONAL_HPP
#define SCHURMZV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace schurmzv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// binomial(n, k) for any integer n and k >= 0 via the falling-factorial
// product n(n-1)...(n-k+1)/k!; k < 0 gives 0, k == 0 gives 1.  Note that a
// negative n does NOT make this vanish: binomial(-1, 2) == 1.  Always an
// integer.
inline Int binomial(const Int& n, long long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  Int num = 1, den = 1;
  for (long long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  return num / den;  // exact: falling factorial divisible by k!
}

inline Int binomial(long long n, long long k) { return binomial(Int(n), k); }

inline std::string rat_to_string(const Rat& r) {
  return r.str();  // "p/q" or "p"
}

}  // namespace schurmzv

#endif  // SCHURMZV_RATIONAL_HPP
