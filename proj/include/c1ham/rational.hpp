#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace c1ham {

// All arithmetic in this library is exact. Rationals are kept in lowest
// terms with positive denominator by the backend; no floating point
// anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Malformed input data or violated precondition. The CLI maps this to
/// exit status 1, as opposed to verdict failures (exit status 2).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "p/q" or "p" (q > 0 after normalization). Throws DataError on
/// malformed input or zero denominator.
Rat parse_rational(std::string_view text);

/// Formats as "p/q", with "/q" omitted when the denominator is 1.
std::string to_string(const Rat& value);

/// "(a, b, ...)" for reports and error messages.
std::string to_string(std::span<const Rat> vec);
std::string to_string(std::span<const Int> vec);

Rat dot(std::span<const Rat> a, std::span<const Rat> b);
RatVec add(std::span<const Rat> a, std::span<const Rat> b);
RatVec sub(std::span<const Rat> a, std::span<const Rat> b);
RatVec scale(const Rat& c, std::span<const Rat> v);
bool is_zero(std::span<const Rat> v);

inline RatVec zero_vec(std::size_t dim) { return RatVec(dim, Rat(0)); }

RatVec to_rat_vec(std::span<const Int> v);

}  // namespace c1ham
