#include "c1ham/rational.hpp"

#include <sstream>

namespace c1ham {

namespace {

Int parse_integer(std::string_view text, std::string_view context) {
  if (text.empty()) throw DataError("empty integer in rational '" + std::string(context) + "'");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw DataError("sign without digits in rational '" + std::string(context) + "'");
  Int value = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c < '0' || c > '9') throw DataError("invalid character in rational '" + std::string(context) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Int(-value) : value;
}

}  // namespace

Rat parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text, text));
  Int num = parse_integer(text.substr(0, slash), text);
  Int den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw DataError("zero denominator in rational '" + std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rat(num, den);
}

std::string to_string(const Rat& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string to_string(std::span<const Rat> vec) {
  std::string out = "(";
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (i) out += ", ";
    out += to_string(vec[i]);
  }
  out += ")";
  return out;
}

std::string to_string(std::span<const Int> vec) {
  std::string out = "(";
  for (std::size_t i = 0; i < vec.size(); ++i) {
    if (i) out += ", ";
    out += vec[i].str();
  }
  out += ")";
  return out;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size())
    throw DataError("dimension mismatch in dot product: " + std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()));
  Rat sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

RatVec add(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw DataError("dimension mismatch in vector sum");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw DataError("dimension mismatch in vector difference");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec scale(const Rat& c, std::span<const Rat> v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

bool is_zero(std::span<const Rat> v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

RatVec to_rat_vec(std::span<const Int> v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

}  // namespace c1ham
