#include "catsys/complex_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "catsys/errors.hpp"

namespace catsys {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// Reads a signed decimal at the front of s and advances it.
bool read_number(std::string_view& s, double& out) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty() || !(std::isdigit(static_cast<unsigned char>(s.front())) || s.front() == '.')) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out, std::chars_format::general);
  if (ec != std::errc{} || !std::isfinite(out)) return false;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  if (negative) out = -out;
  return true;
}

std::vector<std::string_view> split(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

Complex parse_complex(std::string_view token, std::size_t token_index) {
  std::string_view s = trim(token);
  const std::string quoted = "'" + std::string(token) + "'";
  if (s.empty()) throw ParseError(token_index, "empty token");
  double first = 0;
  if (!read_number(s, first)) throw ParseError(token_index, "expected a number in " + quoted);
  if (s.empty()) return {first, 0.0};
  if (s == "i") return {0.0, first};
  double second = 0;
  if ((s.front() != '+' && s.front() != '-') || !read_number(s, second))
    throw ParseError(token_index, "expected '+bi' or '-bi' after the real part in " + quoted);
  if (s != "i") throw ParseError(token_index, "expected trailing 'i' in " + quoted);
  return {first, second};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  const auto parts = split(text);
  for (std::size_t k = 0; k < parts.size(); ++k) out.push_back(parse_complex(parts[k], k));
  return out;
}

CentralCharge parse_charge(std::string_view text) { return CentralCharge{parse_complex_list(text)}; }

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  const auto parts = split(text);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::size_t v = 0;
    const auto p = parts[k];
    const auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), v);
    if (p.empty() || ec != std::errc{} || ptr != p.data() + p.size())
      throw ParseError(k, "expected a non-negative integer in '" + std::string(p) + "'");
    out.push_back(v);
  }
  return out;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(Complex z) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

std::string format_complex_list(const std::vector<Complex>& zs) {
  std::string out;
  for (std::size_t k = 0; k < zs.size(); ++k) {
    if (k) out += ',';
    out += format_complex(zs[k]);
  }
  return out;
}

}  // namespace catsys
