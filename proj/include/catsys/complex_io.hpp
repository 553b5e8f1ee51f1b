#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "catsys/stability.hpp"

namespace catsys {

/// One token: "a+bi", "a-bi", "a", "bi". Signs, decimals and exponents are
/// accepted ("1.5e0-0.5i"). Throws ParseError tagged with `token_index`.
Complex parse_complex(std::string_view token, std::size_t token_index = 0);

/// Comma-separated complex tokens, e.g. "1.0+0.0i,-1.0+0.0i".
std::vector<Complex> parse_complex_list(std::string_view text);

/// parse_complex_list wrapped as a central charge.
CentralCharge parse_charge(std::string_view text);

/// Comma-separated non-negative integers, e.g. "2,0,1".
std::vector<std::size_t> parse_index_list(std::string_view text);

/// "a+bi" with 17 significant digits, so parse_complex(format_complex(z)) == z.
std::string format_complex(Complex z);
std::string format_complex_list(const std::vector<Complex>& zs);

/// %.17g
std::string format_double(double x);

}  // namespace catsys
