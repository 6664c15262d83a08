#include "cplc/fraction.hpp"

#include <cctype>
#include <charconv>

#include "cplc/error.hpp"

namespace cplc {

std::string to_string(const Fraction& f) {
  if (f.denominator() == 1) return std::to_string(f.numerator());
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

double to_double(const Fraction& f) {
  return static_cast<double>(f.numerator()) / static_cast<double>(f.denominator());
}

namespace {

std::int64_t parse_integer(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("invalid fraction '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Fraction parse_fraction(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_integer(text.substr(0, slash), text);
    const std::int64_t den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Fraction(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 15) throw ValidationError("too many decimals in '" + std::string(text) + "'");
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (negative) int_part.remove_prefix(1);
    const std::int64_t whole = int_part.empty() ? 0 : parse_integer(int_part, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    const std::int64_t frac = frac_part.empty() ? 0 : parse_integer(frac_part, text);
    if (!frac_part.empty() && !std::isdigit(static_cast<unsigned char>(frac_part.front()))) {
      throw ValidationError("invalid fraction '" + std::string(text) + "'");
    }
    Fraction value(whole * scale + frac, scale);
    return negative ? -value : value;
  }
  return Fraction(parse_integer(text, text));
}

}  // namespace cplc
