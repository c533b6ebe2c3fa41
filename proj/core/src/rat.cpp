#include "ratrec/rat.hpp"

#include <cctype>

#include "ratrec/errors.hpp"

namespace ratrec {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat rat_from_string(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_integer(num) || !valid_integer(den)) {
    throw InputError("not a rational literal: '" + std::string(text) + "'");
  }
  Rat value(std::string(num) + "/" + std::string(den));
  if (value.get_den() == 0) {
    throw InputError("zero denominator in rational literal: '" + std::string(text) + "'");
  }
  value.canonicalize();
  return value;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

Rat rat_pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  Rat b = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace ratrec
