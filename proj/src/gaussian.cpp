#include "divlie/gaussian.hpp"

#include <string>

namespace divlie {

Scalar parse_scalar(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ') s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty scalar literal");
  if (s.back() != 'i') return Scalar(Rational::parse(s));

  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string re = split == std::string::npos ? std::string() : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  Rational im_value;
  if (im.empty() || im == "+") {
    im_value = Rational(1);
  } else if (im == "-") {
    im_value = Rational(-1);
  } else {
    im_value = Rational::parse(im);
  }
  return Scalar(re.empty() ? Rational(0) : Rational::parse(re), im_value);
}

}  // namespace divlie
