#include "eqtri/rational.hpp"

namespace eqtri {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error(ErrorKind::Parse, "empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(boost::multiprecision::cpp_int(text));
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + text + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "bad rational literal '" + text + "'");
  }
}

std::string format_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string format_point(const RationalPoint& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += format_rational(p[i]);
  }
  return out;
}

}  // namespace eqtri
