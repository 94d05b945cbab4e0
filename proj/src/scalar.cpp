#include "hodge/scalar.hpp"

#include <cctype>
#include <ostream>

#include "hodge/errors.hpp"

namespace hodge {

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw PreconditionError("division by zero scalar");
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ /= o.re_;
    return *this;
  }
  // z / w = z * conj(w) / |w|^2
  Rational n = o.norm2();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string Scalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(im_) > 0 && !out.empty()) out += "+";
  out += im_.get_str();
  out += "*i";
  return out;
}

namespace {

Rational parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) throw ParseError("empty rational in scalar '" + std::string(whole) + "'");
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw ParseError("bad rational in scalar '" + std::string(whole) + "'");
  int slashes = 0;
  for (std::size_t k = start; k < text.size(); ++k) {
    char c = text[k];
    if (c == '/') {
      ++slashes;
      if (k == start || k + 1 == text.size()) slashes = 99;
    } else if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad character in scalar '" + std::string(whole) + "'");
    }
  }
  if (slashes > 1) throw ParseError("bad rational in scalar '" + std::string(whole) + "'");
  std::string s(text[0] == '+' ? text.substr(1) : text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational in scalar '" + std::string(whole) + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in scalar '" + std::string(whole) + "'");
  q.canonicalize();
  return q;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  std::string_view s(compact);
  if (s.empty()) throw ParseError("empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s, text));

  // Imaginary part present: strip trailing "i" and optional "*".
  std::string_view body = s.substr(0, s.size() - 1);
  if (!body.empty() && body.back() == '*') body.remove_suffix(1);
  // Find the sign that separates re from im (not at position 0, not after '/').
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != '/') {
      split = k;
      break;
    }
  }
  std::string_view re_part = split == std::string_view::npos ? std::string_view() : body.substr(0, split);
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
  Rational im;
  if (im_part.empty() || im_part == "+") {
    im = 1;
  } else if (im_part == "-") {
    im = -1;
  } else {
    im = parse_rational(im_part, text);
  }
  Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part, text);
  return Scalar(re, im);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace hodge
