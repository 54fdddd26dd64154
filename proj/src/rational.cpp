#include "novikov/rational.hpp"

#include <ostream>

#include "novikov/error.hpp"

namespace novikov {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::SingularForm: return "SingularForm";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::InvalidForm: return "InvalidForm";
    case ErrorKind::NotLie: return "NotLie";
    case ErrorKind::PreconditionUnverified: return "PreconditionUnverified";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NonDegenerateProduct: return "NonDegenerateProduct";
    case ErrorKind::StarPropertiesFail: return "StarPropertiesFail";
    case ErrorKind::HNotAssociative: return "HNotAssociative";
    case ErrorKind::OmegaNotInvariant: return "OmegaNotInvariant";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::GridTooLarge: return "GridTooLarge";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Rational::Rational(long num, long den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorKind::Parse, "not a rational: \"" + std::string(text) + "\"");
  std::string n(num), d(den);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10), zd(d, 10);
  if (zd == 0) throw Error(ErrorKind::Parse, "zero denominator in \"" + std::string(text) + "\"");
  return Rational(mpq_class(zn, zd));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace novikov
