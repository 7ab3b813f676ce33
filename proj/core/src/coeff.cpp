#include "gradnil/coeff.hpp"

#include <cctype>

namespace gradnil {

namespace {

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) {
    throw Error("empty number");
  }
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) {
    throw Error("malformed number '" + s + "'");
  }
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw Error("malformed number '" + s + "'");
    }
  }
  if (s[0] == '+') {
    s.erase(0, 1);
  }
  return mpz_class(s, 10);
}

}  // namespace

CoeffDomain CoeffDomain::zmod(const mpz_class& m) {
  if (m < 2) {
    throw Error("Z/mZ needs m >= 2, got " + m.get_str());
  }
  return CoeffDomain(CoeffKind::ZMod, m);
}

CoeffDomain CoeffDomain::prime_field(const mpz_class& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0) {
    throw Error("F_p needs a prime modulus, got " + p.get_str());
  }
  return CoeffDomain(CoeffKind::Fp, p);
}

CoeffDomain CoeffDomain::rationals() { return CoeffDomain(CoeffKind::Rat, 0); }

CoeffDomain CoeffDomain::parse(std::string_view text) {
  if (text == "Q") {
    return rationals();
  }
  if (text.size() >= 2 && (text[0] == 'Z' || text[0] == 'F')) {
    const mpz_class m = parse_integer(text.substr(1));
    return text[0] == 'Z' ? zmod(m) : prime_field(m);
  }
  throw Error("unknown coefficient domain '" + std::string(text) + "' (expected Z<m>, F<p> or Q)");
}

bool CoeffDomain::two_is_unit() const {
  if (kind_ == CoeffKind::Rat) {
    return true;
  }
  return mpz_odd_p(modulus_.get_mpz_t()) != 0;
}

std::optional<mpz_class> CoeffDomain::cardinality() const {
  if (kind_ == CoeffKind::Rat) {
    return std::nullopt;
  }
  return modulus_;
}

std::string CoeffDomain::name() const {
  switch (kind_) {
    case CoeffKind::ZMod:
      return "Z" + modulus_.get_str();
    case CoeffKind::Fp:
      return "F" + modulus_.get_str();
    case CoeffKind::Rat:
      return "Q";
  }
  return "?";
}

Scalar CoeffDomain::reduce(const Scalar& x) const {
  if (kind_ == CoeffKind::Rat) {
    return x;
  }
  mpz_class num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class r;
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus_.get_mpz_t()) == 0) {
      throw Error("denominator " + den.get_str() + " is not invertible in " + name());
    }
    num *= inv;
  }
  mpz_fdiv_r(r.get_mpz_t(), num.get_mpz_t(), modulus_.get_mpz_t());
  return Scalar(r);
}

bool CoeffDomain::is_unit(const Scalar& a) const {
  if (kind_ == CoeffKind::Rat) {
    return sgn(a) != 0;
  }
  mpz_class g;
  const mpz_class v = reduce(a).get_num();
  mpz_gcd(g.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
  return g == 1;
}

std::optional<Scalar> CoeffDomain::inverse(const Scalar& a) const {
  if (!is_unit(a)) {
    return std::nullopt;
  }
  if (kind_ == CoeffKind::Rat) {
    return Scalar(1) / a;
  }
  mpz_class inv;
  const mpz_class v = reduce(a).get_num();
  mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), modulus_.get_mpz_t());
  return Scalar(inv);
}

Scalar CoeffDomain::parse_scalar(std::string_view text) const {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return reduce(Scalar(parse_integer(text)));
  }
  const mpz_class num = parse_integer(text.substr(0, slash));
  const mpz_class den = parse_integer(text.substr(slash + 1));
  if (den == 0) {
    throw Error("zero denominator in '" + std::string(text) + "'");
  }
  Scalar q(num, den);
  q.canonicalize();
  return reduce(q);
}

std::string CoeffDomain::format(const Scalar& a) const {
  if (a.get_den() == 1) {
    return a.get_num().get_str();
  }
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

}  // namespace gradnil
