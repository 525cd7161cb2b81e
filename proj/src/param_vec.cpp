#include "gencat/param_vec.hpp"

#include "gencat/errors.hpp"

namespace gencat {

ParamVec::ParamVec(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) throw DomainError("parameter vector must have a nonzero entry (a_r != 0)");
}

ParamVec ParamVec::parse(std::string_view csv) {
  std::vector<Rational> v;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    std::string_view item = csv.substr(start, comma == std::string_view::npos ? csv.npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    v.push_back(Rational::parse(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return ParamVec(std::move(v));
}

ParamVec ParamVec::from_poly(const Poly& p) {
  if (!p.coeff(0).is_zero() || p.coeff(1) != Rational(1)) {
    throw DomainError("polynomial is not of the form w - a_2 w^2 - ...: " + p.to_string());
  }
  if (p.degree() < 2) throw DomainError("identity polynomial w has no parameter vector");
  std::vector<Rational> v;
  for (int j = 2; j <= p.degree(); ++j) v.push_back(-p.coeff(static_cast<std::size_t>(j)));
  return ParamVec(std::move(v));
}

Rational ParamVec::a(std::size_t j) const {
  if (j < 2 || j - 2 >= coeffs_.size()) return Rational(0);
  return coeffs_[j - 2];
}

Poly ParamVec::poly() const {
  std::vector<Rational> c(coeffs_.size() + 2);
  c[1] = Rational(1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + 2] = -coeffs_[i];
  return Poly(std::move(c));
}

std::vector<std::string> ParamVec::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_string());
  return out;
}

std::string ParamVec::to_string() const {
  std::string out;
  for (const auto& s : to_strings()) {
    if (!out.empty()) out += ",";
    out += s;
  }
  return out;
}

}  // namespace gencat
