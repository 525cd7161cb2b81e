#include "gencat/errors.hpp"
#include "gencat/roots.hpp"

namespace gencat {

namespace {

// Sign of p at +infinity (at_plus) or -infinity.
int sign_at_infinity(const Poly& p, bool at_plus) {
  const int s = p.leading().sign();
  if (at_plus || p.degree() % 2 == 0) return s;
  return -s;
}

int sign_changes(const std::vector<Poly>& seq, bool at_plus) {
  int changes = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sign_at_infinity(p, at_plus);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  Poly next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    Poly rem = divmod(seq[seq.size() - 2], seq.back()).second;
    next = -rem;
  }
  return seq;
}

RealRootCount sturm_real_root_count(const Poly& p) {
  if (p.is_zero()) throw DomainError("real root count of the zero polynomial is undefined");
  const Poly g = gcd(p, p.derivative());
  const Poly squarefree = divmod(p, g).first;
  const auto seq = sturm_sequence(squarefree);
  RealRootCount out;
  out.distinct_roots = squarefree.degree();
  out.real_roots = sign_changes(seq, false) - sign_changes(seq, true);
  return out;
}

}  // namespace gencat
