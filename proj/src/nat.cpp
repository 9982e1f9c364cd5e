#include "binom/nat.hpp"

#include <cctype>

namespace binom {

std::optional<Nat> Nat::parse(std::string_view text) {
  int base = 10;
  if (text.size() > 2 && (text.substr(0, 2) == "0x" || text.substr(0, 2) == "0X")) {
    base = 16;
    text.remove_prefix(2);
  }
  if (text.empty()) return std::nullopt;
  for (char c : text) {
    bool ok = base == 10 ? std::isdigit(static_cast<unsigned char>(c))
                         : std::isxdigit(static_cast<unsigned char>(c));
    if (!ok) return std::nullopt;
  }
  mpz_class v;
  if (mpz_set_str(v.get_mpz_t(), std::string(text).c_str(), base) != 0)
    return std::nullopt;
  return Nat(std::move(v));
}

Nat DigitsBaseP::value() const {
  Nat acc = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it)
    acc = acc * base + *it;
  return acc;
}

Nat isqrt(const Nat& n) {
  if (n < 2) return n;
  // Newton iteration from above: x₀ ≥ √n, and the sequence decreases until
  // it stabilizes at ⌊√n⌋ or oscillates one step past it.
  mpz_class x = 1;
  mpz_mul_2exp(x.get_mpz_t(), x.get_mpz_t(),
               static_cast<mp_bitcnt_t>((n.bit_length() + 1) / 2 + 1));
  const mpz_class& v = n.mpz();
  while (true) {
    mpz_class y = (x + v / x) / 2;
    if (y >= x) break;
    x = std::move(y);
  }
  while (x * x > v) --x;
  while ((x + 1) * (x + 1) <= v) ++x;
  return Nat(std::move(x));
}

Nat binomial_exact(const Nat& r, const Nat& s, WorkMeter& meter) {
  if (s > r) return 0;
  Nat k = std::min(s, r - s);  // symmetry halves the factor count
  if (k.is_zero()) return 1;
  // acc after step i equals C(r - k + i, i): multiply by the next numerator
  // factor, then divide by i; the division is exact at every step.
  mpz_class acc = 1;
  const mpz_class base = r.mpz() - k.mpz();
  for (mpz_class i = 1; i <= k.mpz(); ++i) {
    meter.charge_mul();
    acc *= base + i;
    mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), i.get_mpz_t());
  }
  return Nat(std::move(acc));
}

Nat binomial_exact(const Nat& r, const Nat& s) {
  WorkMeter meter;
  return binomial_exact(r, s, meter);
}

Nat binomial_mod_exact(const Nat& r, const Nat& s, const Nat& m,
                       WorkMeter& meter) {
  if (m.is_zero()) throw ZeroModulus("binomial_mod_exact: modulus is zero");
  return binomial_exact(r, s, meter) % m;
}

Nat binomial_mod_exact(const Nat& r, const Nat& s, const Nat& m) {
  WorkMeter meter;
  return binomial_mod_exact(r, s, m, meter);
}

DigitsBaseP digits_base_p(const Nat& n, const Nat& p) {
  if (p < 2) throw BadBase("digits_base_p: base must be at least 2");
  DigitsBaseP out;
  out.base = p;
  if (n.is_zero()) {
    out.digits.push_back(0);
    return out;
  }
  mpz_class rest = n.mpz();
  mpz_class q, r;
  while (rest != 0) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(),
                p.mpz().get_mpz_t());
    out.digits.emplace_back(Nat(r));
    rest = q;
  }
  return out;
}

}  // namespace binom
