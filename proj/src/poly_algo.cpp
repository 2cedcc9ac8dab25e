#include "phframe/poly_algo.hpp"

#include "phframe/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <set>

namespace phframe {

Rat content(const QPoly& p) {
  if (p.is_zero()) return Rat(0);
  Int num_gcd(0);
  Int den_lcm(1);
  for (const auto& c : p.coeffs()) {
    if (is_zero(c)) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat r(num_gcd, den_lcm);
  r.canonicalize();
  return r;
}

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return {};
  Rat c = content(p);
  if (sgn(p.lead()) < 0) c = -c;
  return p * Rat(1 / c);
}

std::vector<GaussRat> taylor_shift(const CPoly& p, const GaussRat& z) {
  std::vector<GaussRat> a = p.coeffs();
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) a[j] += z * a[j + 1];
  }
  return a;
}

std::vector<GaussRat> taylor_shift(const QPoly& p, const GaussRat& z) { return taylor_shift(to_complex(p), z); }

CPoly substitute_shift(const CPoly& p, const GaussRat& z) { return CPoly(taylor_shift(p, z)); }

QPoly substitute_shift(const QPoly& p, const Rat& z) {
  std::vector<Rat> a = p.coeffs();
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) a[j] += z * a[j + 1];
  }
  return QPoly(std::move(a));
}

std::vector<SquarefreeFactor> squarefree_decomposition(const QPoly& p) {
  std::vector<SquarefreeFactor> out;
  if (p.is_constant()) return out;
  const QPoly f = p.monic();
  const QPoly df = f.derivative();
  QPoly a = gcd(f, df);
  QPoly b = exact_div(f, a);
  QPoly c = exact_div(df, a);
  QPoly d = c - b.derivative();
  unsigned i = 1;
  while (!b.is_constant()) {
    QPoly g = gcd(b, d);
    if (!g.is_constant()) out.push_back({g, i});
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

std::optional<Rat> rational_sqrt(const Rat& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(x.get_num().get_mpz_t()) || !mpz_perfect_square_p(x.get_den().get_mpz_t())) {
    return std::nullopt;
  }
  Int n = sqrt(x.get_num());
  Int d = sqrt(x.get_den());
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::optional<QPoly> perfect_square_test(const QPoly& p) {
  if (p.is_zero()) return QPoly{};
  auto lead_root = rational_sqrt(p.lead());
  if (!lead_root) return std::nullopt;
  QPoly s = QPoly::constant(*lead_root);
  for (const auto& [factor, mult] : squarefree_decomposition(p)) {
    if (mult % 2 != 0) return std::nullopt;
    s *= pow(factor, mult / 2);
  }
  return s;
}

bool FactoredDenominator::conjugate_closed() const {
  for (const auto& f : factors) {
    if (f.root.is_real()) continue;
    unsigned here = 0;
    unsigned mirrored = 0;
    for (const auto& g : factors) {
      if (g.root == f.root) here += g.multiplicity;
      if (g.root == f.root.conj()) mirrored += g.multiplicity;
    }
    if (here != mirrored) return false;
  }
  return true;
}

unsigned FactoredDenominator::degree() const {
  unsigned d = 0;
  for (const auto& f : factors) d += f.multiplicity;
  return d;
}

QPoly expand_factored(const FactoredDenominator& fd) {
  if (is_zero(fd.unit)) throw ValidationError("denominator unit must be nonzero");
  for (const auto& f : fd.factors) {
    if (f.multiplicity == 0) throw ValidationError("root multiplicity must be positive");
  }
  if (!fd.conjugate_closed()) throw ValidationError("denominator roots are not closed under complex conjugation");
  CPoly acc = CPoly::constant(GaussRat(fd.unit));
  for (const auto& f : fd.factors) {
    acc *= pow(CPoly{-f.root, GaussRat(1)}, f.multiplicity);
  }
  if (!is_real(acc)) throw ValidationError("denominator expansion is not real");
  return real_part(acc);
}

namespace {

// Positive divisors of |n|, n != 0. Trial division is fine for the constant
// and leading coefficients of the squarefree parts seen in practice.
std::vector<Int> divisors(Int n) {
  n = abs(n);
  std::vector<std::pair<Int, unsigned>> primes;
  Int p(2);
  while (p * p <= n) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
    p += (p == 2) ? 1 : 2;
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<Int> out{Int(1)};
  for (const auto& [prime, e] : primes) {
    const std::size_t base = out.size();
    Int pk(1);
    for (unsigned k = 1; k <= e; ++k) {
      pk *= prime;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<Rat, unsigned>> rational_roots(const QPoly& p) {
  std::vector<std::pair<Rat, unsigned>> out;
  if (p.is_constant()) return out;
  QPoly rest = p.monic();
  // Multiplicity of the root 0 first, then candidates from the squarefree part.
  unsigned zero_mult = 0;
  while (!rest.is_zero() && is_zero(rest[0])) {
    rest = exact_div(rest, QPoly::t());
    ++zero_mult;
  }
  if (zero_mult) out.emplace_back(Rat(0), zero_mult);
  if (rest.is_constant()) return out;

  QPoly sqfree = primitive_part(exact_div(rest, gcd(rest, rest.derivative())));
  Int a0 = sqfree[0].get_num();
  Int an = sqfree.lead().get_num();
  std::set<Rat> candidates;
  for (const auto& num : divisors(a0)) {
    for (const auto& den : divisors(an)) {
      Rat c(num, den);
      c.canonicalize();
      candidates.insert(c);
      candidates.insert(Rat(-c));
    }
  }
  for (const auto& c : candidates) {
    if (!is_zero(sqfree(c))) continue;
    const QPoly lin{Rat(-c), Rat(1)};
    unsigned mult = 0;
    while (divides(lin, rest)) {
      rest = exact_div(rest, lin);
      ++mult;
    }
    out.emplace_back(c, mult);
  }
  return out;
}

namespace {

// Best rational approximation with denominator at most max_den (continued fractions).
Rat approximate(long double x, long max_den) {
  long double frac = x;
  Int h0(0), h1(1), k0(1), k1(0);
  for (int step = 0; step < 64; ++step) {
    long double fl = std::floor(frac);
    Int a(static_cast<double>(fl));
    Int h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    long double rem = frac - fl;
    if (rem < 1e-15L) break;
    frac = 1 / rem;
  }
  if (sgn(k1) == 0) return Rat(Int(static_cast<double>(std::round(x))));
  Rat r(h1, k1);
  r.canonicalize();
  return r;
}

// Approximate complex roots of a monic polynomial (Durand-Kerner).
std::vector<std::complex<long double>> approximate_roots(const QPoly& monic) {
  using Cx = std::complex<long double>;
  const std::size_t n = monic.degree().value();
  std::vector<long double> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[k] = static_cast<long double>(monic[k].get_d());
  auto eval = [&](Cx z) {
    Cx acc = 0;
    for (std::size_t k = n + 1; k-- > 0;) acc = acc * z + c[k];
    return acc;
  };
  std::vector<Cx> z(n);
  for (std::size_t k = 0; k < n; ++k) z[k] = std::pow(Cx(0.4L, 0.9L), static_cast<long double>(k));
  for (int iter = 0; iter < 2000; ++iter) {
    long double change = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Cx den = 1;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) den *= z[k] - z[j];
      }
      if (std::abs(den) == 0) continue;
      Cx delta = eval(z[k]) / den;
      z[k] -= delta;
      change = std::max(change, std::abs(delta));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

// Monic quadratic factors t^2 + c t + d of a squarefree polynomial without
// rational roots whose roots lie in Q(i). Candidates come from numerical
// roots; each is confirmed by exact division.
std::vector<QPoly> gaussian_quadratics(QPoly f) {
  std::vector<QPoly> found;
  for (const auto& z : approximate_roots(f.monic())) {
    if (z.imag() <= 0) continue;
    for (long max_den : {1000L, 1000000L}) {
      Rat c = approximate(-2 * z.real(), max_den);
      Rat d = approximate(std::norm(z), max_den);
      QPoly q{d, c, Rat(1)};
      Rat disc = c * c - 4 * d;
      if (sgn(disc) >= 0 || !rational_sqrt(Rat(-disc))) continue;
      if (q.degree_or(0) <= f.degree_or(0) && divides(q, f)) {
        found.push_back(q);
        f = exact_div(f, q);
        break;
      }
    }
  }
  return found;
}

}  // namespace

GaussianFactorization factor_over_gaussian(const QPoly& p) {
  if (p.is_zero()) throw ValidationError("cannot factor the zero polynomial");
  GaussianFactorization out;
  out.factored.unit = p.lead();
  QPoly rest = p.monic();
  for (const auto& [root, mult] : rational_roots(rest)) {
    out.factored.factors.push_back({GaussRat(root), mult});
    rest = exact_div(rest, pow(QPoly{Rat(-root), Rat(1)}, mult));
  }
  for (const auto& [factor, mult] : squarefree_decomposition(rest)) {
    QPoly remaining = factor;
    for (const auto& q : gaussian_quadratics(factor)) {
      // t^2 + b t + c with roots -b/2 +- i sqrt(4c - b^2)/2.
      const Rat b = q[1];
      const Rat c = q[0];
      Rat im = *rational_sqrt(Rat(4 * c - b * b)) / 2;
      Rat re = -b / 2;
      out.factored.factors.push_back({GaussRat(re, im), mult});
      out.factored.factors.push_back({GaussRat(re, Rat(-im)), mult});
      remaining = exact_div(remaining, q);
    }
    if (!remaining.is_constant()) out.unresolved.push_back(pow(remaining, mult));
  }
  return out;
}

namespace {

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    QPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

std::size_t sign_variations(const std::vector<QPoly>& seq, const Rat& x) {
  std::size_t v = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

QPoly squarefree_part(const QPoly& p) { return exact_div(p, gcd(p, p.derivative())); }

}  // namespace

std::size_t count_real_roots(const QPoly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
  if (p.is_constant() || a > b) return 0;
  QPoly q = squarefree_part(p);
  auto seq = sturm_sequence(q);
  std::size_t n = sign_variations(seq, a) - sign_variations(seq, b);
  if (is_zero(q(a))) ++n;
  return n;
}

std::vector<RealRootLocation> locate_real_roots(const QPoly& p, const Rat& a, const Rat& b, const Rat& tol) {
  std::vector<RealRootLocation> out;
  if (p.is_zero()) throw std::domain_error("zero polynomial has infinitely many roots");
  if (p.is_constant() || a > b) return out;
  // Rational roots are reported exactly and divided out, so the bisection
  // below never lands on a root.
  QPoly q = squarefree_part(p).monic();
  for (const auto& [root, mult] : rational_roots(q)) {
    if (root >= a && root <= b) out.push_back({root, root});
    q = exact_div(q, QPoly{Rat(-root), Rat(1)});
  }
  if (!q.is_constant()) {
    auto seq = sturm_sequence(q);
    // Roots in the half-open interval (lo, hi].
    std::vector<std::pair<Rat, Rat>> work{{a, b}};
    while (!work.empty()) {
      auto [lo, hi] = work.back();
      work.pop_back();
      std::size_t n = sign_variations(seq, lo) - sign_variations(seq, hi);
      if (n == 0) continue;
      if (n == 1 && hi - lo <= tol) {
        out.push_back({lo, hi});
        continue;
      }
      Rat mid = (lo + hi) / 2;
      work.emplace_back(lo, mid);
      work.emplace_back(mid, hi);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  return out;
}

}  // namespace phframe
