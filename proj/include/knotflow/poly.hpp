#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kf {

struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidArgs : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Laurent polynomial in one variable t with exponents in (1/2)Z and big
// integer coefficients.  Exponents are stored doubled.
class Laurent {
 public:
  struct Term {
    int e2;  // twice the exponent
    mpz_class c;
    bool operator==(const Term& o) const { return e2 == o.e2 && c == o.c; }
  };

  Laurent() = default;
  Laurent(long c);  // NOLINT: constants convert implicitly
  static Laurent mono(int e, const mpz_class& c = 1);
  static Laurent mono2(int e2, const mpz_class& c = 1);
  static Laurent from_terms(std::vector<Term> ts);

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_[0].e2 == 0 && t_[0].c == 1; }
  int min_e2() const;
  int max_e2() const;
  mpz_class coeff2(int e2) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  bool operator==(const Laurent& o) const { return t_ == o.t_; }

  Laurent shift(int e) const { return shift2(2 * e); }  // times t^e
  Laurent shift2(int e2) const;
  Laurent subs(int k) const;  // t -> t^k
  Laurent inverted() const { return subs(-1); }
  mpz_class at_one() const;
  Laurent pow(unsigned k) const;

  std::string str() const;     // canonical: ascending c*t^(p/q)
  std::string pretty() const;  // human form, e.g. 3 - t - t^-1
  static Laurent parse(const std::string& s);  // canonical form

 private:
  std::vector<Term> t_;  // ascending e2, no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const Laurent& p);

// c*t^(k2/2), c = +-1
struct Unit {
  int eps = 1;
  int k2 = 0;
  bool operator==(const Unit&) const = default;
};
std::optional<Unit> equal_up_to_unit(const Laurent& a, const Laurent& b);
Laurent apply_unit(const Unit& u, const Laurent& p);
std::string half_str(int k2);  // "3", "-1/2"

Laurent exact_divide(const Laurent& a, const Laurent& b);

// (m)_q for q = t^s, s = +-1
Laurent qint(int m, int s = 1);
Laurent qfact(int m, int s = 1);
Laurent qbinom(int m, int k, int s = 1);

// Power series in h truncated after h^D, rational coefficients.
class Series {
 public:
  explicit Series(int D = 0) : c_(D + 1) {}
  static Series constant(int D, const mpq_class& c);
  int order() const { return int(c_.size()) - 1; }
  const mpq_class& operator[](int j) const { return c_[j]; }
  mpq_class& operator[](int j) { return c_[j]; }
  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  bool operator==(const Series& o) const { return c_ == o.c_; }
  Series inverse() const;
  std::string str() const;

 private:
  std::vector<mpq_class> c_;
};

// t -> exp(scale*h), truncated at h^D
Series exp_substitute(const Laurent& p, const mpq_class& scale, int D);

}  // namespace kf
