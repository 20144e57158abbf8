#include "knotflow/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <tuple>

namespace kf {

Laurent::Laurent(long c) {
  if (c != 0) t_.push_back({0, mpz_class(c)});
}

Laurent Laurent::mono(int e, const mpz_class& c) { return mono2(2 * e, c); }

Laurent Laurent::mono2(int e2, const mpz_class& c) {
  Laurent p;
  if (c != 0) p.t_.push_back({e2, c});
  return p;
}

Laurent Laurent::from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) { return a.e2 < b.e2; });
  Laurent p;
  for (auto& x : ts) {
    if (!p.t_.empty() && p.t_.back().e2 == x.e2)
      p.t_.back().c += x.c;
    else
      p.t_.push_back(std::move(x));
    if (p.t_.back().c == 0) p.t_.pop_back();
  }
  return p;
}

int Laurent::min_e2() const {
  if (t_.empty()) throw InvalidArgs("min_e2 of zero polynomial");
  return t_.front().e2;
}

int Laurent::max_e2() const {
  if (t_.empty()) throw InvalidArgs("max_e2 of zero polynomial");
  return t_.back().e2;
}

mpz_class Laurent::coeff2(int e2) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), e2, [](const Term& a, int e) { return a.e2 < e; });
  if (it != t_.end() && it->e2 == e2) return it->c;
  return 0;
}

Laurent Laurent::operator-() const {
  Laurent p = *this;
  for (auto& x : p.t_) x.c = -x.c;
  return p;
}

// merge with sign
static std::vector<Laurent::Term> merge(const std::vector<Laurent::Term>& a,
                                        const std::vector<Laurent::Term>& b, bool sub) {
  std::vector<Laurent::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].e2 < b[j].e2)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].e2 < a[i].e2) {
      out.push_back({b[j].e2, sub ? mpz_class(-b[j].c) : b[j].c});
      ++j;
    } else {
      mpz_class c = sub ? mpz_class(a[i].c - b[j].c) : mpz_class(a[i].c + b[j].c);
      if (c != 0) out.push_back({a[i].e2, std::move(c)});
      ++i, ++j;
    }
  }
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  t_ = merge(t_, o.t_, false);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  t_ = merge(t_, o.t_, true);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent p;
  if (a.is_zero() || b.is_zero()) return p;
  if (a.t_.size() == 1 && b.t_.size() == 1) {
    p.t_.push_back({a.t_[0].e2 + b.t_[0].e2, a.t_[0].c * b.t_[0].c});
    return p;
  }
  bool even = true;
  for (auto& x : a.t_) even = even && x.e2 % 2 == 0;
  for (auto& x : b.t_) even = even && x.e2 % 2 == 0;
  int step = even ? 2 : 1;
  int lo = a.t_.front().e2 + b.t_.front().e2;
  int hi = a.t_.back().e2 + b.t_.back().e2;
  std::vector<mpz_class> acc((hi - lo) / step + 1);
  for (auto& x : a.t_)
    for (auto& y : b.t_) {
      mpz_class& z = acc[(x.e2 + y.e2 - lo) / step];
      mpz_addmul(z.get_mpz_t(), x.c.get_mpz_t(), y.c.get_mpz_t());
    }
  for (size_t k = 0; k < acc.size(); ++k)
    if (acc[k] != 0) p.t_.push_back({lo + int(k) * step, std::move(acc[k])});
  return p;
}

Laurent Laurent::shift2(int e2) const {
  Laurent p = *this;
  for (auto& x : p.t_) x.e2 += e2;
  return p;
}

Laurent Laurent::subs(int k) const {
  if (k == 0) return Laurent::mono(0, at_one());
  Laurent p = *this;
  for (auto& x : p.t_) x.e2 *= k;
  if (k < 0) std::reverse(p.t_.begin(), p.t_.end());
  return p;
}

mpz_class Laurent::at_one() const {
  mpz_class s = 0;
  for (auto& x : t_) s += x.c;
  return s;
}

Laurent Laurent::pow(unsigned k) const {
  Laurent r(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

std::string half_str(int k2) {
  if (k2 % 2 == 0) return std::to_string(k2 / 2);
  return std::to_string(k2) + "/2";
}

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < t_.size(); ++i) {
    if (i) s += " + ";
    int p = t_[i].e2, q = 2;
    if (p % 2 == 0) p /= 2, q = 1;
    s += t_[i].c.get_str() + "*t^(" + std::to_string(p) + "/" + std::to_string(q) + ")";
  }
  return s;
}

static std::string tpow(int e2) {
  if (e2 == 2) return "t";
  if (e2 % 2 == 0) return "t^" + std::to_string(e2 / 2);
  return "t^(" + std::to_string(e2) + "/2)";
}

std::string Laurent::pretty() const {
  if (t_.empty()) return "0";
  std::vector<const Term*> order;
  for (auto& x : t_) order.push_back(&x);
  std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    int aa = std::abs(a->e2), bb = std::abs(b->e2);
    if (aa != bb) return aa < bb;
    return a->e2 > b->e2;
  });
  std::string s;
  bool first = true;
  for (const Term* x : order) {
    mpz_class a = abs(x->c);
    bool neg = x->c < 0;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    if (x->e2 == 0)
      s += a.get_str();
    else if (a == 1)
      s += tpow(x->e2);
    else
      s += a.get_str() + "*" + tpow(x->e2);
  }
  return s;
}

Laurent Laurent::parse(const std::string& s) {
  if (s == "0") return Laurent();
  std::vector<Term> ts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t end = s.find(" + ", pos);
    std::string tok = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end + 3;
    size_t star = tok.find("*t^(");
    size_t slash = tok.find('/', star);
    if (star == std::string::npos || slash == std::string::npos || tok.back() != ')')
      throw InvalidArgs("bad term: " + tok);
    mpz_class c(tok.substr(0, star));
    int p = std::stoi(tok.substr(star + 4, slash - star - 4));
    int q = std::stoi(tok.substr(slash + 1, tok.size() - slash - 2));
    if (q == 1)
      ts.push_back({2 * p, c});
    else if (q == 2 && p % 2 != 0)
      ts.push_back({p, c});
    else
      throw InvalidArgs("bad exponent: " + tok);
  }
  return from_terms(std::move(ts));
}

std::ostream& operator<<(std::ostream& os, const Laurent& p) { return os << p.pretty(); }

std::optional<Unit> equal_up_to_unit(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return Unit{};
    return std::nullopt;
  }
  if (a.terms().size() != b.terms().size()) return std::nullopt;
  Unit u;
  u.k2 = a.min_e2() - b.min_e2();
  const mpz_class &ca = a.terms()[0].c, &cb = b.terms()[0].c;
  if (ca == cb)
    u.eps = 1;
  else if (ca == -cb)
    u.eps = -1;
  else
    return std::nullopt;
  if (apply_unit(u, b) == a) return u;
  return std::nullopt;
}

Laurent apply_unit(const Unit& u, const Laurent& p) {
  Laurent r = p.shift2(u.k2);
  return u.eps < 0 ? -r : r;
}

Laurent exact_divide(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw NotDivisible("division by zero");
  Laurent q, rem = a;
  if (a.is_zero()) return q;
  const int bmax = b.max_e2(), lowest = a.min_e2() - b.min_e2();
  const mpz_class& lc = b.terms().back().c;
  std::vector<Laurent::Term> qt;
  while (!rem.is_zero()) {
    const auto& top = rem.terms().back();
    int e2 = top.e2 - bmax;
    if (e2 < lowest || !mpz_divisible_p(top.c.get_mpz_t(), lc.get_mpz_t()))
      throw NotDivisible("not divisible: " + a.str() + " / " + b.str());
    Laurent m = Laurent::mono2(e2, top.c / lc);
    qt.push_back({e2, top.c / lc});
    rem -= m * b;
  }
  return Laurent::from_terms(std::move(qt));
}

Laurent qint(int m, int s) {
  if (m < 0) throw InvalidArgs("qint: m < 0");
  std::vector<Laurent::Term> ts;
  for (int i = 0; i < m; ++i) ts.push_back({2 * i * s, 1});
  return Laurent::from_terms(std::move(ts));
}

Laurent qfact(int m, int s) {
  Laurent r(1);
  for (int i = 1; i <= m; ++i) r = r * qint(i, s);
  return r;
}

// q-Pascal: [m,k] = [m-1,k-1] + q^k [m-1,k]
static const Laurent& qbinom_pos(int m, int k) {
  static std::map<std::pair<int, int>, Laurent> memo;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto key = std::make_pair(m, k);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  Laurent v;
  if (k == 0 || k == m)
    v = Laurent(1);
  else
    v = qbinom_pos(m - 1, k - 1) + qbinom_pos(m - 1, k).shift(k);
  return memo.emplace(key, std::move(v)).first->second;
}

Laurent qbinom(int m, int k, int s) {
  if (m < 0 || k < 0 || k > m) throw InvalidArgs("qbinom: need 0 <= k <= m");
  const Laurent& p = qbinom_pos(m, k);
  return s > 0 ? p : p.subs(-1);
}

Series Series::constant(int D, const mpq_class& c) {
  Series s(D);
  s.c_[0] = c;
  return s;
}

Series& Series::operator+=(const Series& o) {
  for (int j = 0; j <= std::min(order(), o.order()); ++j) c_[j] += o.c_[j];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  for (int j = 0; j <= std::min(order(), o.order()); ++j) c_[j] -= o.c_[j];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  int D = std::min(a.order(), b.order());
  Series r(D);
  for (int i = 0; i <= D; ++i)
    for (int j = 0; i + j <= D; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  return r;
}

Series Series::inverse() const {
  if (c_[0] == 0) throw InvalidArgs("series with zero constant term is not invertible");
  Series r(order());
  r.c_[0] = 1 / c_[0];
  for (int j = 1; j <= order(); ++j) {
    mpq_class s = 0;
    for (int i = 1; i <= j; ++i) s += c_[i] * r.c_[j - i];
    r.c_[j] = -s / c_[0];
  }
  return r;
}

std::string Series::str() const {
  std::ostringstream os;
  for (int j = 0; j <= order(); ++j) os << (j ? ", " : "") << c_[j].get_str();
  return "[" + os.str() + "]";
}

Series exp_substitute(const Laurent& p, const mpq_class& scale, int D) {
  if (D < 0) throw InvalidArgs("exp_substitute: D < 0");
  Series s(D);
  mpq_class sc = scale;
  sc.canonicalize();
  for (auto& t : p.terms()) {
    mpq_class x(t.e2, 2);
    x.canonicalize();
    x *= sc;
    mpq_class term = t.c;
    for (int j = 0; j <= D; ++j) {
      s[j] += term;
      term = term * x / (j + 1);
    }
  }
  return s;
}

}  // namespace kf
