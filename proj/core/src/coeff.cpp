#include "dra/coeff.hpp"

#include <algorithm>
#include <numeric>

namespace dra {

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

bool ThetaPoly::GrlexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

ThetaPoly ThetaPoly::constant(int n, const Rat& q) {
  ThetaPoly p(n);
  if (q != 0) p.terms.emplace(std::vector<int>(n, 0), q);
  return p;
}

ThetaPoly ThetaPoly::theta(int k, int n) {
  if (k < 1 || k > n) throw Error("theta index out of range");
  ThetaPoly p(n);
  std::vector<int> e(n, 0);
  e[k - 1] = 1;
  p.terms.emplace(std::move(e), Rat(1));
  return p;
}

int ThetaPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, q] : terms) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void ThetaPoly::add_term(const std::vector<int>& e, const Rat& q) {
  if (q == 0) return;
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, q);
  } else {
    it->second += q;
    if (it->second == 0) terms.erase(it);
  }
}

ThetaPoly ThetaPoly::operator+(const ThetaPoly& o) const {
  if (n != o.n) throw Error("poly dimension mismatch");
  ThetaPoly r = *this;
  for (const auto& [e, q] : o.terms) r.add_term(e, q);
  return r;
}

ThetaPoly ThetaPoly::operator-(const ThetaPoly& o) const {
  if (n != o.n) throw Error("poly dimension mismatch");
  ThetaPoly r = *this;
  for (const auto& [e, q] : o.terms) r.add_term(e, -q);
  return r;
}

ThetaPoly ThetaPoly::operator*(const ThetaPoly& o) const {
  if (n != o.n) throw Error("poly dimension mismatch");
  ThetaPoly r(n);
  std::vector<int> e(n);
  for (const auto& [e1, q1] : terms)
    for (const auto& [e2, q2] : o.terms) {
      for (int k = 0; k < n; ++k) e[k] = e1[k] + e2[k];
      r.add_term(e, q1 * q2);
    }
  return r;
}

ThetaPoly ThetaPoly::operator-() const {
  ThetaPoly r = *this;
  for (auto& [e, q] : r.terms) q = -q;
  return r;
}

ThetaPoly ThetaPoly::scaled(const Rat& q) const {
  if (q == 0) return ThetaPoly(n);
  ThetaPoly r = *this;
  for (auto& [e, c] : r.terms) c *= q;
  return r;
}

ThetaPoly ThetaPoly::substitute(const std::vector<ThetaPoly>& images) const {
  if (static_cast<int>(images.size()) != n) throw Error("substitute: wrong image count");
  ThetaPoly r(n);
  for (const auto& [e, q] : terms) {
    ThetaPoly t = ThetaPoly::constant(n, q);
    for (int k = 0; k < n; ++k)
      for (int p = 0; p < e[k]; ++p) t = t * images[k];
    r = r + t;
  }
  return r;
}

ThetaPoly ThetaPoly::shifted(const Weight& lambda) const {
  if (lambda.n() != n) throw Error("shifted: dimension mismatch");
  if (lambda.is_zero()) return *this;
  std::vector<ThetaPoly> images;
  images.reserve(n);
  for (int k = 1; k <= n; ++k)
    images.push_back(ThetaPoly::theta(k, n) + ThetaPoly::constant(n, Rat(lambda.c[k - 1])));
  return substitute(images);
}

ThetaPoly ThetaPoly::weyl(const std::vector<int>& perm) const {
  ThetaPoly r(n);
  std::vector<int> e(n);
  for (const auto& [e1, q] : terms) {
    for (int k = 0; k < n; ++k) e[perm[k] - 1] = e1[k];
    r.add_term(e, q);
  }
  return r;
}

std::vector<Rat> ThetaPoly::on_ray(const std::vector<Rat>& ray) const {
  if (static_cast<int>(ray.size()) != n) throw Error("on_ray: wrong ray length");
  std::vector<Rat> out(total_degree() + 1, Rat(0));
  for (const auto& [e, q] : terms) {
    Rat v = q;
    int d = 0;
    for (int k = 0; k < n; ++k) {
      d += e[k];
      for (int p = 0; p < e[k]; ++p) v *= ray[k];
    }
    out[d] += v;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Raw factors; normalization (with unit compensation) happens where they
// enter a denominator.
LinearFactor LinearFactor::theta_diff(int i, int j, long cst, int n) {
  LinearFactor f(n);
  f.a[i - 1] += 1;
  f.a[j - 1] -= 1;
  f.c = cst;
  return f;
}

LinearFactor LinearFactor::from_weight(const Weight& lambda, const Rat& cst) {
  LinearFactor f(lambda.n());
  for (int k = 0; k < lambda.n(); ++k) f.a[k] = lambda.c[k];
  f.c = cst;
  return f;
}

bool LinearFactor::is_valid() const {
  return std::any_of(a.begin(), a.end(), [](long v) { return v != 0; });
}

Rat LinearFactor::normalize() {
  if (!is_valid()) throw Error("constant linear factor");
  long g = 0;
  for (long v : a) g = std::gcd(g, std::abs(v));
  long lead = 0;
  for (long v : a)
    if (v != 0) { lead = v; break; }
  long div = (lead > 0) ? g : -g;
  for (long& v : a) v /= div;
  c /= Rat(div);
  return Rat(div);
}

ThetaPoly LinearFactor::as_poly() const {
  ThetaPoly p(n);
  for (int k = 0; k < n; ++k)
    if (a[k] != 0) {
      std::vector<int> e(n, 0);
      e[k] = 1;
      p.add_term(e, Rat(a[k]));
    }
  p.add_term(std::vector<int>(n, 0), c);
  return p;
}

LinearFactor LinearFactor::shifted(const Weight& lambda) const {
  LinearFactor f = *this;
  for (int k = 0; k < n; ++k) f.c += Rat(a[k]) * Rat(lambda.c[k]);
  return f;
}

bool LinearFactor::operator<(const LinearFactor& o) const {
  if (a != o.a) return a < o.a;
  return c < o.c;
}

namespace {

// Evaluate p at a point on the hyperplane f = 0; a nonzero value proves that
// f does not divide p, which makes the common failing case cheap.
bool vanishes_on_sample(const ThetaPoly& p, const LinearFactor& f, int pivot, long seed) {
  int n = p.n;
  std::vector<Rat> pt(n);
  Rat acc = -f.c;
  for (int k = 0; k < n; ++k) {
    if (k == pivot) continue;
    pt[k] = Rat(((seed * (k + 7)) % 23) + 2);
    acc -= Rat(f.a[k]) * pt[k];
  }
  pt[pivot] = acc / Rat(f.a[pivot]);
  Rat value(0);
  for (const auto& [e, q] : p.terms) {
    Rat term = q;
    for (int k = 0; k < n; ++k)
      for (int d = 0; d < e[k]; ++d) term *= pt[k];
    value += term;
  }
  return value == 0;
}

}  // namespace

std::optional<ThetaPoly> divide_by_linear(const ThetaPoly& p, const LinearFactor& f) {
  if (p.is_zero()) return p;
  int pivot = -1;
  for (int k = 0; k < f.n; ++k)
    if (f.a[k] != 0) { pivot = k; break; }
  if (pivot < 0) throw Error("divide_by_linear: invalid factor");
  if (!vanishes_on_sample(p, f, pivot, 5)) return std::nullopt;
  if (!vanishes_on_sample(p, f, pivot, 11)) return std::nullopt;
  Rat lead(f.a[pivot]);

  ThetaPoly rem = p, quot(p.n);
  ThetaPoly fpoly = f.as_poly();
  while (true) {
    // highest theta_pivot degree present
    int dmax = 0;
    for (const auto& [e, q] : rem.terms) dmax = std::max(dmax, e[pivot]);
    if (dmax == 0) break;
    ThetaPoly top(p.n);
    for (const auto& [e, q] : rem.terms)
      if (e[pivot] == dmax) {
        auto e2 = e;
        e2[pivot] -= 1;
        top.add_term(e2, q / lead);
      }
    quot = quot + top;
    rem = rem - top * fpoly;
  }
  if (!rem.is_zero()) return std::nullopt;
  return quot;
}

CoeffFrac CoeffFrac::zero(int n) { return CoeffFrac(n); }

CoeffFrac CoeffFrac::one(int n) { return constant(n, Rat(1)); }

CoeffFrac CoeffFrac::constant(int n, const Rat& q) {
  CoeffFrac c(n);
  c.num_ = ThetaPoly::constant(n, q);
  c.canonicalize();
  return c;
}

CoeffFrac CoeffFrac::theta(int k, int n) { return from_poly(ThetaPoly::theta(k, n)); }

CoeffFrac CoeffFrac::h_var(int k, int n) {
  return from_poly(ThetaPoly::theta(k, n) + ThetaPoly::constant(n, Rat(k)));
}

CoeffFrac CoeffFrac::theta_diff(int i, int j, int n) {
  return from_poly(ThetaPoly::theta(i, n) - ThetaPoly::theta(j, n));
}

CoeffFrac CoeffFrac::from_poly(ThetaPoly p) {
  CoeffFrac c(p.n);
  c.num_ = std::move(p);
  c.canonicalize();
  return c;
}

CoeffFrac CoeffFrac::from_parts(ThetaPoly num, std::vector<LinearFactor> den, Rat scale) {
  CoeffFrac c(num.n);
  c.num_ = std::move(num);
  c.den_ = std::move(den);
  c.scale_ = std::move(scale);
  if (c.scale_ < 0) {
    c.scale_ = -c.scale_;
    c.num_ = -c.num_;
  }
  c.canonicalize();
  return c;
}

bool CoeffFrac::is_one() const {
  return den_.empty() && scale_ == 1 && num_ == ThetaPoly::constant(n_, Rat(1));
}

bool CoeffFrac::is_constant() const { return den_.empty() && num_.total_degree() == 0; }

Rat CoeffFrac::constant_value() const {
  if (!is_constant()) throw Error("constant_value on non-constant coefficient");
  if (num_.is_zero()) return Rat(0);
  return scale_ * num_.terms.begin()->second;
}

void CoeffFrac::canonicalize() {
  if (num_.is_zero()) {
    den_.clear();
    scale_ = 1;
    return;
  }
  // cancel denominator factors into the numerator where possible
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < den_.size(); ++i) {
      if (auto q = divide_by_linear(num_, den_[i])) {
        num_ = std::move(*q);
        den_.erase(den_.begin() + i);
        changed = true;
        break;
      }
    }
  }
  // extract content: make num primitive with integer coefficients
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& [e, q] : num_.terms) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (content != 1) {
    for (auto& [e, q] : num_.terms) {
      q /= content;
      q.canonicalize();
    }
    scale_ *= content;
  }
  if (scale_ < 0) {
    scale_ = -scale_;
    num_ = -num_;
  }
  std::sort(den_.begin(), den_.end());
}

CoeffFrac CoeffFrac::operator+(const CoeffFrac& o) const {
  if (n_ != o.n_) throw Error("coeff dimension mismatch");
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  // union denominator: max multiplicity of each factor
  std::vector<LinearFactor> uni = den_;
  std::vector<LinearFactor> extra1;  // factors of uni missing from this->den_
  std::vector<LinearFactor> extra2;  // factors of uni missing from o.den_
  {
    auto rest = o.den_;
    for (const auto& f : den_) {
      auto it = std::find(rest.begin(), rest.end(), f);
      if (it != rest.end()) rest.erase(it);
      else extra2.push_back(f);
    }
    for (const auto& f : rest) {
      uni.push_back(f);
      extra1.push_back(f);
    }
  }
  ThetaPoly lhs = num_.scaled(scale_);
  for (const auto& f : extra1) lhs = lhs * f.as_poly();
  ThetaPoly rhs = o.num_.scaled(o.scale_);
  for (const auto& f : extra2) rhs = rhs * f.as_poly();
  return from_parts(lhs + rhs, std::move(uni), Rat(1));
}

CoeffFrac CoeffFrac::operator-(const CoeffFrac& o) const { return *this + (-o); }

CoeffFrac CoeffFrac::operator*(const CoeffFrac& o) const {
  if (n_ != o.n_) throw Error("coeff dimension mismatch");
  if (is_zero() || o.is_zero()) return zero(n_);
  std::vector<LinearFactor> den = den_;
  den.insert(den.end(), o.den_.begin(), o.den_.end());
  return from_parts(num_ * o.num_, std::move(den), scale_ * o.scale_);
}

CoeffFrac CoeffFrac::operator-() const {
  CoeffFrac r = *this;
  r.num_ = -r.num_;
  return r;
}

CoeffFrac CoeffFrac::scaled(const Rat& q) const {
  if (q == 0) return zero(n_);
  CoeffFrac r = *this;
  r.scale_ *= q;
  if (r.scale_ < 0) {
    r.scale_ = -r.scale_;
    r.num_ = -r.num_;
  }
  return r;
}

CoeffFrac CoeffFrac::div_by_factor(const LinearFactor& f) const {
  if (is_zero()) return *this;
  CoeffFrac r = *this;
  LinearFactor g = f;
  Rat unit = g.normalize();
  r.den_.push_back(g);
  r.scale_ /= unit;
  if (r.scale_ < 0) {
    r.scale_ = -r.scale_;
    r.num_ = -r.num_;
  }
  r.canonicalize();
  return r;
}

CoeffFrac CoeffFrac::mul_factor(const LinearFactor& f) const {
  if (is_zero()) return *this;
  CoeffFrac r = *this;
  r.num_ = r.num_ * f.as_poly();
  r.canonicalize();
  return r;
}

CoeffFrac CoeffFrac::inverse() const {
  if (is_zero()) throw Error("division by zero coefficient");
  int deg = num_.total_degree();
  if (deg > 1) throw Error("cannot invert a coefficient with nonlinear numerator");
  CoeffFrac r(n_);
  r.num_ = ThetaPoly::constant(n_, Rat(1));
  for (const auto& f : den_) r.num_ = r.num_ * f.as_poly();
  r.scale_ = 1 / scale_;
  if (deg == 1) {
    LinearFactor f(n_);
    Rat c0;
    for (const auto& [e, q] : num_.terms) {
      int idx = -1;
      for (int k = 0; k < n_; ++k)
        if (e[k] == 1) idx = k;
      if (idx >= 0) {
        f.a[idx] = static_cast<long>(q.get_num().get_si());
        if (q.get_den() != 1) throw Error("unexpected non-integer numerator");
      } else {
        c0 = q;
      }
    }
    f.c = c0;
    Rat unit = f.normalize();
    r.den_.push_back(f);
    r.scale_ /= unit;
  } else {
    r.scale_ /= num_.terms.begin()->second;
  }
  if (r.scale_ < 0) {
    r.scale_ = -r.scale_;
    r.num_ = -r.num_;
  }
  r.canonicalize();
  return r;
}

bool CoeffFrac::operator==(const CoeffFrac& o) const {
  return n_ == o.n_ && scale_ == o.scale_ && den_ == o.den_ && num_ == o.num_;
}

CoeffFrac CoeffFrac::shifted(const Weight& lambda) const {
  if (lambda.is_zero()) return *this;
  CoeffFrac r(n_);
  r.num_ = num_.shifted(lambda);
  r.scale_ = scale_;
  for (const auto& f : den_) r.den_.push_back(f.shifted(lambda));
  r.canonicalize();
  return r;
}

CoeffFrac CoeffFrac::weyl(const std::vector<int>& perm) const {
  CoeffFrac r(n_);
  r.num_ = num_.weyl(perm);
  r.scale_ = scale_;
  for (const auto& f : den_) {
    LinearFactor g(n_);
    for (int k = 0; k < n_; ++k) g.a[perm[k] - 1] = f.a[k];
    g.c = f.c;
    Rat unit = g.normalize();
    r.den_.push_back(g);
    r.scale_ /= unit;
  }
  if (r.scale_ < 0) {
    r.scale_ = -r.scale_;
    r.num_ = -r.num_;
  }
  r.canonicalize();
  return r;
}

CoeffFrac CoeffFrac::weyl_natural(const std::vector<int>& perm) const {
  CoeffFrac r = weyl(perm);
  // after the permutation, correct theta_m by (m - sigma^{-1}(m)) ... realized
  // as the shift theta_{perm(k)} += perm(k) - k
  Weight shift(n_);
  for (int k = 1; k <= n_; ++k) shift.c[perm[k - 1] - 1] = perm[k - 1] - k;
  return r.shifted(shift);
}

CoeffFrac CoeffFrac::omega_image() const {
  std::vector<ThetaPoly> images;
  images.reserve(n_);
  for (int k = 1; k <= n_; ++k)
    images.push_back(ThetaPoly::constant(n_, Rat(-(n_ + 1))) - ThetaPoly::theta(n_ + 1 - k, n_));
  CoeffFrac r(n_);
  r.num_ = num_.substitute(images);
  r.scale_ = scale_;
  for (const auto& f : den_) {
    LinearFactor g(n_);
    Rat cc = f.c;
    for (int k = 0; k < n_; ++k) {
      g.a[n_ - 1 - k] = -f.a[k];
      cc -= Rat(f.a[k]) * Rat(n_ + 1);
    }
    g.c = cc;
    Rat unit = g.normalize();
    r.den_.push_back(g);
    r.scale_ /= unit;
  }
  if (r.scale_ < 0) {
    r.scale_ = -r.scale_;
    r.num_ = -r.num_;
  }
  r.canonicalize();
  return r;
}

std::pair<std::vector<Rat>, std::vector<Rat>> CoeffFrac::on_ray(const std::vector<Rat>& ray) const {
  std::vector<Rat> num = num_.on_ray(ray);
  for (Rat& q : num) q *= scale_;
  std::vector<Rat> den = {Rat(1)};
  for (const auto& f : den_) {
    Rat slope(0);
    for (int k = 0; k < n_; ++k) slope += Rat(f.a[k]) * ray[k];
    if (slope == 0 && f.c == 0) throw Error("ray not generic: a denominator vanishes identically");
    // multiply den by (slope*s + f.c)
    std::vector<Rat> nd(den.size() + 1, Rat(0));
    for (size_t d = 0; d < den.size(); ++d) {
      nd[d] += den[d] * f.c;
      nd[d + 1] += den[d] * slope;
    }
    while (!nd.empty() && nd.back() == 0) nd.pop_back();
    den = std::move(nd);
  }
  return {num, den};
}

CoeffFrac named_factor(NamedFactor kind, int i, int j, int n) {
  if (i == j) throw Error("named_factor requires i != j");
  auto frac = [&](long top, long bot) {
    ThetaPoly num = ThetaPoly::theta(i, n) - ThetaPoly::theta(j, n) +
                    ThetaPoly::constant(n, Rat(top));
    return CoeffFrac::from_poly(num).div_by_factor(LinearFactor::theta_diff(i, j, bot, n));
  };
  switch (kind) {
    case NamedFactor::A: return frac(0, -1);
    case NamedFactor::Ap: return frac(-1, 0);
    case NamedFactor::B: return frac(-1, -2);
    case NamedFactor::Bp: return frac(-2, -1);
    case NamedFactor::Cp: return frac(-3, -2);
  }
  throw Error("unreachable");
}

}  // namespace dra
