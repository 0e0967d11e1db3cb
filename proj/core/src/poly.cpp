#include "symharm/poly.hpp"

namespace symharm {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) {
  normalize();
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Scalar UniPoly::eval(const Scalar& x) const {
  Scalar acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Scalar> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Scalar(int(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), Scalar(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  return *this + o.scaled(Scalar(-1));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly();
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Scalar& s) const {
  std::vector<Scalar> r = c_;
  for (auto& x : r) x *= s;
  return UniPoly(std::move(r));
}

UniPoly UniPoly::rem(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw ValueError("polynomial division by zero");
  std::vector<Scalar> r = c_;
  const auto& d = divisor.c_;
  while (r.size() >= d.size() && !r.empty()) {
    Scalar f = r.back() / d.back();
    size_t shift = r.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i) r[shift + i] -= f * d[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.rem(b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a = a.scaled(Scalar(1) / a.c_.back());  // monic
  return a;
}

UniPoly UniPoly::squarefree_part() const {
  if (is_zero()) return UniPoly();
  UniPoly g = gcd(*this, derivative());
  if (g.degree() <= 0) return *this;
  // Exact division p / g via repeated leading-term elimination.
  std::vector<Scalar> r = c_;
  std::vector<Scalar> q(c_.size() - g.c_.size() + 1, Scalar(0));
  while (r.size() >= g.c_.size() && !r.empty()) {
    Scalar f = r.back() / g.c_.back();
    size_t shift = r.size() - g.c_.size();
    q[shift] = f;
    for (size_t i = 0; i < g.c_.size(); ++i) r[shift + i] -= f * g.c_[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return UniPoly(std::move(q));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Scalar mag = c_[i] < 0 ? Scalar(-c_[i]) : c_[i];
    if (out.empty())
      out += c_[i] < 0 ? "-" : "";
    else
      out += c_[i] < 0 ? " - " : " + ";
    bool unit = mag == 1 && i > 0;
    if (!unit) out += symharm::to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  if (p.is_zero()) throw ValueError("Sturm chain of the zero polynomial");
  std::vector<UniPoly> chain;
  UniPoly p0 = p.squarefree_part();
  chain.push_back(p0);
  UniPoly p1 = p0.derivative();
  while (!p1.is_zero()) {
    chain.push_back(p1);
    UniPoly r = chain[chain.size() - 2].rem(p1).scaled(Scalar(-1));
    p1 = std::move(r);
  }
  return chain;
}

namespace {

int sign_variations(const std::vector<UniPoly>& chain, const Scalar& x) {
  int v = 0, last = 0;
  for (const UniPoly& p : chain) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

int sturm_root_count(const UniPoly& p, const Scalar& a, const Scalar& b) {
  if (a >= b) throw ValueError("empty interval");
  std::vector<UniPoly> chain = sturm_chain(p);
  if (chain.front().eval(a) == 0)
    throw ValueError("Sturm count requires p(a) != 0");
  return sign_variations(chain, a) - sign_variations(chain, b);
}

bool sturm_nonvanishing(const UniPoly& p, const Scalar& a, const Scalar& b) {
  if (p.is_zero()) throw ValueError("nonvanishing query on zero polynomial");
  if (a > b) throw ValueError("empty interval");
  if (p.eval(a) == 0 || p.eval(b) == 0) return false;
  if (a == b) return true;
  return sturm_root_count(p, a, b) == 0;
}

void MultiPoly::add_term(const std::vector<int>& exponents, const Scalar& c) {
  if (int(exponents.size()) != nvars_) throw ValueError("exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Scalar MultiPoly::eval(const std::vector<Scalar>& x) const {
  if (int(x.size()) != nvars_) throw ValueError("evaluation arity mismatch");
  Scalar acc(0);
  for (const auto& [e, c] : terms_) {
    Scalar t = c;
    for (int v = 0; v < nvars_; ++v)
      for (int p = 0; p < e[size_t(v)]; ++p) t *= x[size_t(v)];
    acc += t;
  }
  return acc;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    Scalar mag = c < 0 ? Scalar(-c) : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    bool any_var = false;
    std::string vars;
    for (int v = 0; v < nvars_; ++v) {
      if (e[size_t(v)] == 0) continue;
      if (any_var) vars += "*";
      vars += names[size_t(v)];
      if (e[size_t(v)] > 1) vars += "^" + std::to_string(e[size_t(v)]);
      any_var = true;
    }
    if (mag != 1 || !any_var) {
      out += symharm::to_string(mag);
      if (any_var) out += "*";
    }
    out += vars;
  }
  return out;
}

}  // namespace symharm
