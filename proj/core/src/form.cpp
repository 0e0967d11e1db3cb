#include "symharm/form.hpp"

#include <algorithm>
#include <cctype>

namespace symharm {

namespace detail {

void GradedBase::add_term(Mask m, const Scalar& c) {
  if (c == 0) return;
  if (grade_of(m) != grade_) throw ValueError("term grade mismatch");
  auto [it, inserted] = coeff_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeff_.erase(it);
  }
}

}  // namespace detail

Form contract(const Multivector& x, const Form& a) {
  if (x.n() != a.n()) throw ValueError("contract: dimension mismatch");
  Form r(a.n(), a.grade() - x.grade());
  if (x.grade() > a.grade()) return Form(a.n(), 0);
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [ma, ca] : a.terms()) {
      if ((mx & ma) != mx) continue;
      // Apply i(e_{j1}), then i(e_{j2}), ... for ascending j in mx.
      int s = 1;
      Mask cur = ma;
      for (int j : indices_of(mx)) {
        s *= removal_sign(cur, j);
        cur = Mask(cur & ~mask_bit(j));
      }
      Scalar prod = cx * ca;
      r.add_term(cur, s > 0 ? prod : Scalar(-prod));
    }
  }
  return r;
}

Scalar pairing(const Form& a, const Multivector& x) {
  Scalar s(0);
  for (const auto& [m, c] : a.terms()) s += c * x.coefficient(m);
  return s;
}

void MixedForm::set_component(const Form& f) {
  if (f.n() != n_) throw ValueError("mixed form: dimension mismatch");
  if (f.is_zero())
    parts_.erase(f.grade());
  else
    parts_.insert_or_assign(f.grade(), f);
}

Form MixedForm::component(int k) const {
  auto it = parts_.find(k);
  return it == parts_.end() ? Form(n_, k) : it->second;
}

bool MixedForm::operator==(const MixedForm& o) const {
  return n_ == o.n_ && parts_ == o.parts_;
}

namespace {

std::string render(int n, int grade, const std::map<Mask, Scalar>& terms) {
  if (terms.empty()) return "0";
  const Basis& basis = Basis::get(n);
  std::vector<std::pair<int, Mask>> order;
  order.reserve(terms.size());
  for (const auto& [m, c] : terms) order.emplace_back(basis.position(m), m);
  std::sort(order.begin(), order.end());
  std::string out;
  bool first = true;
  for (const auto& [pos, m] : order) {
    (void)pos;
    const Scalar& c = terms.at(m);
    Scalar mag = c < 0 ? Scalar(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (grade == 0) {
      out += to_string(mag);
    } else {
      if (mag != 1) {
        out += to_string(mag);
        out += "*";
      }
      out += mask_to_string(m);
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Form& f) {
  return render(f.n(), f.grade(), f.terms());
}

std::string to_string(const Multivector& x) {
  std::string s = render(x.n(), x.grade(), x.terms());
  // Multivector basis rendered with "e" to keep reports unambiguous.
  for (auto& ch : s)
    if (ch == 'a') ch = 'e';
  return s;
}

Scalar parse_scalar(std::string_view text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw ParseError("empty rational");
  auto check_int = [](std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  auto slash = t.find('/');
  try {
    if (slash == std::string::npos) {
      if (!check_int(t)) throw ParseError("bad rational: " + t);
      return Scalar(BigInt(t));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!check_int(num) || !check_int(den))
      throw ParseError("bad rational: " + t);
    BigInt d(den);
    if (d == 0) throw ParseError("zero denominator: " + t);
    return Scalar(BigInt(num), d);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad rational '") + t + "': " + e.what());
  }
}

}  // namespace symharm
