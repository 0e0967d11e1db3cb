#include "symharm/liespec.hpp"

#include <cctype>

namespace symharm {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  return t;
}

}  // namespace

LieAlgebraSpec LieAlgebraSpec::parse(std::string_view text) {
  std::string t = strip_spaces(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw ParseError("structure notation must be parenthesized: " + t);
  std::string body = t.substr(1, t.size() - 2);

  std::vector<std::string> entries;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      entries.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  entries.push_back(cur);

  int n = int(entries.size());
  if (n < 1 || n > kMaxDim)
    throw ParseError("structure notation supports 1..9 generators");

  LieAlgebraSpec spec;
  spec.n_ = n;
  spec.name_ = t;
  spec.constants_.resize(size_t(n) + 1);

  for (int k = 1; k <= n; ++k) {
    const std::string& e = entries[size_t(k - 1)];
    if (e.empty()) throw ParseError("empty entry " + std::to_string(k));
    if (e == "0") continue;
    size_t p = 0;
    int sign = 1;
    while (p < e.size()) {
      if (e[p] == '+' || e[p] == '-') {
        if (p == 0 && e[p] == '+')
          throw ParseError("entry may not start with '+': " + e);
        sign = e[p] == '-' ? -1 : 1;
        ++p;
      } else if (p > 0) {
        throw ParseError("missing operator in entry: " + e);
      }
      if (p + 2 > e.size() || !std::isdigit(static_cast<unsigned char>(e[p])) ||
          !std::isdigit(static_cast<unsigned char>(e[p + 1])))
        throw ParseError("expected two-digit term in entry: " + e);
      int a = e[p] - '0', b = e[p + 1] - '0';
      p += 2;
      if (a < 1 || a > n || b < 1 || b > n)
        throw ParseError("index out of range 1.." + std::to_string(n) +
                         " in entry: " + e);
      if (a == b) throw ParseError("repeated index in term: " + e);
      // Written order is meaningful: "52" means a5^a2 = -a25.
      int i = a, j = b, s = sign;
      if (i > j) {
        std::swap(i, j);
        s = -s;
      }
      if (j >= k)
        throw ParseError("term " + std::to_string(a) + std::to_string(b) +
                         " violates i<j<k in entry " + std::to_string(k));
      auto key = std::make_pair(i, j);
      auto& row = spec.constants_[size_t(k)];
      auto [it, inserted] = row.emplace(key, Scalar(s));
      if (!inserted) {
        it->second += s;
        if (it->second == 0) row.erase(it);
      }
    }
  }

  // d^2 = 0 is the Jacobi identity in dual form; reject violations here so
  // every constructed spec is a genuine Lie algebra.
  CEDifferential d(spec);
  for (int k = 1; k < n; ++k) {
    for (Mask m : Basis::get(n).masks(k)) {
      Form f = Form::basis_element(n, m);
      if (!d.apply(d.apply(f)).is_zero())
        throw ParseError("structure constants violate d^2 = 0 at " +
                         mask_to_string(m));
    }
  }
  return spec;
}

Scalar LieAlgebraSpec::constant(int i, int j, int k) const {
  if (k < 1 || k > n_) return Scalar(0);
  auto& row = constants_[size_t(k)];
  auto it = row.find({i, j});
  return it == row.end() ? Scalar(0) : it->second;
}

const std::map<std::pair<int, int>, Scalar>& LieAlgebraSpec::entry(int k) const {
  return constants_[size_t(k)];
}

Form LieAlgebraSpec::d_generator(int k) const {
  Form f(n_, 2);
  for (const auto& [ij, c] : constants_[size_t(k)])
    f.add_term(Mask(mask_bit(ij.first) | mask_bit(ij.second)), c);
  return f;
}

bool LieAlgebraSpec::is_abelian() const {
  for (int k = 1; k <= n_; ++k)
    if (!constants_[size_t(k)].empty()) return false;
  return true;
}

std::string LieAlgebraSpec::render() const {
  std::string out = "(";
  for (int k = 1; k <= n_; ++k) {
    if (k > 1) out += ",";
    const auto& row = constants_[size_t(k)];
    if (row.empty()) {
      out += "0";
      continue;
    }
    bool first = true;
    for (const auto& [ij, c] : row) {
      if (denominator_of(c) != 1)
        throw ValueError("non-integer constant not representable in notation");
      BigInt reps = numerator_of(c);
      bool neg = reps < 0;
      if (neg) reps = -reps;
      for (BigInt r = 0; r < reps; ++r) {
        if (!first)
          out += neg ? "-" : "+";
        else if (neg)
          out += "-";
        first = false;
        out += char('0' + ij.first);
        out += char('0' + ij.second);
      }
    }
  }
  out += ")";
  return out;
}

CEDifferential::CEDifferential(const LieAlgebraSpec& spec) : n_(spec.n()) {
  const Basis& basis = Basis::get(n_);
  d_.reserve(size_t(n_) + 1);
  for (int k = 0; k <= n_; ++k) {
    RatMatrix dk(size_t(basis.dim(k + 1)), size_t(basis.dim(k)));
    const auto& masks = basis.masks(k);
    for (size_t col = 0; col < masks.size(); ++col) {
      Mask m = masks[col];
      // d(a_I) = sum_t (-1)^{t-1} (d a_{i_t}) ^ a_{I \ i_t}
      Form out(n_, k + 1);
      int t = 0;
      for (int idx : indices_of(m)) {
        ++t;
        Form rest = Form::basis_element(n_, Mask(m & ~mask_bit(idx)),
                                        Scalar((t % 2) ? 1 : -1));
        out = out + wedge(spec.d_generator(idx), rest);
      }
      for (const auto& [mm, c] : out.terms())
        dk.at(size_t(basis.position(mm)), col) = c;
    }
    d_.push_back(std::move(dk));
  }
}

const RatMatrix& CEDifferential::matrix(int k) const {
  if (k < 0 || k > n_) throw ValueError("differential grade out of range");
  return d_[size_t(k)];
}

Form CEDifferential::apply(const Form& a) const {
  int k = a.grade();
  if (k >= n_) return Form(n_, k + 1);
  if (k < 0) throw ValueError("negative grade");
  const Basis& basis = Basis::get(n_);
  std::vector<Scalar> v(size_t(basis.dim(k)), Scalar(0));
  for (const auto& [m, c] : a.terms()) v[size_t(basis.position(m))] = c;
  std::vector<Scalar> w = d_[size_t(k)].apply(v);
  return vector_to_form(n_, k + 1, w);
}

LowerCentralSeries lower_central_series(const LieAlgebraSpec& spec) {
  const int n = spec.n();
  LowerCentralSeries out;
  out.dims.push_back(n);
  // Bracket [e_i, e_j] = -sum_k c^{ij}_k e_k; only spans are consumed, so the
  // overall sign is immaterial.
  auto bracket_with_generator = [&](int i, const std::vector<Scalar>& v) {
    std::vector<Scalar> w(size_t(n), Scalar(0));
    for (int j = 1; j <= n; ++j) {
      if (v[size_t(j - 1)] == 0) continue;
      for (int k = 1; k <= n; ++k) {
        Scalar c = i < j ? spec.constant(i, j, k)
                         : (i > j ? -spec.constant(j, i, k) : Scalar(0));
        if (c != 0) w[size_t(k - 1)] -= c * v[size_t(j - 1)];
      }
    }
    return w;
  };

  RatMatrix current = RatMatrix::identity(size_t(n));  // rows span g^0
  while (true) {
    std::vector<std::vector<Scalar>> gen;
    for (int i = 1; i <= n; ++i)
      for (size_t r = 0; r < current.rows(); ++r) {
        std::vector<Scalar> v(static_cast<size_t>(n), Scalar(0));
        for (int j = 0; j < n; ++j) v[size_t(j)] = current.at(r, size_t(j));
        std::vector<Scalar> w = bracket_with_generator(i, v);
        bool nonzero = false;
        for (const Scalar& x : w) nonzero = nonzero || x != 0;
        if (nonzero) gen.push_back(std::move(w));
      }
    RatMatrix next(gen.size(), size_t(n));
    for (size_t r = 0; r < gen.size(); ++r)
      for (int j = 0; j < n; ++j) next.at(r, size_t(j)) = gen[r][size_t(j)];
    RatMatrix span = next.row_space_basis();
    out.dims.push_back(int(span.rows()));
    if (span.rows() == 0) break;
    current = span;
  }
  int last_nonzero = 0;
  for (size_t r = 0; r < out.dims.size(); ++r)
    if (out.dims[r] > 0) last_nonzero = int(r);
  out.step_length = last_nonzero + 1;
  return out;
}

std::vector<Scalar> form_to_vector(const Form& f) {
  const Basis& basis = Basis::get(f.n());
  std::vector<Scalar> v(size_t(basis.dim(f.grade())), Scalar(0));
  for (const auto& [m, c] : f.terms()) v[size_t(basis.position(m))] = c;
  return v;
}

Form vector_to_form(int n, int grade, const std::vector<Scalar>& v) {
  const Basis& basis = Basis::get(n);
  const auto& masks = basis.masks(grade);
  if (v.size() != masks.size()) throw ValueError("coordinate length mismatch");
  Form f(n, grade);
  for (size_t i = 0; i < masks.size(); ++i)
    if (v[i] != 0) f.add_term(masks[i], v[i]);
  return f;
}

}  // namespace symharm
