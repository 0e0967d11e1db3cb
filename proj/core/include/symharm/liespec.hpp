#pragma once

#include "symharm/form.hpp"
#include "symharm/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace symharm {

// A nilpotent Lie algebra given by structure constants c^{ij}_k with
// i < j < k, parsed from structure notation like "(0,0,12,13,23,14-25)".
// Entry k lists d a_k = sum of signed a_i^a_j terms; a two-digit term keeps
// its written order, so "52" contributes a5^a2 = -a25.
class LieAlgebraSpec {
 public:
  static LieAlgebraSpec parse(std::string_view text);

  int n() const { return n_; }
  const std::string& name() const { return name_; }

  // c^{ij}_k, i < j < k; zero when absent.
  Scalar constant(int i, int j, int k) const;
  const std::map<std::pair<int, int>, Scalar>& entry(int k) const;

  // d a_k as a 2-form.
  Form d_generator(int k) const;

  bool is_abelian() const;

  // Structure notation round trip. Integer constants render as repeated
  // two-digit terms; non-integer constants are not representable.
  std::string render() const;

 private:
  LieAlgebraSpec() = default;
  int n_ = 0;
  std::string name_;
  // per generator k (1-based): map (i,j) with i<j -> c^{ij}_k
  std::vector<std::map<std::pair<int, int>, Scalar>> constants_;
};

// The Chevalley-Eilenberg differential on Lambda*(g*), extended from the
// generators as a grade +1 antiderivation. Matrices act on coordinate
// vectors over the lexicographic multi-index bases.
class CEDifferential {
 public:
  explicit CEDifferential(const LieAlgebraSpec& spec);

  int n() const { return n_; }
  const RatMatrix& matrix(int k) const;  // d_k: Lambda^k -> Lambda^{k+1}
  Form apply(const Form& a) const;
  bool is_closed(const Form& a) const { return apply(a).is_zero(); }

 private:
  int n_;
  std::vector<RatMatrix> d_;
};

struct LowerCentralSeries {
  std::vector<int> dims;  // dim g^0, dim g^1, ... down to 0
  int step_length;        // 1 + max r with g^r != 0
};

LowerCentralSeries lower_central_series(const LieAlgebraSpec& spec);

// Coordinate helpers between sparse forms and dense coordinate vectors.
std::vector<Scalar> form_to_vector(const Form& f);
Form vector_to_form(int n, int grade, const std::vector<Scalar>& v);

}  // namespace symharm
