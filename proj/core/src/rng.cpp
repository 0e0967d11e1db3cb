#include "symharm/rng.hpp"

namespace symharm {

Form random_form(Rng& rng, int n, int grade, long long bound) {
  Form f(n, grade);
  for (Mask m : Basis::get(n).masks(grade)) {
    long long c = rng.range(-bound, bound);
    if (c != 0) f.add_term(m, Scalar(c));
  }
  return f;
}

}  // namespace symharm
