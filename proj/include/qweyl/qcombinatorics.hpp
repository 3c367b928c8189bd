#pragma once

#include "qweyl/qscalar.hpp"

namespace qweyl {

// [n]_q = (q^n - q^{-n}) / (q - q^{-1}) as the Laurent polynomial q^{n-1} + q^{n-3} + ... + q^{1-n}.
// [-n]_q = -[n]_q and [0]_q = 0.
Laurent qnum_laurent(int n);
QScalar qnum(int n);

// [n]_q! = [n]_q [n-1]_q ... [1]_q with [0]_q! = 1. Throws std::domain_error for n < 0.
QScalar qfactorial(int n);

// 1/Gamma_q(p): 1/[p-1]_q! for p >= 1 and zero for every p <= 0.
QScalar inv_gamma_q(int p);

} // namespace qweyl
