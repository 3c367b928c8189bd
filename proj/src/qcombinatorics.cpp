#include "qweyl/qcombinatorics.hpp"

#include <stdexcept>

namespace qweyl {

Laurent qnum_laurent(int n)
{
    if (n == 0)
        return {};
    const int m = n < 0 ? -n : n;
    std::vector<Laurent::Term> terms;
    terms.reserve(static_cast<std::size_t>(m));
    for (int k = m - 1; k >= 1 - m; k -= 2) {
        Exponents e{};
        e[0] = k;
        terms.push_back({e, GaussianRational(n < 0 ? -1 : 1)});
    }
    return Laurent::from_terms(std::move(terms));
}

QScalar qnum(int n)
{
    return qnum_laurent(n);
}

QScalar qfactorial(int n)
{
    if (n < 0)
        throw std::domain_error("qfactorial: negative argument " + std::to_string(n));
    Laurent prod(1);
    for (int k = 2; k <= n; ++k)
        prod *= qnum_laurent(k);
    return prod;
}

QScalar inv_gamma_q(int p)
{
    if (p <= 0)
        return {};
    return qfactorial(p - 1).inverse();
}

} // namespace qweyl
