#pragma once

#include "qweyl/ncalg.hpp"
#include "qweyl/repspace.hpp"

#include <random>

namespace qweyl::testing {

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

    GaussianRational gaussian(bool allow_imaginary = true)
    {
        mpq_class re(integer(-6, 6), integer(1, 5));
        mpq_class im = allow_imaginary ? mpq_class(integer(-6, 6), integer(1, 5)) : mpq_class(0);
        re.canonicalize();
        im.canonicalize();
        return GaussianRational(re, im);
    }

    Laurent laurent(int max_terms = 3, int units = 1)
    {
        std::vector<Laurent::Term> terms;
        const int n = static_cast<int>(integer(1, max_terms));
        for (int i = 0; i < n; ++i) {
            Exponents e{};
            e[0] = static_cast<int>(integer(-3, 3));
            for (int u = 1; u <= units; ++u)
                e[static_cast<std::size_t>(u)] = static_cast<int>(integer(-1, 2));
            terms.push_back({e, gaussian()});
        }
        return Laurent::from_terms(std::move(terms));
    }

    QScalar scalar(int units = 1)
    {
        Laurent den;
        while (den.is_zero())
            den = laurent(2, units);
        return QScalar(laurent(3, units), den);
    }

    QScalar nonzero_scalar(int units = 1)
    {
        QScalar s;
        while (s.is_zero())
            s = scalar(units);
        return s;
    }

    NCWord word(int max_len, bool unit_coeff = true)
    {
        NCWord w;
        const int n = static_cast<int>(integer(0, max_len));
        for (int i = 0; i < n; ++i)
            w.letters.push_back(static_cast<Letter>(integer(0, 3)));
        if (!unit_coeff)
            w.coeff = QScalar(gaussian());
        return w;
    }

    NCElement element(int max_terms = 3, int max_len = 4)
    {
        NCElement e;
        const int n = static_cast<int>(integer(1, max_terms));
        for (int i = 0; i < n; ++i)
            e += normal_order(word(max_len)).scaled(scalar(0));
        return e;
    }

    RepKey key(int max_exp = 3, bool with_momenta = false)
    {
        RepKey k;
        for (std::size_t i = 0; i < 4; ++i) {
            k.x[i] = static_cast<int>(integer(0, max_exp));
            if (with_momenta)
                k.k.exp[i] = static_cast<int>(integer(0, 2));
        }
        k.z = {static_cast<int>(integer(0, 2)), static_cast<int>(integer(0, 2))};
        return k;
    }

    RepElement rep_element(int max_terms = 4, bool with_momenta = false)
    {
        RepElement e;
        const int n = static_cast<int>(integer(1, max_terms));
        for (int i = 0; i < n; ++i)
            e.add_term(key(3, with_momenta), scalar(0));
        return e;
    }

private:
    std::mt19937_64 rng_;
};

} // namespace qweyl::testing
