#pragma once

#include "qweyl/classical.hpp"

namespace qweyl::oracle {

inline long factorial(int n)
{
    long f = 1;
    for (int i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// (k.x)^s, k.x = 1/2 (k+ x- + k- x+ - kv vb - kvb v), by the multinomial theorem.
inline ClassicalElement multinomial_power(int s)
{
    ClassicalElement out;
    for (int i1 = 0; i1 <= s; ++i1)
        for (int i2 = 0; i1 + i2 <= s; ++i2)
            for (int i3 = 0; i1 + i2 + i3 <= s; ++i3) {
                const int i4 = s - i1 - i2 - i3;
                mpq_class c(factorial(s), factorial(i1) * factorial(i2) * factorial(i3) * factorial(i4) * (1L << s));
                c.canonicalize();
                if ((i3 + i4) % 2 == 1)
                    c = -c;
                // k+ x- (i1), k- x+ (i2), kv vb (i3), kvb v (i4).
                RepKey key;
                key.k.exp = {i3, i2, i1, i4};
                key.x = {i4, i1, i2, i3};
                out[key] = GaussianRational(c);
            }
    return out;
}

} // namespace qweyl::oracle
