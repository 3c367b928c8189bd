#pragma once

#include "qweyl/repspace.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qweyl {

// SHIFT (M^p) moves an exponent by p, SCALE (T^p) multiplies by q^{p * exponent}, QDIFF maps
// exponent n to [n]_q times exponent n - 1.
enum class GenKind { Shift, Scale, QDiff };

struct GenOp {
    GenKind kind = GenKind::Shift;
    Var var = Var::V;
    int power = 1;   // ignored for QDiff

    bool operator==(const GenOp&) const = default;
};

// Weighted generator sequence. The sequence is stored in printed order and applied right to left.
struct OpTerm {
    QScalar weight{1};
    std::vector<GenOp> seq;
};

// Formal sum of generator compositions. No operator-level normal form is maintained;
// expressions are compared by their action.
class OperatorExpr {
public:
    OperatorExpr() = default;
    static OperatorExpr identity();
    static OperatorExpr generator(GenOp g);
    static OperatorExpr shift(Var v, int power = 1) { return generator({GenKind::Shift, v, power}); }
    static OperatorExpr scale(Var v, int power = 1) { return generator({GenKind::Scale, v, power}); }
    static OperatorExpr qdiff(Var v) { return generator({GenKind::QDiff, v, 1}); }

    const std::vector<OpTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    OperatorExpr scaled(const QScalar& c) const;
    OperatorExpr pow(int k) const;

    OperatorExpr& operator+=(const OperatorExpr& o);
    friend OperatorExpr operator+(OperatorExpr a, const OperatorExpr& b) { return a += b; }
    friend OperatorExpr operator-(OperatorExpr a, const OperatorExpr& b) { return a += b.scaled(-1); }
    // Composition: (a * b)(e) = a(b(e)).
    friend OperatorExpr operator*(const OperatorExpr& a, const OperatorExpr& b);
    friend OperatorExpr operator*(const QScalar& c, const OperatorExpr& a) { return a.scaled(c); }

    std::string to_string() const;

private:
    std::vector<OpTerm> terms_;
};

RepElement apply_gen(const GenOp& g, const RepElement& e);

// Linear action; per-term work is split over `jobs` threads and merged exactly.
RepElement apply(const OperatorExpr& op, const RepElement& e, unsigned jobs = 1);

enum class Sign { Plus, Minus };
enum class Basis { Hat, Tilde };

// q-deformed simple-root operators qI1, qI2, qI3 in the hat basis.
OperatorExpr build_qI(int a);

// qI^±(n) = 1/2([n][n-1] A^2 qI2^2 - [2][n-1][n+1] A qI2^2 A + [n][n+1] qI2^2 A^2), A = qI1 or qI3.
// `middle_scale` multiplies the middle coefficient; anything other than 1 is a deliberate mutation.
OperatorExpr build_qI_pm(Sign sign, int n, const QScalar& middle_scale = 1);

// q-d'Alembert operator in the hat or tilde basis.
OperatorExpr build_qdal(Basis basis);

// Classical counterparts realised through generators (valid at q = 1, where QDiff is the
// partial derivative and Shift(z) is multiplication by z).
OperatorExpr build_classical_I(int a);
OperatorExpr build_classical_I_pm_n(Sign sign, int n, long middle_scale = 1);
// The explicit second-order operator I^± as printed in the indexless field equations.
OperatorExpr build_classical_I_pm(Sign sign);
OperatorExpr build_box();

// q-Maxwell composites 1/2([n+2] qI1 qI2 - [n+3] qI2 qI1) and the qI3 mirror.
OperatorExpr build_q_maxwell(Sign sign, int n);

// Registry keyed by the strings qI1, qI2, qI3, qI+(n), qI-(n), qdal-hat, qdal-tilde, I+, I-,
// I+(n), I-(n), I1, I2, I3, box, qM+(n), qM-(n). Throws std::invalid_argument for unknown keys.
OperatorExpr lookup_operator(std::string_view key);
std::vector<std::string> operator_registry_keys();

} // namespace qweyl
