#include "qweyl/dictionary.hpp"

#include <stdexcept>

namespace qweyl {

namespace {

const GaussianRational kI = GaussianRational::imaginary_unit();
const GaussianRational kHalf = GaussianRational::from_fraction(1, 2);

} // namespace

Matrix weyl_to_cpm_matrix()
{
    Matrix m(10, std::vector<GaussianRational>(10));
    // Plus rows.
    m[0][2] = 1, m[0][1] = -kHalf, m[0][6] = -1, m[0][0] = kI, m[0][3] = kI * kHalf, m[0][7] = kI;
    m[1][4] = 2, m[1][8] = -2, m[1][9] = kI * 2, m[1][5] = kI * -2;
    m[2][1] = 3, m[2][3] = kI * -3;
    m[3][4] = 8, m[3][8] = 8, m[3][9] = kI * 8, m[3][5] = kI * 8;
    m[4][2] = 1, m[4][1] = -kHalf, m[4][6] = 1, m[4][0] = kI, m[4][3] = kI * kHalf, m[4][7] = -kI;
    // Minus rows, including the factor 2 printed on the k = 3 row.
    m[5][2] = 1, m[5][1] = -kHalf, m[5][6] = -1, m[5][0] = -kI, m[5][3] = -kI * kHalf, m[5][7] = -kI;
    m[6][4] = 2, m[6][8] = -2, m[6][9] = kI * -2, m[6][5] = kI * 2;
    m[7][1] = 3, m[7][3] = kI * 3;
    m[8][4] = 2, m[8][8] = 2, m[8][9] = kI * -2, m[8][5] = kI * -2;
    m[9][2] = 1, m[9][1] = -kHalf, m[9][6] = 1, m[9][0] = -kI, m[9][3] = -kI * kHalf, m[9][7] = kI;
    return m;
}

CPolynomialPair weyl_to_cpm(const WeylComponents& w)
{
    const Matrix m = weyl_to_cpm_matrix();
    CPolynomialPair out;
    for (std::size_t r = 0; r < 10; ++r) {
        GaussianRational acc;
        for (std::size_t c = 0; c < 10; ++c)
            acc += m[r][c] * w[c];
        (r < 5 ? out.plus : out.minus).coeffs[r % 5] = acc;
    }
    return out;
}

std::size_t matrix_rank(Matrix m)
{
    if (m.empty())
        return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c].is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[pivot], m[rank]);
        const GaussianRational inv = m[rank][c].inverse();
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (m[r][c].is_zero())
                continue;
            const GaussianRational f = m[r][c] * inv;
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<GaussianRational>> solve_linear(Matrix m, std::vector<GaussianRational> rhs)
{
    const std::size_t n = m.size();
    if (rhs.size() != n)
        throw std::invalid_argument("solve_linear: dimension mismatch");
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c].is_zero())
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(m[pivot], m[c]);
        std::swap(rhs[pivot], rhs[c]);
        const GaussianRational inv = m[c][c].inverse();
        for (std::size_t k = c; k < n; ++k)
            m[c][k] *= inv;
        rhs[c] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero())
                continue;
            const GaussianRational f = m[r][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
            rhs[r] -= f * rhs[c];
        }
    }
    return rhs;
}

std::string RankReport::to_string() const
{
    std::string out = "rank " + std::to_string(rank) + " (plus rows " + std::to_string(plus_rank) + ", minus rows " +
                      std::to_string(minus_rank) + ")";
    if (conjugation_mismatches.empty())
        return out + "; minus rows are conjugates of plus rows";
    out += "; minus rows differ from conjugated plus rows at k =";
    for (int k : conjugation_mismatches)
        out += " " + std::to_string(k);
    return out;
}

RankReport weyl_rank_report()
{
    const Matrix m = weyl_to_cpm_matrix();
    RankReport r;
    r.rank = matrix_rank(m);
    r.plus_rank = matrix_rank(Matrix(m.begin(), m.begin() + 5));
    r.minus_rank = matrix_rank(Matrix(m.begin() + 5, m.end()));
    for (int k = 0; k < 5; ++k) {
        bool same = true;
        for (std::size_t c = 0; c < 10; ++c)
            same = same && m[static_cast<std::size_t>(k) + 5][c] == m[static_cast<std::size_t>(k)][c].conj();
        if (!same)
            r.conjugation_mismatches.push_back(k);
    }
    return r;
}

namespace {

// Independent components of a symmetric tensor, in the order used by the inverse solve.
constexpr std::array<std::pair<int, int>, 10> kSymSlots = {
    {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};

// Coefficient rows of T'_{ij} over kSymSlots, in the order 22, 11, 00, 21, 12, 10, 01, 20, 02.
struct PrimedRow {
    int i, j;
    std::array<GaussianRational, 10> coeffs;
};

std::vector<PrimedRow> primed_rows()
{
    auto row = [](int i, int j, std::initializer_list<std::pair<int, GaussianRational>> entries) {
        PrimedRow r{i, j, {}};
        for (const auto& [slot, c] : entries)
            r.coeffs[static_cast<std::size_t>(slot)] = c;
        return r;
    };
    // Slot indices: 0:T00 1:T01 2:T02 3:T03 4:T11 5:T12 6:T13 7:T22 8:T23 9:T33
    return {
        row(2, 2, {{0, 1}, {3, 2}, {9, 1}}),
        row(1, 1, {{0, 1}, {9, -1}}),
        row(0, 0, {{0, 1}, {3, -2}, {9, 1}}),
        row(2, 1, {{1, 1}, {2, kI}, {6, 1}, {8, kI}}),
        row(1, 2, {{1, 1}, {2, -kI}, {6, 1}, {8, -kI}}),
        row(1, 0, {{1, 1}, {2, kI}, {6, -1}, {8, -kI}}),
        row(0, 1, {{1, 1}, {2, -kI}, {6, -1}, {8, kI}}),
        row(2, 0, {{4, 1}, {5, kI * 2}, {7, -1}}),
        row(0, 2, {{4, 1}, {5, kI * -2}, {7, -1}}),
    };
}

} // namespace

PrimedTensor stress_to_primed(const SymTensor& t)
{
    PrimedTensor p{};
    for (const auto& r : primed_rows()) {
        GaussianRational acc;
        for (std::size_t s = 0; s < 10; ++s) {
            const auto [mu, nu] = kSymSlots[s];
            acc += r.coeffs[s] * t[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
        }
        p[static_cast<std::size_t>(r.i)][static_cast<std::size_t>(r.j)] = acc;
    }
    return p;
}

SymTensor primed_to_stress(const PrimedTensor& p)
{
    Matrix m;
    std::vector<GaussianRational> rhs;
    for (const auto& r : primed_rows()) {
        m.emplace_back(r.coeffs.begin(), r.coeffs.end());
        rhs.push_back(p[static_cast<std::size_t>(r.i)][static_cast<std::size_t>(r.j)]);
    }
    // Tracelessness T00 - T11 - T22 - T33 = 0 closes the system.
    std::vector<GaussianRational> trace(10);
    trace[0] = 1, trace[4] = -1, trace[7] = -1, trace[9] = -1;
    m.push_back(trace);
    rhs.emplace_back();
    auto sol = solve_linear(std::move(m), std::move(rhs));
    if (!sol)
        throw std::domain_error("primed_to_stress: singular system");
    SymTensor t{};
    for (std::size_t s = 0; s < 10; ++s) {
        const auto [mu, nu] = kSymSlots[s];
        t[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = (*sol)[s];
        t[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)] = (*sol)[s];
    }
    return t;
}

GaussianRational minkowski_trace(const SymTensor& t)
{
    return t[0][0] - t[1][1] - t[2][2] - t[3][3];
}

LightCone lightcone_map(const std::array<GaussianRational, 4>& x)
{
    return {x[0] + x[3], x[0] - x[3], x[1] - kI * x[2], x[1] + kI * x[2]};
}

} // namespace qweyl
