#include "lnd/linalg.hpp"

#include "lnd/errors.hpp"

#include <algorithm>

namespace lnd {

std::vector<Rational> RationalMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

void RationalMatrix::append_row(const std::vector<Rational>& values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw InvalidArgument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

namespace {

using IntRow = std::vector<Integer>;

// Clears denominators and divides out the content; sign is left alone.
IntRow primitive(const std::vector<Rational>& row) {
    Integer lcm_den = 1;
    for (const auto& q : row) {
        if (q != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
    }
    IntRow out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
        out[j] = row[j].get_num() * (lcm_den / row[j].get_den());
    }
    return out;
}

void divide_content(IntRow& row) {
    Integer g = 0;
    for (const auto& x : row) {
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

Echelon reduced_row_echelon(const RationalMatrix& m) {
    const std::size_t cols = m.cols();
    std::vector<IntRow> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        IntRow row = primitive(m.row(r));
        if (std::any_of(row.begin(), row.end(), [](const Integer& x) { return x != 0; })) rows.push_back(std::move(row));
    }

    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
        // Smallest nonzero entry as pivot keeps the multipliers small.
        std::size_t best = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            if (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c])) best = r;
        }
        if (best == rows.size()) continue;
        std::swap(rows[next], rows[best]);
        const IntRow& pivot_row = rows[next];
        const Integer p = pivot_row[c];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][c] == 0) continue;
            IntRow& target = rows[r];
            const Integer a = target[c];
            Integer g;
            mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
            const Integer scale_target = p / g;
            const Integer scale_pivot = a / g;
            for (std::size_t j = 0; j < cols; ++j) {
                target[j] = scale_target * target[j] - scale_pivot * pivot_row[j];
            }
            divide_content(target);
        }
        pivots.push_back(c);
        ++next;
    }

    Echelon out{RationalMatrix(0, cols), pivots};
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Integer& p = rows[r][pivots[r]];
        std::vector<Rational> row(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            row[j] = Rational(rows[r][j], p);
            row[j].canonicalize();
        }
        out.rref.append_row(row);
    }
    return out;
}

RationalMatrix nullspace(const RationalMatrix& m) {
    const Echelon e = reduced_row_echelon(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;

    RationalMatrix basis(0, cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rref(r, free);
        basis.append_row(v);
    }
    if (basis.rows() == 0) return basis;
    return reduced_row_echelon(basis).rref;
}

std::size_t rank(const RationalMatrix& m) {
    return reduced_row_echelon(m).pivots.size();
}

bool in_row_space(const Echelon& e, const std::vector<Rational>& v) {
    if (v.size() != e.rref.cols()) throw InvalidArgument("vector length mismatch");
    std::vector<Rational> residual = v;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        const Rational factor = residual[e.pivots[r]];
        if (factor == 0) continue;
        for (std::size_t j = 0; j < residual.size(); ++j) residual[j] -= factor * e.rref(r, j);
    }
    return std::all_of(residual.begin(), residual.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace lnd
