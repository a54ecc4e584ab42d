#include "spcurv/snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace spcurv {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("snf: overflow");
    return r;
}

long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("snf: overflow");
    return r;
}

void add_row(IntMatrix& m, size_t dst, size_t src, long long factor) {
    for (size_t j = 0; j < m[dst].size(); ++j)
        m[dst][j] = checked_sub(m[dst][j], checked_mul(-factor, m[src][j]));
}

void add_col(IntMatrix& m, size_t dst, size_t src, long long factor) {
    for (size_t i = 0; i < m.size(); ++i)
        m[i][dst] = checked_sub(m[i][dst], checked_mul(-factor, m[i][src]));
}

void swap_rows(IntMatrix& m, size_t a, size_t b) { std::swap(m[a], m[b]); }

void swap_cols(IntMatrix& m, size_t a, size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

void negate_row(IntMatrix& m, size_t r) {
    for (auto& v : m[r]) v = -v;
}

}  // namespace

std::vector<long long> SmithResult::diagonal() const {
    std::vector<long long> out;
    const size_t n = d.empty() ? 0 : std::min(d.size(), d[0].size());
    for (size_t i = 0; i < n; ++i) out.push_back(d[i][i]);
    return out;
}

SmithResult smith_normal_form(const IntMatrix& a) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    for (const auto& r : a)
        if (r.size() != cols) throw std::invalid_argument("snf: ragged matrix");

    SmithResult res;
    res.d = a;
    res.u.assign(rows, std::vector<long long>(rows, 0));
    res.v.assign(cols, std::vector<long long>(cols, 0));
    for (size_t i = 0; i < rows; ++i) res.u[i][i] = 1;
    for (size_t j = 0; j < cols; ++j) res.v[j][j] = 1;

    IntMatrix& d = res.d;
    const size_t nmin = std::min(rows, cols);

    for (size_t k = 0; k < nmin; ++k) {
        for (;;) {
            // Locate the smallest nonzero entry of the trailing submatrix.
            size_t pi = k, pj = k;
            long long best = 0;
            for (size_t i = k; i < rows; ++i)
                for (size_t j = k; j < cols; ++j) {
                    const long long v = std::llabs(d[i][j]);
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (best == 0) break;  // trailing block is zero
            if (pi != k) {
                swap_rows(d, k, pi);
                swap_rows(res.u, k, pi);
            }
            if (pj != k) {
                swap_cols(d, k, pj);
                swap_cols(res.v, k, pj);
            }

            bool clean = true;
            for (size_t i = k + 1; i < rows; ++i)
                if (d[i][k] != 0) {
                    const long long q = d[i][k] / d[k][k];
                    add_row(d, i, k, -q);
                    add_row(res.u, i, k, -q);
                    if (d[i][k] != 0) clean = false;
                }
            for (size_t j = k + 1; j < cols; ++j)
                if (d[k][j] != 0) {
                    const long long q = d[k][j] / d[k][k];
                    add_col(d, j, k, -q);
                    add_col(res.v, j, k, -q);
                    if (d[k][j] != 0) clean = false;
                }
            if (!clean) continue;

            // Pivot divides the rest of its row and column; enforce
            // divisibility of the trailing block.
            bool divides_all = true;
            for (size_t i = k + 1; i < rows && divides_all; ++i)
                for (size_t j = k + 1; j < cols && divides_all; ++j)
                    if (d[i][j] % d[k][k] != 0) {
                        add_row(d, k, i, 1);
                        add_row(res.u, k, i, 1);
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (d[k][k] < 0) {
            negate_row(d, k);
            negate_row(res.u, k);
        }
    }
    return res;
}

std::optional<std::vector<long long>> solve_integer_linear(
    const IntMatrix& a, const std::vector<long long>& b) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("solve_integer_linear: size mismatch");

    const SmithResult s = smith_normal_form(a);
    // U A V = D, so A x = b iff D y = U b with x = V y.
    std::vector<long long> ub(rows, 0);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < rows; ++j)
            ub[i] = checked_sub(ub[i], checked_mul(-s.u[i][j], b[j]));

    std::vector<long long> y(cols, 0);
    const size_t nmin = std::min(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        const long long di = i < nmin ? s.d[i][i] : 0;
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % di != 0) return std::nullopt;
            y[i] = ub[i] / di;
        }
    }
    std::vector<long long> x(cols, 0);
    for (size_t i = 0; i < cols; ++i)
        for (size_t j = 0; j < cols; ++j)
            x[i] = checked_sub(x[i], checked_mul(-s.v[i][j], y[j]));
    return x;
}

QuotientGroup quotient_group(const AbelianPresentation& pres) {
    if (pres.rank < 0) throw std::invalid_argument("quotient_group: negative rank");
    IntMatrix rel = pres.relations;
    for (const auto& r : rel)
        if (static_cast<int>(r.size()) != pres.rank)
            throw std::invalid_argument("quotient_group: relation arity mismatch");
    if (pres.modulus) {
        for (int i = 0; i < pres.rank; ++i) {
            std::vector<long long> row(static_cast<size_t>(pres.rank), 0);
            row[static_cast<size_t>(i)] = *pres.modulus;
            rel.push_back(std::move(row));
        }
    }

    QuotientGroup out;
    if (rel.empty()) {
        out.free_rank = pres.rank;
        return out;
    }
    const SmithResult s = smith_normal_form(rel);
    int nonzero = 0;
    for (long long d : s.diagonal())
        if (d != 0) {
            ++nonzero;
            if (d > 1) out.torsion.push_back(d);
        }
    out.free_rank = pres.rank - nonzero;
    return out;
}

}  // namespace spcurv
