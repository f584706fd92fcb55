#include "htoc/fp.hpp"

#include <algorithm>

namespace htoc::fp {

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_prime_power(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            while (n % d == 0) n /= d;
            return n == 1;
        }
    }
    return true;  // n is prime
}

FpScalar::FpScalar(u32 p_, u64 v) : p(p_) {
    if (!is_prime(p_)) throw InputError("FpScalar: modulus must be prime");
    value = static_cast<u32>(v % p_);
}

u32 add_mod(u32 a, u32 b, u32 p) { return (a + b) % p; }
u32 sub_mod(u32 a, u32 b, u32 p) { return (a + p - b % p) % p; }
u32 mul_mod(u32 a, u32 b, u32 p) {
    return static_cast<u32>((static_cast<u64>(a) * b) % p);
}

u32 pow_mod(u32 a, u64 e, u32 p) {
    u32 base = a % p;
    u32 acc = 1 % p;
    while (e) {
        if (e & 1) acc = mul_mod(acc, base, p);
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    return acc;
}

u32 inv_mod(u32 a, u32 p) {
    if (a % p == 0) throw InputError("inv_mod: zero has no inverse");
    return pow_mod(a, p - 2, p);  // Fermat; p prime
}

FpVector::FpVector(u32 p_, std::vector<u32> c) : p(p_), coords(std::move(c)) {
    if (!is_prime(p_)) throw InputError("FpVector: modulus must be prime");
    for (auto& x : coords) x %= p;
}

FpVector::FpVector(u32 p_, std::size_t n, u32 fill) : p(p_), coords(n, fill % p_) {
    if (!is_prime(p_)) throw InputError("FpVector: modulus must be prime");
}

bool FpVector::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](u32 c) { return c == 0; });
}

namespace {
void require_compatible(const FpVector& a, const FpVector& b) {
    if (a.p != b.p || a.size() != b.size())
        throw InputError("FpVector: mismatched modulus or length");
}
}  // namespace

FpVector add(const FpVector& a, const FpVector& b) {
    require_compatible(a, b);
    FpVector out(a.p, a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = add_mod(a.coords[i], b.coords[i], a.p);
    return out;
}

FpVector sub(const FpVector& a, const FpVector& b) {
    require_compatible(a, b);
    FpVector out(a.p, a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = sub_mod(a.coords[i], b.coords[i], a.p);
    return out;
}

FpVector scale(u32 c, const FpVector& a) {
    FpVector out(a.p, a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out.coords[i] = mul_mod(c % a.p, a.coords[i], a.p);
    return out;
}

FpVector negate(const FpVector& a) { return scale(a.p - 1, a); }

u32 dot(const FpVector& a, const FpVector& b) {
    require_compatible(a, b);
    u64 acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += static_cast<u64>(a.coords[i]) * b.coords[i];
    return static_cast<u32>(acc % a.p);
}

void FpMatrix::append_row(const FpVector& v) {
    if (v.p != p || v.size() != cols) throw InputError("FpMatrix: row shape mismatch");
    rows.push_back(v.coords);
}

void FpMatrix::append_row(std::vector<u32> r) {
    if (r.size() != cols) throw InputError("FpMatrix: row shape mismatch");
    for (auto& x : r) x %= p;
    rows.push_back(std::move(r));
}

std::vector<std::size_t> row_reduce(FpMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows.size() && m.rows[pivot][col] == 0) ++pivot;
        if (pivot == m.rows.size()) continue;
        std::swap(m.rows[row], m.rows[pivot]);
        u32 inv = inv_mod(m.rows[row][col], m.p);
        for (std::size_t j = col; j < m.cols; ++j) m.rows[row][j] = mul_mod(m.rows[row][j], inv, m.p);
        for (std::size_t r2 = 0; r2 < m.rows.size(); ++r2) {
            if (r2 == row || m.rows[r2][col] == 0) continue;
            u32 f = m.rows[r2][col];
            for (std::size_t j = col; j < m.cols; ++j)
                m.rows[r2][j] = sub_mod(m.rows[r2][j], mul_mod(f, m.rows[row][j], m.p), m.p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(FpMatrix m) { return row_reduce(m).size(); }

SolveResult gauss_solve(const FpLinearSystem& sys) {
    if (sys.lhs.rows.size() != sys.rhs.size())
        throw InputError("gauss_solve: rhs length mismatch");
    FpMatrix aug(sys.lhs.p, sys.lhs.cols + 1);
    for (std::size_t i = 0; i < sys.lhs.rows.size(); ++i) {
        std::vector<u32> r = sys.lhs.rows[i];
        r.push_back(sys.rhs[i] % sys.lhs.p);
        aug.rows.push_back(std::move(r));
    }
    std::vector<std::size_t> pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == sys.lhs.cols)
        return {SolveOutcome::Inconsistent, FpVector()};
    if (pivots.size() < sys.lhs.cols) return {SolveOutcome::Multiple, FpVector()};
    FpVector sol(sys.lhs.p, sys.lhs.cols);
    for (std::size_t i = 0; i < pivots.size(); ++i) sol.coords[pivots[i]] = aug.rows[i].back();
    return {SolveOutcome::Unique, sol};
}

std::vector<FpVector> null_space(const FpMatrix& m) {
    FpMatrix red = m;
    std::vector<std::size_t> pivots = row_reduce(red);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<FpVector> basis;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        FpVector v(m.p, m.cols);
        v.coords[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v.coords[pivots[i]] = sub_mod(0, red.rows[i][free_col], m.p);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const std::vector<FpVector>& span_set, const FpVector& target) {
    // consistency of (columns = span_set) x = target
    FpLinearSystem sys;
    sys.lhs = FpMatrix(target.p, span_set.size());
    for (std::size_t i = 0; i < target.size(); ++i) {
        std::vector<u32> row(span_set.size());
        for (std::size_t j = 0; j < span_set.size(); ++j) {
            if (span_set[j].p != target.p || span_set[j].size() != target.size())
                throw InputError("in_span: shape mismatch");
            row[j] = span_set[j].coords[i];
        }
        sys.lhs.rows.push_back(std::move(row));
        sys.rhs.push_back(target.coords[i]);
    }
    return gauss_solve(sys).outcome != SolveOutcome::Inconsistent;
}

std::vector<FpVector> span_basis(u32 p, std::size_t dim, const std::vector<FpVector>& span_set) {
    FpMatrix m(p, dim);
    for (const auto& v : span_set) m.append_row(v);
    std::size_t r = row_reduce(m).size();
    std::vector<FpVector> basis;
    for (std::size_t i = 0; i < r; ++i) basis.emplace_back(p, m.rows[i]);
    return basis;
}

bool same_span(u32 p, std::size_t dim, const std::vector<FpVector>& a,
               const std::vector<FpVector>& b) {
    return span_basis(p, dim, a) == span_basis(p, dim, b);
}

u32 determinant(FpMatrix m) {
    if (m.rows.size() != m.cols) throw InputError("determinant: matrix not square");
    u32 det = 1;
    std::size_t n = m.cols;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.rows[pivot][col] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != col) {
            std::swap(m.rows[col], m.rows[pivot]);
            det = mul_mod(det, m.p - 1, m.p);
        }
        det = mul_mod(det, m.rows[col][col], m.p);
        u32 inv = inv_mod(m.rows[col][col], m.p);
        for (std::size_t r2 = col + 1; r2 < n; ++r2) {
            if (m.rows[r2][col] == 0) continue;
            u32 f = mul_mod(m.rows[r2][col], inv, m.p);
            for (std::size_t j = col; j < n; ++j)
                m.rows[r2][j] = sub_mod(m.rows[r2][j], mul_mod(f, m.rows[col][j], m.p), m.p);
        }
    }
    return det;
}

}  // namespace htoc::fp
