#include "htoc/fp_checks.hpp"

namespace htoc::fp {

namespace {

//! All vectors of F_p^n in mixed-radix order.
std::vector<FpVector> all_vectors(u32 p, std::size_t n) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    std::vector<FpVector> out;
    out.reserve(total);
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<u32> c(n);
        std::size_t rest = idx;
        for (std::size_t j = 0; j < n; ++j) {
            c[j] = static_cast<u32>(rest % p);
            rest /= p;
        }
        out.emplace_back(p, std::move(c));
    }
    return out;
}

SymPowerVector powered(const FpVector& v, const MonomialBasis& basis, const SymPowerHook& hook) {
    SymPowerVector s = sym_power(v, basis);
    if (hook) hook(s);
    return s;
}

}  // namespace

std::size_t sym_power_dimension(u32 p, std::size_t n) {
    return static_cast<std::size_t>(binomial(n + p - 2, p - 1));
}

bool check_line_lemma(u32 p, const FpVector& z, const FpVector& y, const SymPowerHook& hook) {
    if (z.p != p || y.p != p || z.size() != y.size())
        throw InputError("check_line_lemma: shape mismatch");
    MonomialBasis basis(y.size(), p - 1);
    std::vector<FpVector> line;
    line.reserve(p);
    for (u32 a = 0; a < p; ++a) {
        FpVector pt = add(z, scale(a, y));
        line.push_back(powered(pt, basis, hook).as_fp_vector());
    }
    return in_span(line, powered(y, basis, hook).as_fp_vector());
}

std::size_t check_span_rank(u32 p, std::size_t n, const SymPowerHook& hook) {
    MonomialBasis basis(n, p - 1);
    FpMatrix m(p, basis.size());
    for (const FpVector& y : all_vectors(p, n)) m.append_row(powered(y, basis, hook).as_fp_vector());
    return rank(std::move(m));
}

FractionCheck check_fraction_lemma(u32 p, std::size_t n, const FpVector& u,
                                   const std::vector<FpVector>& w_span,
                                   const SymPowerHook& hook) {
    if (u.p != p || u.size() != n) throw InputError("check_fraction_lemma: shape mismatch");
    if (u.is_zero()) throw InputError("check_fraction_lemma: u must be nonzero");
    MonomialBasis basis(n, p - 1);
    std::vector<FpVector> w_basis = span_basis(p, basis.size(), w_span);
    if (w_basis.size() >= basis.size())
        throw InputError("check_fraction_lemma: W must be a proper subspace");

    std::vector<std::size_t> members(p, 0), class_size(p, 0);
    for (const FpVector& y : all_vectors(p, n)) {
        u32 k = dot(y, u);
        class_size[k]++;
        if (in_span(w_basis, powered(y, basis, hook).as_fp_vector())) members[k]++;
    }
    FractionCheck out;
    out.holds = true;
    out.worst_class = 1;
    out.members = members[1];
    out.class_size = class_size[1];
    for (u32 k = 1; k < p; ++k) {
        if (members[k] * out.class_size > out.members * class_size[k]) {
            out.worst_class = k;
            out.members = members[k];
            out.class_size = class_size[k];
        }
        // members/class_size <= (p-1)/p, integer-exactly
        if (members[k] * p > class_size[k] * (p - 1)) out.holds = false;
    }
    return out;
}

LineBasisDeterminant line_basis_determinant(u32 p) {
    FpMatrix m(p, p);
    for (u32 a = 0; a < p; ++a) {
        std::vector<u32> row(p);
        for (u32 k = 0; k < p; ++k) {
            u32 binom = static_cast<u32>(binomial(p - 1, k) % p);
            row[k] = mul_mod(binom, pow_mod(a, k, p), p);
        }
        m.rows.push_back(std::move(row));
    }
    LineBasisDeterminant out;
    out.computed = determinant(std::move(m));
    u32 cf = 1;
    for (u32 k = 0; k < p; ++k) cf = mul_mod(cf, static_cast<u32>(binomial(p - 1, k) % p), p);
    for (u32 i = 0; i < p; ++i)
        for (u32 j = i + 1; j < p; ++j) cf = mul_mod(cf, j - i, p);
    out.closed_form = cf;
    return out;
}

}  // namespace htoc::fp
