#pragma once

//! Exact arithmetic over prime fields F_p and the small-matrix routines the
//! solvers need: row reduction, rank, right-hand-side solving, null spaces.
//! Everything is dense and integer-exact; p stays small (desk scale).

#include <optional>
#include <vector>

#include "htoc/common.hpp"

namespace htoc::fp {

bool is_prime(u64 n);
bool is_prime_power(u64 n);

//! Residue mod p with the modulus carried alongside.
struct FpScalar {
    u32 p;
    u32 value;

    FpScalar(u32 p_, u64 v);
};

u32 add_mod(u32 a, u32 b, u32 p);
u32 sub_mod(u32 a, u32 b, u32 p);
u32 mul_mod(u32 a, u32 b, u32 p);
u32 pow_mod(u32 a, u64 e, u32 p);   // 0^0 = 1
u32 inv_mod(u32 a, u32 p);          // a != 0 mod p

//! Coordinate vector over F_p.
struct FpVector {
    u32 p = 0;
    std::vector<u32> coords;

    FpVector() = default;
    FpVector(u32 p_, std::vector<u32> c);
    FpVector(u32 p_, std::size_t n, u32 fill = 0);

    std::size_t size() const { return coords.size(); }
    bool is_zero() const;
    bool operator==(const FpVector&) const = default;
};

FpVector add(const FpVector& a, const FpVector& b);
FpVector sub(const FpVector& a, const FpVector& b);
FpVector scale(u32 c, const FpVector& a);
FpVector negate(const FpVector& a);
u32 dot(const FpVector& a, const FpVector& b);

//! Dense row-major matrix over F_p.
struct FpMatrix {
    u32 p = 0;
    std::size_t cols = 0;
    std::vector<std::vector<u32>> rows;

    FpMatrix() = default;
    FpMatrix(u32 p_, std::size_t cols_) : p(p_), cols(cols_) {}

    void append_row(const FpVector& v);
    void append_row(std::vector<u32> r);
    void append_row(std::initializer_list<u32> r) { append_row(std::vector<u32>(r)); }
    std::size_t row_count() const { return rows.size(); }
};

//! Row echelon form in place (first-nonzero pivoting, exact F_p arithmetic).
//! Returns pivot column indices in order.
std::vector<std::size_t> row_reduce(FpMatrix& m);

std::size_t rank(FpMatrix m);

enum class SolveOutcome { Unique, Multiple, Inconsistent };

struct SolveResult {
    SolveOutcome outcome;
    FpVector solution;  // populated only for Unique
};

//! System of equations rows . x = rhs over F_p.
struct FpLinearSystem {
    FpMatrix lhs;
    std::vector<u32> rhs;
};

SolveResult gauss_solve(const FpLinearSystem& sys);

//! Basis of { x : m x = 0 }.
std::vector<FpVector> null_space(const FpMatrix& m);

//! True iff target lies in the span of the given vectors.
bool in_span(const std::vector<FpVector>& span_set, const FpVector& target);

//! Reduce a spanning set to an echelon basis of the same row space.
std::vector<FpVector> span_basis(u32 p, std::size_t dim, const std::vector<FpVector>& span_set);

//! True iff the two spanning sets generate the same subspace.
bool same_span(u32 p, std::size_t dim, const std::vector<FpVector>& a,
               const std::vector<FpVector>& b);

u32 determinant(FpMatrix m);  // square matrices only

}  // namespace htoc::fp
