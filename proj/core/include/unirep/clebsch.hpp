#pragma once

#include <cstddef>
#include <string>

#include "unirep/linalg.hpp"
#include "unirep/scalar.hpp"

namespace unirep {

/// Integer or half-integer, stored doubled to stay in exact integers.
struct HalfInt {
    int doubled = 0;

    static constexpr HalfInt from_doubled(int d) { return HalfInt{d}; }
    static constexpr HalfInt whole(int n) { return HalfInt{2 * n}; }

    bool is_integer() const { return doubled % 2 == 0; }
    bool is_negative() const { return doubled < 0; }

    friend HalfInt operator+(HalfInt a, HalfInt b) { return HalfInt{a.doubled + b.doubled}; }
    friend HalfInt operator-(HalfInt a, HalfInt b) { return HalfInt{a.doubled - b.doubled}; }
    HalfInt operator-() const { return HalfInt{-doubled}; }
    auto operator<=>(const HalfInt&) const = default;

    std::string str() const;
};

/// True iff j1+j2+j3 is an integer and the three lengths close a triangle.
/// Throws std::invalid_argument on negative arguments.
bool triangle_ok(HalfInt j1, HalfInt j2, HalfInt j3);

/// Triangle coefficient Delta(j1,j2,j3) =
/// sqrt((j1+j2-j3)!(j1-j2+j3)!(-j1+j2+j3)!/(j1+j2+j3+1)!), zero when the
/// triangle condition fails.
Scalar delta_coefficient(HalfInt j1, HalfInt j2, HalfInt j3);

/// Exact Clebsch-Gordan coefficient CG(j1,m1;j2,m2|j3,m3).
/// Out-of-range or parity-mismatched arguments give 0. Results are
/// memoized; the cache is safe under concurrent lookup and insert.
Scalar cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j3, HalfInt m3);

/// Convenience overload taking doubled values directly.
Scalar cg_doubled(int dj1, int dm1, int dj2, int dm2, int dj3, int dm3);

std::size_t cg_cache_size();
void cg_cache_set_limit(std::size_t max_entries);
void cg_cache_clear();

// Closed forms for the four extreme couplings of V(a) (x) V(b); a,b are
// sl(2) highest weights, 0 <= i <= a, 0 <= j <= b. Each evaluates its own
// factorial product, independent of the general cg() sum.

/// CG(a/2,a/2-i; b/2,b/2-j | (a+b)/2,(a+b)/2-i-j): coupling into V(a+b).
Scalar cg_extreme_sum(int a, int b, int i, int j);
/// CG(a/2,a/2-i; b/2,j-b/2 | (a-b)/2,(a-b)/2-i+j): coupling into V(a-b), a >= b.
Scalar cg_extreme_diff_left(int a, int b, int i, int j);
/// CG(a/2,i-a/2; b/2,b/2-j | (b-a)/2,(b-a)/2+i-j): coupling into V(b-a), b >= a.
Scalar cg_extreme_diff_right(int a, int b, int i, int j);
/// CG(a/2,a/2-i; b/2,b/2-j | c/2,c/2) at c = a+b-2(i+j): highest-weight slot.
Scalar cg_extreme_edge(int a, int b, int i, int j);

/// Highest-weight-basis embedding V(c) -> V(a) (x) V(b): image of v_k^c as a
/// coordinate vector on the tensor basis v_i^a (x) v_j^b, index i*(b+1)+j.
SparseVec coupled_vector(int a, int b, int c, int k);

} // namespace unirep
