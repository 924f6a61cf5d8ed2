#pragma once

#include "akzeta/poly_yw.hpp"

#include <vector>

namespace akzeta {

// Values indexed from 0; exact rationals.
using RationalSeq = std::vector<Rational>;

// Unsigned Stirling numbers of the first kind: prod_{j=0}^{n-1}(X+j)
// = sum_m [n m] X^m.
Integer stirling1(unsigned n, unsigned m);

// Stirling numbers of the second kind via the alternating binomial sum
// {m n} = ((-1)^n / n!) sum_j (-1)^j C(n,j) j^m.
Integer stirling2(unsigned m, unsigned n);

// Same quantity from the triangular recurrence, used as a cross-check.
Integer stirling2_recurrence(unsigned m, unsigned n);

// Poly-Bernoulli numbers of B-type: Li_k(1-e^{-t})/(1-e^{-t}), coefficients
// n! [t^n], n = 0..N.  Valid for every integer k.
RationalSeq poly_bernoulli_B(int N, int k);

// C-type: Li_k(1-e^{-t})/(e^t-1).
RationalSeq poly_bernoulli_C(int N, int k);

// Closed Stirling-sum form B_m^{(k)} = (-1)^m sum_n (-1)^n n!/(n+1)^k {m n}.
Rational poly_bernoulli_B_closed(unsigned m, int k);

// Poly-Bernoulli polynomials B_m^{(k)}(w): e^{-wt} Li_k(1-e^{-t})/(1-e^{-t});
// B_m^{(k)}(0) = B_m^{(k)}, B_m^{(k)}(1) = C_m^{(k)}.  Returns rows 0..N as
// polynomials in w.
std::vector<PolyYW> poly_bernoulli_poly_row(int N, int k);
PolyYW poly_bernoulli_poly(unsigned m, int k);

// Classical Bernoulli numbers in the t/(e^t-1) convention (B_1 = -1/2);
// identical to C_n^{(1)}.
RationalSeq bernoulli_numbers(int N);

}  // namespace akzeta
