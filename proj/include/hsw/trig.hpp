#pragma once

// Formal sine and cosine series over the harmonic algebra.
//
//   Taylor form:      S^T_{z,k}(x) = sum_{n>=0} s_{z^n,k} s_{z^{n-1},k} ... s_{z,k} x^{(n+1)k-1}
//   Reflection form:  S^R_{z,k}(x) = x^{k-1} exp_*( sum_{n>=1} s_{z^n,nk} x^{nk} / n )
//
// The two agree for every z and k; S_z denotes the k = 2 series and C_z its derivative.

#include "hsw/halg.hpp"
#include "hsw/report.hpp"
#include "hsw/series.hpp"

namespace hsw {

/// s_{z^n,k} s_{z^{n-1},k} ... s_{z,k}; the empty word for n = 0.
Word sine_chain(const MonoidElement& z, std::size_t k, std::size_t n);

Series1 sine_taylor(const MonoidElement& z, int k, int order);
Series1 sine_reflection(const MonoidElement& z, int k, int order);
/// sum_{n>=1} s_{z^n,nk} x^{nk} / n, the argument of exp_* in the reflection form.
Series1 reflection_exponent(const MonoidElement& z, int k, int order);

/// S_z = S^T_{z,2}.
Series1 sine(const MonoidElement& z, int order);
/// C_z = S_z'.
Series1 cosine(const MonoidElement& z, int order);

/// n * chain_n.
HPoly coincidence_lhs(const MonoidElement& z, int k, int n);
/// sum_{i=1}^{n} s_{z^i,ik} * chain_{n-i}.
HPoly coincidence_rhs(const MonoidElement& z, int k, int n);

/// Series equality S^T = S^R up to `order` and the coefficient identity for 1 <= n <= max_n.
Report verify_coincidence(const MonoidElement& z, int k, int max_n, int order = kDefaultSeriesOrder);

/// S^R_{z^2,2}(x) = x S^R_{z,1}(x) * S^R_{z,1}(-x) up to `order`.
Report verify_reflection_product(const MonoidElement& z, int order);

}  // namespace hsw
