#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace lamskel {

using BigInt = boost::multiprecision::cpp_int;

// Exact counting sequences indexed by generating-function exponent.
// Indexing convention (one place, used everywhere): a skeleton family's
// count at size s sits at exponent s+1 (SizePolicy::gf_offset). Callers pick
// the indexing explicitly via at_exponent / at_size.
struct CoefficientTable {
    std::string name;
    std::vector<BigInt> coeffs;  // coeffs[e] = coefficient at exponent e

    std::size_t max_exponent() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    const BigInt& at_exponent(std::size_t e) const { return coeffs.at(e); }
    const BigInt& at_size(std::size_t s) const { return coeffs.at(s + 1); }
};

// m_n from M = z + zM + zM^2 (Motzkin trees counted with the lambda-term
// size weights; exponent = size + 1).
CoefficientTable motzkin_coeffs(std::size_t upto_exponent);

// b_n from B = z + zB^2 (binary leaf/app trees, no lambda): 1,0,1,0,2,0,5,...
// starting at exponent 1; Catalan numbers interleaved with zeros.
CoefficientTable binary_coeffs(std::size_t upto_exponent);

// c_n from C = zC^2 + zM: closable skeleton counts.
CoefficientTable closable_coeffs(std::size_t upto_exponent);

// u_n from U = zU^2 + zB: uniquely closable skeleton counts.
CoefficientTable uniquely_closable_coeffs(std::size_t upto_exponent);

BigInt catalan(std::size_t k);

// Linear recurrence with polynomial coefficients:
//   sum_{j=0..order} P_j(n) * t_{n+j} = 0  for all n >= 0,
// seeded with t_0..t_{order-1}. Advancing solves for t_{n+order} and
// requires exact divisibility by P_order(n) at every step.
struct RecurrenceSpec {
    std::string name;
    std::size_t order = 0;
    // poly[j][d] = coefficient of n^d in P_j(n); j = 0..order
    std::vector<std::vector<long long>> poly;
    std::vector<BigInt> initial;  // t_0..t_{order-1}
};

// Throws std::runtime_error naming the failing index on a zero leading
// coefficient or a non-exact division (either signals a transcription bug).
CoefficientTable recurrence_advance(const RecurrenceSpec& spec, std::size_t upto_exponent);

// The production recurrence for closable counts (order 6, degree-5
// coefficients) and the longer order-9 form derived from the holonomic
// equation; both must reproduce closable_coeffs exactly.
RecurrenceSpec closable_recurrence();
RecurrenceSpec closable_recurrence_long();

// Order-8 recurrence for uniquely closable counts.
RecurrenceSpec uniquely_closable_recurrence();

enum class AsymptoticFamily { Motzkin, Closable, UniquelyClosable };

// Leading-order estimate of the coefficient at GF exponent n:
//   motzkin            sqrt(3)/(2 sqrt(pi)) * 3^n * n^{-3/2}
//   closable           sqrt(15)/(10 sqrt(pi)) * 3^n * n^{-3/2}
//   uniquely closable  2^{1/4+n} / (4 Gamma(3/4) n^{5/4})
// The closable/motzkin ratio is 1/sqrt(5) for every n.
double asymptotic_estimate(AsymptoticFamily family, std::uint64_t n);

}  // namespace lamskel
