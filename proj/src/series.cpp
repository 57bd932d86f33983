#include "lamskel/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lamskel {

namespace {

// Convolution term sum_{i+j=n-1} a_i b_j.
BigInt convolve_at(const std::vector<BigInt>& a, const std::vector<BigInt>& b, std::size_t n) {
    BigInt acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[n - 1 - i];
    return acc;
}

}  // namespace

CoefficientTable motzkin_coeffs(std::size_t upto) {
    CoefficientTable t{"motzkin", {}};
    t.coeffs.resize(upto + 1);
    for (std::size_t n = 1; n <= upto; ++n) {
        BigInt v = convolve_at(t.coeffs, t.coeffs, n);
        if (n == 1) v += 1;
        v += t.coeffs[n - 1];
        t.coeffs[n] = v;
    }
    return t;
}

CoefficientTable binary_coeffs(std::size_t upto) {
    CoefficientTable t{"binary", {}};
    t.coeffs.resize(upto + 1);
    for (std::size_t n = 1; n <= upto; ++n) {
        BigInt v = convolve_at(t.coeffs, t.coeffs, n);
        if (n == 1) v += 1;
        t.coeffs[n] = v;
    }
    return t;
}

CoefficientTable closable_coeffs(std::size_t upto) {
    CoefficientTable m = motzkin_coeffs(upto);
    CoefficientTable t{"closable", {}};
    t.coeffs.resize(upto + 1);
    for (std::size_t n = 1; n <= upto; ++n)
        t.coeffs[n] = convolve_at(t.coeffs, t.coeffs, n) + m.coeffs[n - 1];
    return t;
}

CoefficientTable uniquely_closable_coeffs(std::size_t upto) {
    CoefficientTable b = binary_coeffs(upto);
    CoefficientTable t{"uniquely_closable", {}};
    t.coeffs.resize(upto + 1);
    for (std::size_t n = 1; n <= upto; ++n)
        t.coeffs[n] = convolve_at(t.coeffs, t.coeffs, n) + b.coeffs[n - 1];
    return t;
}

BigInt catalan(std::size_t k) {
    BigInt c = 1;
    for (std::size_t i = 0; i < k; ++i) {
        c *= 2 * (2 * BigInt(i) + 1);
        c /= BigInt(i) + 2;
    }
    return c;
}

namespace {

BigInt poly_eval(const std::vector<long long>& coeffs, std::size_t n) {
    BigInt acc = 0;
    for (std::size_t d = coeffs.size(); d-- > 0;) {
        acc *= static_cast<long long>(n);
        acc += coeffs[d];
    }
    return acc;
}

}  // namespace

CoefficientTable recurrence_advance(const RecurrenceSpec& spec, std::size_t upto) {
    if (spec.poly.size() != spec.order + 1 || spec.initial.size() != spec.order)
        throw std::invalid_argument("recurrence_advance: inconsistent spec '" + spec.name + "'");
    if (upto + 1 < spec.initial.size())
        throw std::invalid_argument("recurrence_advance: upto below recurrence order");

    CoefficientTable t{spec.name, spec.initial};
    t.coeffs.reserve(upto + 1);
    for (std::size_t n = 0; t.coeffs.size() <= upto; ++n) {
        BigInt sum = 0;
        for (std::size_t j = 0; j < spec.order; ++j)
            sum += poly_eval(spec.poly[j], n) * t.coeffs[n + j];
        BigInt lead = poly_eval(spec.poly[spec.order], n);
        if (lead == 0)
            throw std::runtime_error("recurrence '" + spec.name +
                                     "': zero leading coefficient at index " +
                                     std::to_string(n + spec.order));
        BigInt q, r;
        boost::multiprecision::divide_qr(BigInt(-sum), lead, q, r);
        if (r != 0)
            throw std::runtime_error("recurrence '" + spec.name +
                                     "': non-exact division at index " +
                                     std::to_string(n + spec.order));
        t.coeffs.push_back(q);
    }
    return t;
}

RecurrenceSpec closable_recurrence() {
    RecurrenceSpec s;
    s.name = "closable_recurrence";
    s.order = 6;
    s.poly = {
        {0, 87552, 161088, 90816, 18480, 1200},
        {95760, 231768, 202312, 79024, 13520, 800},
        {-9576, -44100, -38792, -12848, -1840, -100},
        {-23940, -66276, -48254, -14648, -1990, -100},
        {-167580, -260286, -147519, -38883, -4815, -225},
        {131670, 218739, 120441, 29817, 3435, 150},
        {-26334, -45405, -24128, -5642, -610, -25},
    };
    s.initial = {0, 0, 1, 1, 2, 5};
    return s;
}

RecurrenceSpec closable_recurrence_long() {
    RecurrenceSpec s;
    s.name = "closable_recurrence_long";
    s.order = 9;
    s.poly = {
        {0, 384, 384},
        {-480, -512, -32},
        {-2928, -2192, -368},
        {-504, -344, -56},
        {852, 188, -4},
        {2328, 1034, 110},
        {-390, -201, -21},
        {-1272, -327, -21},
        {648, 153, 9},
        {-90, -19, -1},
    };
    s.initial = {0, 0, 1, 1, 2, 5, 11, 26, 65};
    return s;
}

RecurrenceSpec uniquely_closable_recurrence() {
    RecurrenceSpec s;
    s.name = "uniquely_closable_recurrence";
    s.order = 8;
    s.poly = {
        {0, 256, 256},
        {-512, -640, -128},
        {-880, -704, -128},
        {152, -64, -32},
        {1324, 592, 64},
        {540, 232, 24},
        {-616, -200, -16},
        {-128, -32, -2},
        {72, 17, 1},
    };
    s.initial = {0, 0, 1, 0, 1, 1, 2, 2};
    return s;
}

double asymptotic_estimate(AsymptoticFamily family, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("asymptotic_estimate: n must be >= 1");
    const double nd = static_cast<double>(n);
    const double sqrt_pi = std::sqrt(std::numbers::pi);
    switch (family) {
        case AsymptoticFamily::Motzkin:
            return std::sqrt(3.0) / (2.0 * sqrt_pi) * std::pow(3.0, nd) * std::pow(nd, -1.5);
        case AsymptoticFamily::Closable:
            return std::sqrt(15.0) / (10.0 * sqrt_pi) * std::pow(3.0, nd) * std::pow(nd, -1.5);
        case AsymptoticFamily::UniquelyClosable:
            return std::pow(2.0, 0.25 + nd) /
                   (4.0 * std::tgamma(0.75) * std::pow(nd, 1.25));
    }
    throw std::invalid_argument("asymptotic_estimate: unknown family");
}

}  // namespace lamskel
