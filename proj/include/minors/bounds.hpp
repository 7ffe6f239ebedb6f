#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "minors/errors.hpp"

namespace minors {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Exact element of the field Q(sqrt 2): value a + b*sqrt(2) with rational a, b.
class Q2 {
public:
    Q2() = default;
    Q2(BigRat a, BigRat b) : a_(std::move(a)), b_(std::move(b)) {}
    Q2(long long a, long long b) : a_(a), b_(b) {}

    BigRat rational_part() const { return a_; }
    BigRat sqrt2_part() const { return b_; }

    Q2 operator+(const Q2& o) const { return Q2(a_ + o.a_, b_ + o.b_); }
    Q2 operator-(const Q2& o) const { return Q2(a_ - o.a_, b_ - o.b_); }
    Q2 operator*(const Q2& o) const {
        return Q2(a_ * o.a_ + BigRat(2) * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    Q2 operator-() const { return Q2(-a_, -b_); }

    // Multiplicative inverse; nonzero values only.
    Q2 inverse() const {
        BigRat d = a_ * a_ - BigRat(2) * b_ * b_;
        if (d == 0) throw Error("division by zero in Q(sqrt 2)");
        return Q2(a_ / d, -b_ / d);
    }
    Q2 operator/(const Q2& o) const { return *this * o.inverse(); }

    // -1, 0, or +1.
    int sign() const;

    bool operator==(const Q2& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator<(const Q2& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const Q2& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const Q2& o) const { return o < *this; }
    bool operator>=(const Q2& o) const { return o <= *this; }

    double to_double() const;
    std::string str() const;

private:
    BigRat a_, b_;
};

// tau = 2*sqrt(2)/(sqrt(2)-1) = 4 + 2*sqrt(2), exactly.
Q2 tau_exact();
double tau();

// Smallest integer m with value <= base^m; requires base > 1 and value > 0.
int ceil_log(const Q2& base, const Q2& value);

// Smallest integer >= x.
long long ceil_q2(const Q2& x);

// f(x) = max{ceil(log_tau(tau*x/(4*sqrt 2))), 0} for x >= 1 and f(0) = 0.
// Throws on 0 < x < 1 (outside f's domain).
int f_eval(const Q2& x, const Q2& tau = tau_exact());
int f_eval(double x);

// r = 2*alpha - ceil(log_tau(tau*alpha/2)); equals 2*alpha - f(2*sqrt(2)*alpha).
int bound_r(int alpha);

struct PropertyResult {
    std::string name;
    bool pass = true;
    std::string counterexample;  // first failure, empty when pass
};

// Verifies properties P1..P11 of f for integer arguments up to x_max and a
// sampled grid of non-integer ones. `tau` may be perturbed to show the
// checker rejects wrong constants.
std::vector<PropertyResult> check_f_properties(int x_max, const Q2& tau = tau_exact());

}  // namespace minors
