#include "minors/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace minors {

int Q2::sign() const {
    int sa = (a_ > 0) - (a_ < 0);
    int sb = (b_ > 0) - (b_ < 0);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with 2 b^2.
    BigRat lhs = a_ * a_;
    BigRat rhs = BigRat(2) * b_ * b_;
    if (lhs == rhs) return 0;
    return (lhs > rhs) ? sa : sb;
}

double Q2::to_double() const {
    return a_.convert_to<double>() + b_.convert_to<double>() * std::sqrt(2.0);
}

std::string Q2::str() const {
    std::ostringstream os;
    os << a_;
    if (b_ != 0) os << (b_ > 0 ? " + " : " - ") << boost::multiprecision::abs(b_) << "*sqrt2";
    return os.str();
}

Q2 tau_exact() { return Q2(4, 2); }
double tau() { return tau_exact().to_double(); }

namespace {

Q2 pow_q2(const Q2& base, int e) {
    Q2 acc(1, 0);
    for (int i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

}  // namespace

int ceil_log(const Q2& base, const Q2& value) {
    if (!(base > Q2(1, 0))) throw PreconditionError("logarithm base must exceed 1");
    if (value.sign() <= 0) throw PreconditionError("logarithm argument must be positive");
    double est = std::log(value.to_double()) / std::log(base.to_double());
    int m = static_cast<int>(std::llround(std::floor(est))) - 1;
    auto at_least_value = [&](int e) {
        if (e >= 0) return pow_q2(base, e) >= value;
        return Q2(1, 0) >= value * pow_q2(base, -e);
    };
    int guard = 0;
    while (!at_least_value(m)) {
        ++m;
        if (++guard > 256) throw Error("ceil_log failed to converge");
    }
    while (guard++ <= 256 && at_least_value(m - 1)) --m;
    return m;
}

long long ceil_q2(const Q2& x) {
    long long c = static_cast<long long>(std::llround(std::ceil(x.to_double()))) - 2;
    while (Q2(c, 0) < x) ++c;
    return c;
}

int f_eval(const Q2& x, const Q2& tau) {
    if (x.sign() == 0) return 0;
    if (x < Q2(1, 0)) throw PreconditionError("f is undefined on (0, 1)");
    // y = tau * x / (4 sqrt 2);  1/(4 sqrt 2) = sqrt2/8.
    Q2 y = tau * x * Q2(BigRat(0), BigRat(1, 8));
    return std::max(ceil_log(tau, y), 0);
}

int f_eval(double x) {
    if (x == 0.0) return 0;
    if (x < 0.0 || !std::isfinite(x)) throw PreconditionError("f requires a finite non-negative argument");
    // Lift the double exactly into a rational.
    int e = 0;
    double m = std::frexp(x, &e);
    auto num = BigInt(static_cast<long long>(std::ldexp(m, 53)));
    BigRat r(num);
    int shift = e - 53;
    if (shift >= 0)
        r *= BigRat(BigInt(1) << shift);
    else
        r /= BigRat(BigInt(1) << (-shift));
    return f_eval(Q2(r, BigRat(0)));
}

int bound_r(int alpha) {
    if (alpha < 1) throw PreconditionError("bound_r requires alpha >= 1");
    // tau*alpha/2 = (2 + sqrt2) * alpha.
    Q2 arg(BigRat(2) * alpha, BigRat(alpha));
    return 2 * alpha - ceil_log(tau_exact(), arg);
}

namespace {

struct Checker {
    const Q2 tau;
    const int x_max;
    std::vector<PropertyResult> out;

    int f(const Q2& x) const { return f_eval(x, tau); }

    void report(const std::string& name, bool pass, const std::string& ce) {
        out.push_back({name, pass, pass ? "" : ce});
    }

    static Q2 s2(long long k) { return Q2(0, k); }  // k*sqrt2

    std::vector<Q2> real_grid() const {
        std::vector<Q2> g;
        for (long long v : {1, 2, 3, 4, 5, 7, 9, 12, 20, 40, 90, 200, 350, 500}) g.push_back(Q2(v, 0));
        for (long long v : {3, 5, 7, 9, 11, 25, 199}) g.push_back(Q2(BigRat(v, 2), BigRat(0)));
        for (long long v : {1, 2, 3, 10, 60, 340}) g.push_back(s2(v));
        g.push_back(Q2(1, 1));
        g.push_back(Q2(3, 2));
        g.push_back(Q2(BigRat(7, 3), BigRat(1, 2)));
        g.push_back(Q2(100, 3));
        return g;
    }

    void run() {
        check_p1();
        check_p2();
        check_p3();
        check_p4();
        check_p5();
        check_p6();
        check_p7();
        check_p8();
        check_p9();
        check_p10();
        check_p11();
    }

    void check_p1() { report("P1: f(0) = 0", f(Q2(0, 0)) == 0, "f(0) != 0"); }

    void check_p2() {
        int v = f(s2(4));
        report("P2: f(4*sqrt2) <= 1", v <= 1, "f(4*sqrt2) = " + std::to_string(v));
    }

    void check_p3() {
        for (const Q2& x : real_grid()) {
            if (f(tau * x) > 1 + f(x)) {
                report("P3: f(tau*x) <= 1 + f(x)", false, "x = " + x.str());
                return;
            }
        }
        report("P3: f(tau*x) <= 1 + f(x)", true, "");
    }

    void check_p4() {
        auto grid = real_grid();
        for (const Q2& x : grid)
            for (const Q2& y : grid) {
                Q2 arg = (x + y) * s2(2);
                if (f(arg) > f(x) + f(y)) {
                    report("P4: f(2sqrt2(x+y)) <= f(x) + f(y)", false,
                           "x = " + x.str() + ", y = " + y.str());
                    return;
                }
            }
        report("P4: f(2sqrt2(x+y)) <= f(x) + f(y)", true, "");
    }

    std::vector<int> int_table(const Q2& mult) const {
        std::vector<int> t(static_cast<std::size_t>(x_max) + 1, 0);
        for (int v = 1; v <= x_max; ++v) t[static_cast<std::size_t>(v)] = f(mult * Q2(v, 0));
        return t;
    }

    void check_p5() {
        auto t = int_table(Q2(1, 0));
        for (int x = 0; x <= x_max; ++x)
            for (int y = x; y <= x_max; ++y)
                if (t[static_cast<std::size_t>(y)] > t[static_cast<std::size_t>(x)] + y - x) {
                    report("P5: f(y) <= f(x) + y - x", false,
                           "x = " + std::to_string(x) + ", y = " + std::to_string(y));
                    return;
                }
        report("P5: f(y) <= f(x) + y - x", true, "");
    }

    void check_p6() {
        std::vector<Q2> rs = {Q2(1, 0), Q2(BigRat(3, 2), BigRat(0)), Q2(2, 0), Q2(BigRat(7, 3), BigRat(0)),
                              Q2(0, 1), Q2(1, 1), tau};
        for (const Q2& r : rs) {
            if (r < Q2(1, 0)) continue;
            auto t = int_table(r);
            for (int x = 1; x <= x_max; ++x)
                for (int y = x; y <= x_max; ++y)
                    if (t[static_cast<std::size_t>(y)] > t[static_cast<std::size_t>(x)] + y - x) {
                        report("P6: f(ry) <= f(rx) + y - x", false,
                               "r = " + r.str() + ", x = " + std::to_string(x) +
                                   ", y = " + std::to_string(y));
                        return;
                    }
        }
        report("P6: f(ry) <= f(rx) + y - x", true, "");
    }

    void check_p7() {
        auto grid = real_grid();
        std::sort(grid.begin(), grid.end());
        for (std::size_t i = 1; i < grid.size(); ++i)
            if (f(grid[i - 1]) > f(grid[i])) {
                report("P7: f non-decreasing, f(sum) <= sum f", false,
                       "x = " + grid[i - 1].str() + " > y = " + grid[i].str());
                return;
            }
        for (const Q2& x : grid)
            for (const Q2& y : grid) {
                Q2 z = x + y + Q2(1, 0);
                if (f(x + y + z) > f(x) + f(y) + f(z)) {
                    report("P7: f non-decreasing, f(sum) <= sum f", false,
                           "x = " + x.str() + ", y = " + y.str() + ", z = " + z.str());
                    return;
                }
            }
        report("P7: f non-decreasing, f(sum) <= sum f", true, "");
    }

    void check_p8() {
        const std::string name = "P8: ceil(sqrt2(x-1)) >= tau x/(tau - sqrt2) or f(2sqrt2 x) <= f(tau)";
        Q2 denom = tau - s2(1);
        if (denom.sign() <= 0) {
            report(name, false, "tau <= sqrt2 makes the bound ill-formed");
            return;
        }
        Q2 factor = tau / denom;
        int f_tau = f(tau);
        for (int x = 1; x <= x_max; ++x) {
            bool first = Q2(ceil_q2(s2(1) * Q2(x - 1, 0)), 0) >= factor * Q2(x, 0);
            bool second = f(s2(2) * Q2(x, 0)) <= f_tau;
            if (!first && !second) {
                report(name, false,
                       "x = " + std::to_string(x) + ": f(2sqrt2 x) = " +
                           std::to_string(f(s2(2) * Q2(x, 0))) + " > f(tau) = " + std::to_string(f_tau));
                return;
            }
        }
        report(name, true, "");
    }

    void check_p9() {
        for (int x = 2; x <= x_max; ++x) {
            int rest = x - (x + 2) / 2;  // x - ceil((x+1)/2) = floor((x-1)/2)
            if (f(s2(2) * Q2(x, 0)) > 1 + f(Q2(rest, 0))) {
                report("P9: f(2sqrt2 x) <= 1 + f(x - ceil((x+1)/2))", false, "x = " + std::to_string(x));
                return;
            }
        }
        report("P9: f(2sqrt2 x) <= 1 + f(x - ceil((x+1)/2))", true, "");
    }

    void check_p10() {
        for (int x = 2; x <= x_max; ++x) {
            long long half = (x % 2 == 0) ? x / 2 : (x - 1) / 2;  // ceil((x-1)/2)
            if (!(s2(x) <= tau * Q2(half, 0))) {
                report("P10: sqrt2 x <= tau ceil((x-1)/2)", false, "x = " + std::to_string(x));
                return;
            }
        }
        report("P10: sqrt2 x <= tau ceil((x-1)/2)", true, "");
    }

    void check_p11() {
        for (int x = 2; x <= x_max; ++x) {
            long long half = (x % 2 == 0) ? x / 2 : (x - 1) / 2;
            if (f(s2(1) * Q2(x, 0)) > 2 * half) {
                report("P11: f(sqrt2 x) <= 2 ceil((x-1)/2)", false, "x = " + std::to_string(x));
                return;
            }
        }
        report("P11: f(sqrt2 x) <= 2 ceil((x-1)/2)", true, "");
    }
};

}  // namespace

std::vector<PropertyResult> check_f_properties(int x_max, const Q2& tau) {
    if (x_max < 2) throw PreconditionError("check_f_properties requires x_max >= 2");
    Checker c{tau, x_max, {}};
    c.run();
    return c.out;
}

}  // namespace minors
