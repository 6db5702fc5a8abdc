#pragma once

#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace partpeaks {

// Formal power series in x truncated at a fixed order; all arithmetic is
// exact modulo x^{order+1}.  Coeff must behave like a commutative ring
// element: value-initialization yields zero and Coeff(1) the unit.
template <typename Coeff>
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}

    static PowerSeries constant(std::size_t order, Coeff value) {
        PowerSeries s(order);
        s.coeffs_[0] = std::move(value);
        return s;
    }

    // value * x^power; the zero series when power exceeds the order.
    static PowerSeries monomial(std::size_t order, Coeff value, std::size_t power) {
        PowerSeries s(order);
        if (power <= order) s.coeffs_[power] = std::move(value);
        return s;
    }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }

    const Coeff& operator[](std::size_t n) const {
        if (n >= coeffs_.size())
            throw std::out_of_range("PowerSeries: coefficient index exceeds truncation order");
        return coeffs_[n];
    }

    void set(std::size_t n, Coeff value) {
        if (n >= coeffs_.size())
            throw std::out_of_range("PowerSeries: coefficient index exceeds truncation order");
        coeffs_[n] = std::move(value);
    }

    bool is_zero() const {
        const Coeff zero{};
        for (const Coeff& c : coeffs_)
            if (!(c == zero)) return false;
        return true;
    }

    // Multiplication by x^m, truncating.
    PowerSeries shifted(std::size_t m) const {
        PowerSeries s(order());
        for (std::size_t n = m; n <= order(); ++n) s.coeffs_[n] = coeffs_[n - m];
        return s;
    }

    PowerSeries& operator+=(const PowerSeries& o) {
        require_same_order(o);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
        return *this;
    }

    PowerSeries& operator-=(const PowerSeries& o) {
        require_same_order(o);
        for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
        return *this;
    }

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) {
        a += b;
        return a;
    }

    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) {
        a -= b;
        return a;
    }

    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        a.require_same_order(b);
        PowerSeries r(a.order());
        const Coeff zero{};
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i] == zero) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j) {
                if (b.coeffs_[j] == zero) continue;
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    // Quotient via the standard coefficient recurrence.  The divisor's
    // constant term must be exactly Coeff(1): every denominator arising from
    // the generating-function recurrences satisfies this, so anything else
    // signals a malformed evaluation and is a hard error.
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
        a.require_same_order(b);
        if (!(b.coeffs_[0] == Coeff(1)))
            throw std::domain_error("PowerSeries: divisor constant term must be one");
        PowerSeries q(a.order());
        for (std::size_t n = 0; n <= a.order(); ++n) {
            Coeff c = a.coeffs_[n];
            for (std::size_t m = 0; m < n; ++m) c -= q.coeffs_[m] * b.coeffs_[n - m];
            q.coeffs_[n] = std::move(c);
        }
        return q;
    }

    PowerSeries& operator*=(const PowerSeries& o) {
        *this = *this * o;
        return *this;
    }

    PowerSeries& operator/=(const PowerSeries& o) {
        *this = *this / o;
        return *this;
    }

    // Scalar multiple.
    friend PowerSeries operator*(PowerSeries a, const Coeff& c) {
        for (Coeff& x : a.coeffs_) x = x * c;
        return a;
    }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Coeff> coeffs_;

    void require_same_order(const PowerSeries& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            throw std::invalid_argument("PowerSeries: mismatched truncation orders");
    }
};

// Repeated multiplication; exponents stay tiny here.
template <typename Coeff>
PowerSeries<Coeff> pow(const PowerSeries<Coeff>& base, unsigned exponent) {
    PowerSeries<Coeff> r = PowerSeries<Coeff>::constant(base.order(), Coeff(1));
    for (unsigned i = 0; i < exponent; ++i) r = r * base;
    return r;
}

template <typename Coeff, typename F>
auto map_coefficients(const PowerSeries<Coeff>& s, F&& f) {
    using Result = std::decay_t<decltype(f(s[0]))>;
    PowerSeries<Result> r(s.order());
    for (std::size_t n = 0; n <= s.order(); ++n) r.set(n, f(s[n]));
    return r;
}

}  // namespace partpeaks
