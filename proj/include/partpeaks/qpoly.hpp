#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "partpeaks/integer.hpp"

namespace partpeaks {

// Polynomial in the marker variable q with exact integer coefficients.
// Invariant: no trailing zero coefficient is stored, so the zero polynomial
// holds no coefficients at all and reports degree 0.
class QPoly {
public:
    QPoly() = default;

    QPoly(long constant) {  // NOLINT: constants convert freely
        if (constant != 0) coeffs_.emplace_back(constant);
    }

    QPoly(Integer constant) {  // NOLINT
        if (constant != 0) coeffs_.push_back(std::move(constant));
    }

    explicit QPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    // The variable q itself.
    static QPoly q() { return monomial(1, 1); }

    static QPoly monomial(Integer coefficient, std::size_t degree) {
        QPoly p;
        if (coefficient != 0) {
            p.coeffs_.assign(degree + 1, Integer(0));
            p.coeffs_.back() = std::move(coefficient);
        }
        return p;
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    // Coefficient of q^d; zero above the degree.
    const Integer& coeff(std::size_t d) const noexcept {
        static const Integer kZero{};
        return d < coeffs_.size() ? coeffs_[d] : kZero;
    }

    // Value at q = 1: the sum of all coefficients.
    Integer value_at_one() const {
        Integer s = 0;
        for (const Integer& c : coeffs_) s += c;
        return s;
    }

    // d/dq evaluated at q = 1: sum of d * coeff(d).
    Integer derivative_at_one() const {
        Integer s = 0;
        for (std::size_t d = 1; d < coeffs_.size(); ++d)
            s += static_cast<unsigned long>(d) * coeffs_[d];
        return s;
    }

    QPoly& operator+=(const QPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
        trim();
        return *this;
    }

    QPoly& operator-=(const QPoly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t d = 0; d < o.coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
        trim();
        return *this;
    }

    QPoly& operator*=(const QPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend QPoly operator+(QPoly a, const QPoly& b) {
        a += b;
        return a;
    }

    friend QPoly operator-(QPoly a, const QPoly& b) {
        a -= b;
        return a;
    }

    friend QPoly operator-(QPoly a) {
        for (Integer& c : a.coeffs_) c = -c;
        return a;
    }

    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        QPoly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.trim();
        return r;
    }

    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    std::vector<Integer> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

}  // namespace partpeaks
