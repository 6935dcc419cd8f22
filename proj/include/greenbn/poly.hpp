#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "greenbn/rational.hpp"

namespace greenbn {

// Dense univariate polynomial over Rational in the indeterminate t.
// coeffs()[i] is the coefficient of t^i; the top stored coefficient is
// nonzero (the zero polynomial stores nothing).
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rational> cs) : c_(cs) { trim(); }
    explicit Poly(std::vector<Rational> cs) : c_(std::move(cs)) { trim(); }
    explicit Poly(const Rational& r) {
        if (!r.is_zero()) c_ = {r};
    }

    static Poly monomial(const Rational& coeff, int deg);
    static Poly t() { return monomial(Rational(1), 1); }
    static Poly one() { return Poly(Rational(1)); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Rational coeff(int l) const {
        if (l < 0 || l >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(l)];
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }

    // True when every coefficient is an integer.
    bool integer_coeffs() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& r);
    friend Poly operator*(Poly a, const Rational& r) { return a *= r; }

    // Quotient/remainder with nonzero divisor; exact over the rationals.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    // Exact division; throws if the remainder is nonzero.
    friend Poly operator/(const Poly& a, const Poly& b);

    // Monic gcd (1 for coprime inputs, 0 only if both are 0).
    static Poly gcd(Poly a, Poly b);

    Poly derivative() const;
    Rational eval(const Rational& x) const;
    // p(t) -> t^k * p(t), k >= 0.
    Poly shifted_up(int k) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    std::string str(const std::string& var = "t") const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();
    std::vector<Rational> c_;
};

// Rational function num/den, normalized: den monic and gcd(num, den) = 1;
// the zero function is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(const Rational& r) : num_(Poly(r)), den_(Poly::one()) {}
    RatFunc(Poly num) : num_(std::move(num)), den_(Poly::one()) {}
    RatFunc(Poly num, Poly den);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    // The numerator viewed as Poly; throws if the denominator is not 1.
    Poly as_poly() const;

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f);

private:
    void normalize();
    Poly num_, den_;
};

}  // namespace greenbn
