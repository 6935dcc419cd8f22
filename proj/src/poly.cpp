#include "greenbn/poly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace greenbn {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Rational& coeff, int deg) {
    if (coeff.is_zero()) return Poly();
    if (deg < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    std::vector<Rational> cs(static_cast<size_t>(deg) + 1, Rational(0));
    cs.back() = coeff;
    return Poly(std::move(cs));
}

bool Poly::integer_coeffs() const {
    for (const auto& c : c_)
        if (!c.is_integer()) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> cs(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) cs[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(cs));
}

Poly& Poly::operator*=(const Rational& r) {
    if (r.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= r;
    return *this;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    r = a;
    q = Poly();
    if (a.degree() < b.degree()) return;
    std::vector<Rational> qc(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
    const Rational lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int d = r.degree() - b.degree();
        Rational f = r.leading() / lb;
        qc[static_cast<size_t>(d)] = f;
        r -= Poly::monomial(f, d) * b;
    }
    q = Poly(std::move(qc));
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("Poly: inexact division");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        Rational inv = Rational(1) / a.leading();
        a *= inv;
    }
    return a;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> cs(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) cs[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(cs));
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::shifted_up(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::shifted_up: negative shift");
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> cs(static_cast<size_t>(k), Rational(0));
    cs.insert(cs.end(), c_.begin(), c_.end());
    return Poly(std::move(cs));
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        Rational c = coeff(d);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        Rational a = c.sign() < 0 ? -c : c;
        if (d == 0 || a != Rational(1)) os << a.str();
        if (d > 0) {
            os << var;
            if (d > 1) os << "^" << d;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
    if (num_.is_zero()) {
        den_ = Poly::one();
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    if (!den_.is_monic()) {
        Rational inv = Rational(1) / den_.leading();
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

Poly RatFunc::as_poly() const {
    if (!is_polynomial()) throw std::domain_error("RatFunc: not a polynomial");
    return num_;
}

std::string RatFunc::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) {
    return os << f.str();
}

}  // namespace greenbn
