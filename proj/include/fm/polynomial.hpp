#pragma once

// Dense exact-rational polynomials, coefficients ascending by degree.
// Leading coefficient is nonzero unless the polynomial is zero.

#include <initializer_list>
#include <string>
#include <vector>

#include "fm/rational.hpp"

namespace fm {

class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rat> cs) : coeffs_(cs) { normalize(); }
    explicit Polynomial(RatVec cs) : coeffs_(std::move(cs)) { normalize(); }
    explicit Polynomial(const Rat& c) : coeffs_{c} { normalize(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(Rat(1)); }
    // x^k
    static Polynomial monomial(int k, const Rat& c = Rat(1)) {
        RatVec v(k + 1, Rat(0));
        v[k] = c;
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial is -1 by convention
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Rat operator[](int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs_.size())) ? coeffs_[k] : Rat(0);
    }
    const RatVec& coeffs() const { return coeffs_; }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

    Polynomial operator-() const {
        RatVec v(coeffs_);
        for (auto& c : v) c = -c;
        return Polynomial(std::move(v));
    }

    Polynomial operator+(const Polynomial& o) const {
        RatVec v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
        for (size_t i = 0; i < v.size(); ++i) v[i] = (*this)[(int)i] + o[(int)i];
        return Polynomial(std::move(v));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        RatVec v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
        return Polynomial(std::move(v));
    }
    Polynomial operator*(const Rat& s) const {
        if (s == 0) return Polynomial();
        RatVec v(coeffs_);
        for (auto& c : v) c *= s;
        return Polynomial(std::move(v));
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    double eval(double x) const {
        double acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
        return acc;
    }

    std::string str(const std::string& var = "x") const;

  private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    RatVec coeffs_;
};

inline Polynomial operator*(const Rat& s, const Polynomial& p) { return p * s; }

inline std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rat c = (*this)[k];
        if (c == 0) continue;
        if (!out.empty()) out += sign(c) > 0 ? " + " : " - ";
        else if (sign(c) < 0) out += "-";
        Rat a = abs(c);
        if (k == 0 || a != 1) out += rat_str(a);
        if (k > 0) {
            if (a != 1) out += "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace fm
