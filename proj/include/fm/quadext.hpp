#pragma once

// Values a + b sqrt(D) with rational a, b and rational D >= 0. Support
// endpoints and atom locations live here so classification stays exact;
// conversion to double happens only in the numerics layer.

#include <cmath>
#include <string>

#include "fm/rational.hpp"

namespace fm {

struct QuadExt {
    Rat a{0}, b{0}, D{0};  // a + b sqrt(D)

    QuadExt() = default;
    QuadExt(Rat a_, Rat b_, Rat D_) : a(std::move(a_)), b(std::move(b_)), D(std::move(D_)) {
        normalize();
    }
    /* implicit */ QuadExt(const Rat& r) : a(r) {}

    static QuadExt sqrt_of(const Rat& r) {
        if (sgn(r) < 0) throw Error("QuadExt: negative radicand");
        Rat root;
        if (rational_sqrt(r, root)) return QuadExt(root);
        return QuadExt(Rat(0), Rat(1), r);
    }

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    QuadExt operator+(const QuadExt& o) const { return combined(o, a + o.a, b + o.b); }
    QuadExt operator-(const QuadExt& o) const { return combined(o, a - o.a, b - o.b); }
    QuadExt operator-() const { return QuadExt(-a, -b, D); }
    QuadExt operator*(const QuadExt& o) const {
        const Rat& d = pick_d(o);
        return QuadExt(a * o.a + b * o.b * d, a * o.b + b * o.a, d);
    }
    QuadExt operator/(const QuadExt& o) const {
        const Rat& d = pick_d(o);
        Rat norm = o.a * o.a - o.b * o.b * d;  // conjugate norm
        if (norm == 0) throw Error("QuadExt: division by zero");
        QuadExt conj(o.a, -o.b, d);
        QuadExt num = *this * conj;
        return QuadExt(num.a / norm, num.b / norm, d);
    }

    bool operator==(const QuadExt& o) const { return a == o.a && b == o.b && (b == 0 || D == o.D); }

    double value() const { return to_double(a) + to_double(b) * std::sqrt(to_double(D)); }

    std::string str() const {
        if (b == 0) return rat_str(a);
        std::string s = rat_str(b) + "*sqrt(" + rat_str(D) + ")";
        if (a != 0) s = rat_str(a) + (sgn(b) > 0 ? " + " : " ") + s;
        return s;
    }

  private:
    void normalize() {
        if (b == 0 || D == 0) {
            b = 0;
            D = 0;
            return;
        }
        Rat root;
        if (rational_sqrt(D, root)) {
            a += b * root;
            b = 0;
            D = 0;
        }
    }
    // mixing two different irrational D's is unsupported (and never needed here)
    const Rat& pick_d(const QuadExt& o) const {
        if (b != 0 && o.b != 0 && D != o.D) throw Error("QuadExt: incompatible radicands");
        return b != 0 ? D : o.D;
    }
    QuadExt combined(const QuadExt& o, Rat na, Rat nb) const {
        return QuadExt(std::move(na), std::move(nb), b != 0 ? D : o.D);
    }
};

}  // namespace fm
