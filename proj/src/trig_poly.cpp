#include "heatkern/trig_poly.hpp"

#include <cmath>
#include <cstdlib>

namespace heatkern {

TrigPoly TrigPoly::constant(Coeff v) {
    TrigPoly p;
    p.insert(0, v);
    return p;
}

TrigPoly TrigPoly::harmonic(int m, Coeff amp) {
    TrigPoly p;
    p.insert(m, amp);
    return p;
}

TrigPoly TrigPoly::cosine(int m, double amp) {
    TrigPoly p;
    p.insert(m, 0.5 * amp);
    p.insert(-m, 0.5 * amp);
    return p;
}

TrigPoly TrigPoly::sine(int m, double amp) {
    TrigPoly p;
    p.insert(m, Coeff(0.0, -0.5 * amp));
    p.insert(-m, Coeff(0.0, 0.5 * amp));
    return p;
}

void TrigPoly::insert(int m, Coeff v) {
    if (v == Coeff(0.0, 0.0)) return;
    auto [it, fresh] = c_.emplace(m, v);
    if (!fresh) {
        it->second += v;
        if (it->second == Coeff(0.0, 0.0)) c_.erase(it);
    }
}

TrigPoly::Coeff TrigPoly::coeff(int m) const {
    auto it = c_.find(m);
    return it == c_.end() ? Coeff(0.0, 0.0) : it->second;
}

void TrigPoly::set_coeff(int m, Coeff v) {
    c_.erase(m);
    insert(m, v);
}

TrigPoly::Coeff TrigPoly::eval(double x) const {
    Coeff s(0.0, 0.0);
    for (const auto& [m, v] : c_)
        s += v * std::polar(1.0, m * x);
    return s;
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
    for (const auto& [m, v] : o.c_) insert(m, v);
    return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
    for (const auto& [m, v] : o.c_) insert(m, -v);
    return *this;
}

TrigPoly& TrigPoly::operator*=(Coeff s) {
    if (s == Coeff(0.0, 0.0)) {
        c_.clear();
        return *this;
    }
    for (auto& [m, v] : c_) v *= s;
    return *this;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r;
    for (const auto& [ma, va] : a.c_)
        for (const auto& [mb, vb] : b.c_)
            r.insert(ma + mb, va * vb);
    return r;
}

TrigPoly TrigPoly::diff() const {
    TrigPoly r;
    for (const auto& [m, v] : c_)
        r.insert(m, v * Coeff(0.0, static_cast<double>(m)));
    return r;
}

TrigPoly TrigPoly::conjugated() const {
    TrigPoly r;
    for (const auto& [m, v] : c_) r.insert(-m, std::conj(v));
    return r;
}

bool TrigPoly::is_zero(double tol) const {
    for (const auto& [m, v] : c_)
        if (std::abs(v) > tol) return false;
    return true;
}

bool TrigPoly::is_constant(double tol) const {
    for (const auto& [m, v] : c_)
        if (m != 0 && std::abs(v) > tol) return false;
    return true;
}

bool TrigPoly::is_real(double tol) const {
    for (const auto& [m, v] : c_)
        if (std::abs(v - std::conj(coeff(-m))) > tol) return false;
    return true;
}

int TrigPoly::bandwidth() const {
    int b = 0;
    for (const auto& [m, v] : c_) b = std::max(b, std::abs(m));
    return b;
}

double TrigPoly::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [k, v] : c_) m = std::max(m, std::abs(v));
    return m;
}

}  // namespace heatkern
