#include "asmice/trigpoly.hpp"

#include <cstdlib>
#include <sstream>

namespace asmice {

void TrigPoly::add_sin(long freq, const Rat& c) {
    if (c == 0) return;
    if (freq == 0) return;  // sin(0) vanishes identically
    Rat v = c;
    if (freq < 0) {
        freq = -freq;
        v = -v;
    }
    terms_[freq].sin += v;
    prune(freq);
}

void TrigPoly::add_cos(long freq, const Rat& c) {
    if (c == 0) return;
    if (freq < 0) freq = -freq;
    terms_[freq].cos += c;
    prune(freq);
}

long TrigPoly::max_frequency() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first;
}

TrigPoly TrigPoly::operator+(const TrigPoly& o) const {
    TrigPoly r = *this;
    for (const auto& [freq, coef] : o.terms_) {
        r.add_sin(freq, coef.sin);
        r.add_cos(freq, coef.cos);
    }
    return r;
}

TrigPoly TrigPoly::operator-(const TrigPoly& o) const {
    TrigPoly r = *this;
    for (const auto& [freq, coef] : o.terms_) {
        r.add_sin(freq, -coef.sin);
        r.add_cos(freq, -coef.cos);
    }
    return r;
}

TrigPoly TrigPoly::scaled(const Rat& c) const {
    TrigPoly r;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [freq, coef] : r.terms_) {
        coef.sin *= c;
        coef.cos *= c;
    }
    return r;
}

TrigPoly TrigPoly::derivative() const {
    TrigPoly r;
    for (const auto& [freq, coef] : terms_) {
        const Rat f(freq);
        r.add_cos(freq, coef.sin * f);
        r.add_sin(freq, -coef.cos * f);
    }
    return r;
}

TrigPoly TrigPoly::derivative(int order) const {
    TrigPoly r = *this;
    for (int i = 0; i < order; ++i) r = r.derivative();
    return r;
}

Rat TrigPoly::eval_at_zero() const {
    Rat total = 0;
    for (const auto& [freq, coef] : terms_) total += coef.cos;
    return total;
}

Real TrigPoly::eval(const Real& u) const {
    Real total = 0;
    for (const auto& [freq, coef] : terms_) {
        const Real fu = Real(freq) * u;
        if (coef.sin != 0) total += to_real(coef.sin) * sin(fu);
        if (coef.cos != 0) total += to_real(coef.cos) * cos(fu);
    }
    return total;
}

bool TrigPoly::has_frequency_multiple_of_3() const {
    for (const auto& [freq, coef] : terms_)
        if (freq % 3 == 0) return true;
    return false;
}

bool TrigPoly::has_parity(long n) const {
    for (const auto& [freq, coef] : terms_)
        if ((freq - n) % 2 != 0) return false;
    return true;
}

std::string TrigPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    auto item = [&](const Rat& c, const char* fn, long freq) {
        if (c == 0) return;
        Rat a = c;
        if (first) {
            if (c < 0) {
                out << "-";
                a = -c;
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
            a = abs(c);
        }
        if (freq == 0) {
            out << asmice::to_string(a);  // cos(0) = 1
            return;
        }
        if (a != 1) out << asmice::to_string(a) << "*";
        out << fn << "(";
        if (freq != 1) out << freq << "*";
        out << "u)";
    };
    for (const auto& [freq, coef] : terms_) {
        item(coef.sin, "sin", freq);
        item(coef.cos, "cos", freq);
    }
    return out.str();
}

void TrigPoly::prune(long freq) {
    auto it = terms_.find(freq);
    if (it != terms_.end() && it->second.sin == 0 && it->second.cos == 0)
        terms_.erase(it);
}

}  // namespace asmice
