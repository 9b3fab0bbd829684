#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace k3 {

/// Exact rational on 64-bit integers, always normalized (gcd 1, positive
/// denominator).  All character arithmetic in this library runs through
/// this type; there is no floating point anywhere.
class Rat {
public:
    constexpr Rat() : num_(0), den_(1) {}
    constexpr Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) {
        if (den_ == 0) throw std::invalid_argument("Rat: zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rat operator+(const Rat& o) const {
        long long g = std::gcd(den_, o.den_);
        long long l = den_ / g * o.den_;
        return Rat(num_ * (o.den_ / g) + o.num_ * (den_ / g), l);
    }
    Rat operator-(const Rat& o) const { return *this + Rat(-o.num_, o.den_); }
    Rat operator*(const Rat& o) const {
        long long g1 = std::gcd(std::abs(num_), o.den_);
        long long g2 = std::gcd(den_, std::abs(o.num_));
        return Rat((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
    }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::invalid_argument("Rat: division by zero");
        return *this * Rat(o.den_, o.num_);
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator>(const Rat& o) const { return o < *this; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
        return os << r.str();
    }

private:
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(std::abs(num_), den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    long long num_;
    long long den_;
};

}  // namespace k3
