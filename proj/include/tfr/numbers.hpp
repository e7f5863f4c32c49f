#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tfr {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// One error type for the whole library; `code` carries the symbolic name
// (NotPointed, NotAFan, ...) so callers and tests can match on it.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

inline int sign(const Int& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }
inline int sign(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline QVec to_rational(const IVec& v) {
    QVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

// Scales a rational vector to integral and divides by the content.
// The zero vector stays zero.
inline IVec primitive(const QVec& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    IVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = numerator(v[i]) * (l / denominator(v[i]));
    Int g = 0;
    for (const auto& x : w) g = gcd(g, x);
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

inline IVec primitive(const IVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    IVec w = v;
    if (g > 1)
        for (auto& x : w) x /= g;
    return w;
}

inline IVec negated(const IVec& v) {
    IVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
    return w;
}

inline IVec add(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec scaled(const IVec& a, const Int& c) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
    return r;
}

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const QVec& a, const IVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline bool is_zero(const IVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline std::string to_string(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace tfr
