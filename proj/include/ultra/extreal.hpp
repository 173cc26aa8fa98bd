#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <stdexcept>
#include <string>

namespace ultra {

using Rat = boost::multiprecision::cpp_rational;

/// Domain error with a stable machine-readable code ("NotSymmetric",
/// "MismatchedSpaces", ...) alongside the human message.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// The extended real line: exact rationals plus the two infinities.
/// Total order with -inf below and +inf above everything finite.
/// Addition is the tropical one: -inf absorbs, (+inf) + (-inf) throws.
class ExtReal {
public:
    ExtReal() : tag_(Tag::Finite), value_(0) {}
    ExtReal(Rat v) : tag_(Tag::Finite), value_(std::move(v)) {}
    ExtReal(int v) : tag_(Tag::Finite), value_(v) {}

    static ExtReal neg_inf() { return ExtReal(Tag::NegInf); }
    static ExtReal pos_inf() { return ExtReal(Tag::PosInf); }

    bool is_finite() const { return tag_ == Tag::Finite; }
    bool is_neg_inf() const { return tag_ == Tag::NegInf; }
    bool is_pos_inf() const { return tag_ == Tag::PosInf; }

    /// Finite value; throws on infinities.
    const Rat& finite() const;

    bool operator==(const ExtReal& o) const {
        return tag_ == o.tag_ && (tag_ != Tag::Finite || value_ == o.value_);
    }
    std::strong_ordering operator<=>(const ExtReal& o) const;

    ExtReal operator+(const ExtReal& o) const;
    ExtReal operator-() const;

    std::string str() const;
    double to_double() const;

private:
    enum class Tag { NegInf, Finite, PosInf };
    explicit ExtReal(Tag t) : tag_(t), value_(0) {}

    Tag tag_;
    Rat value_;
};

inline const ExtReal& min(const ExtReal& a, const ExtReal& b) { return b < a ? b : a; }
inline const ExtReal& max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

/// Parses "p/q", an optionally signed integer, or nothing else.
Rat parse_rational(const std::string& s);
/// As parse_rational, plus "inf" / "-inf".
ExtReal parse_extreal(const std::string& s);
/// Lowest-terms "p/q", or plain integer when q = 1.
std::string rational_str(const Rat& r);

}  // namespace ultra
