#include "ultra/extreal.hpp"

namespace ultra {

const Rat& ExtReal::finite() const {
    if (tag_ != Tag::Finite)
        throw DomainError("NotFinite", "expected a finite value, got " + str());
    return value_;
}

std::strong_ordering ExtReal::operator<=>(const ExtReal& o) const {
    if (tag_ != o.tag_) {
        auto rank = [](Tag t) { return t == Tag::NegInf ? 0 : t == Tag::Finite ? 1 : 2; };
        return rank(tag_) <=> rank(o.tag_);
    }
    if (tag_ != Tag::Finite) return std::strong_ordering::equal;
    return value_ < o.value_   ? std::strong_ordering::less
           : value_ == o.value_ ? std::strong_ordering::equal
                                : std::strong_ordering::greater;
}

ExtReal ExtReal::operator+(const ExtReal& o) const {
    if (is_neg_inf() || o.is_neg_inf()) {
        if (is_pos_inf() || o.is_pos_inf())
            throw DomainError("UndefinedSum", "(+inf) + (-inf) is undefined");
        return neg_inf();
    }
    if (is_pos_inf() || o.is_pos_inf()) return pos_inf();
    return ExtReal(value_ + o.value_);
}

ExtReal ExtReal::operator-() const {
    switch (tag_) {
        case Tag::NegInf: return pos_inf();
        case Tag::PosInf: return neg_inf();
        default: return ExtReal(Rat(-value_));
    }
}

std::string ExtReal::str() const {
    switch (tag_) {
        case Tag::NegInf: return "-inf";
        case Tag::PosInf: return "inf";
        default: return rational_str(value_);
    }
}

double ExtReal::to_double() const {
    switch (tag_) {
        case Tag::NegInf: return -std::numeric_limits<double>::infinity();
        case Tag::PosInf: return std::numeric_limits<double>::infinity();
        default: return static_cast<double>(value_);
    }
}

Rat parse_rational(const std::string& s) {
    auto bad = [&] {
        return DomainError("BadRational", "cannot parse rational: '" + s + "'");
    };
    if (s.empty()) throw bad();
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(s)) throw bad();
            return Rat(boost::multiprecision::cpp_int(s));
        }
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!is_int(num) || !is_int(den)) throw bad();
        boost::multiprecision::cpp_int q(den);
        if (q == 0) throw bad();
        return Rat(boost::multiprecision::cpp_int(num), q);
    } catch (const std::exception&) {
        throw bad();
    }
}

ExtReal parse_extreal(const std::string& s) {
    if (s == "inf" || s == "+inf") return ExtReal::pos_inf();
    if (s == "-inf") return ExtReal::neg_inf();
    return ExtReal(parse_rational(s));
}

std::string rational_str(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace ultra
