#include "fermatiq/ok_element.hpp"

#include <stdexcept>

namespace fermatiq {

void OkElement::require_same_field(const OkElement& rhs) const {
    if (field_ != rhs.field_) {
        throw std::invalid_argument("OkElement: mixed fields Q(sqrt(-" +
                                    std::to_string(field_->d()) + ")) and Q(sqrt(-" +
                                    std::to_string(rhs.field_->d()) + "))");
    }
}

mpz_class OkElement::norm() const {
    if (field_->theta_kind() == ThetaKind::SqrtMinusD) {
        return x_ * x_ + field_->d() * y_ * y_;
    }
    // theta = (1+sqrt(-d))/2: N(x+y theta) = x^2 + xy + y^2 (1+d)/4
    mpz_class c = (1 + mpz_class(field_->d())) / 4;
    return x_ * x_ + x_ * y_ + c * y_ * y_;
}

mpz_class OkElement::trace() const {
    if (field_->theta_kind() == ThetaKind::SqrtMinusD) return 2 * x_;
    return 2 * x_ + y_;
}

OkElement OkElement::conj() const {
    if (field_->theta_kind() == ThetaKind::SqrtMinusD) return OkElement(*field_, x_, -y_);
    // conj(theta) = 1 - theta
    return OkElement(*field_, x_ + y_, -y_);
}

OkElement OkElement::operator+(const OkElement& rhs) const {
    require_same_field(rhs);
    return OkElement(*field_, x_ + rhs.x_, y_ + rhs.y_);
}

OkElement OkElement::operator-(const OkElement& rhs) const {
    require_same_field(rhs);
    return OkElement(*field_, x_ - rhs.x_, y_ - rhs.y_);
}

OkElement OkElement::operator*(const OkElement& rhs) const {
    require_same_field(rhs);
    // (x1 + y1 t)(x2 + y2 t) with t^2 = s t + c
    const long s = field_->theta_lin();
    const mpz_class c = field_->theta_const();
    mpz_class cross = x_ * rhs.y_ + y_ * rhs.x_;
    mpz_class yy = y_ * rhs.y_;
    return OkElement(*field_, x_ * rhs.x_ + c * yy, cross + s * yy);
}

OkElement OkElement::pow(unsigned long e) const {
    OkElement result = OkElement::one(*field_);
    OkElement base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

std::optional<OkElement> OkElement::divide_exact(const OkElement& den) const {
    require_same_field(den);
    if (den.is_zero()) throw std::domain_error("OkElement: division by zero");
    // this/den = this*conj(den)/N(den); exact iff both coordinates divide.
    OkElement num = *this * den.conj();
    mpz_class n = den.norm();
    if (!mpz_divisible_p(num.x_.get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(num.y_.get_mpz_t(), n.get_mpz_t())) {
        return std::nullopt;
    }
    return OkElement(*field_, num.x_ / n, num.y_ / n);
}

bool OkElement::divides(const OkElement& e) const {
    return e.divide_exact(*this).has_value();
}

std::string OkElement::str() const {
    if (y_ == 0) return x_.get_str();
    std::string t;
    if (y_ == 1) t = "theta";
    else if (y_ == -1) t = "-theta";
    else t = y_.get_str() + "*theta";
    if (x_ == 0) return t;
    if (y_ > 0) return x_.get_str() + "+" + t;
    return x_.get_str() + t;
}

std::vector<OkElement> units(const Field& field) {
    std::vector<OkElement> out;
    out.push_back(OkElement::one(field));
    out.push_back(-OkElement::one(field));
    if (field.d() == 1) {
        out.push_back(OkElement::theta(field));   // i
        out.push_back(-OkElement::theta(field));  // -i
    } else if (field.d() == 3) {
        // omega = (-1+sqrt(-3))/2 = theta - 1, a primitive cube root of unity
        OkElement omega(field, -1, 1);
        out.push_back(omega);
        out.push_back(-omega);
        out.push_back(omega * omega);
        out.push_back(-(omega * omega));
    }
    return out;
}

OkElement parse_ok_element(const Field& field, const std::string& text) {
    // Accept "x,y" directly.
    if (auto comma = text.find(','); comma != std::string::npos) {
        mpz_class x(text.substr(0, comma));
        mpz_class y(text.substr(comma + 1));
        return OkElement(field, x, y);
    }
    // Otherwise the str() form: [x][(+|-)[k*]theta]
    std::string s = text;
    auto tpos = s.find("theta");
    if (tpos == std::string::npos) return OkElement::integer(field, mpz_class(s));
    std::string xpart, ypart = s.substr(0, tpos);
    if (!ypart.empty() && ypart.back() == '*') ypart.pop_back();
    // Split off a leading constant term if present: scan for the last +/-
    // that is not the first character of the y coefficient.
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < ypart.size(); ++i) {
        if (ypart[i] == '+' || ypart[i] == '-') split = i;
    }
    if (split != std::string::npos) {
        xpart = ypart.substr(0, split);
        ypart = ypart.substr(split);
    }
    if (ypart.empty() || ypart == "+") ypart = "1";
    else if (ypart == "-") ypart = "-1";
    if (ypart.front() == '+') ypart.erase(0, 1);  // GMP rejects a leading '+'
    mpz_class x = xpart.empty() ? mpz_class(0) : mpz_class(xpart);
    mpz_class y(ypart);
    return OkElement(field, x, y);
}

}  // namespace fermatiq
