#include "fermatiq/residue_field.hpp"

#include <stdexcept>

namespace fermatiq {

ResidueField::ResidueField(const PrimeIdeal& P)
    : l_(P.residue_char()), degree_(P.residue_size() == P.residue_char() ? 1 : 2),
      q_(P.residue_size()), field_(&P.field()) {
    if (q_ > 100000000) {
        throw std::domain_error("ResidueField: residue field of size " + std::to_string(q_) +
                                " is beyond desk scale");
    }
    const Field& f = P.field();
    s_ = ((f.theta_lin() % l_) + l_) % l_;
    c_ = ((f.theta_const() % l_) + l_) % l_;
    if (degree_ == 1) {
        // theta maps to the root of its minimal polynomial that lies in P.
        bool found = false;
        for (std::int64_t r = 0; r < l_; ++r) {
            if ((r * r - s_ * r - c_) % l_ != 0) continue;
            OkElement theta_minus_r = OkElement::theta(f) - OkElement::integer(f, static_cast<long>(r));
            if (P.divides(theta_minus_r)) {
                t0_ = r;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("ResidueField: no root of theta's minimal polynomial in P");
    }
}

ResidueField::Elt ResidueField::reduce(const OkElement& e) const {
    if (&e.field() != field_) throw std::invalid_argument("ResidueField::reduce: field mismatch");
    std::int64_t x = mpz_fdiv_ui(e.x().get_mpz_t(), static_cast<unsigned long>(l_));
    std::int64_t y = mpz_fdiv_ui(e.y().get_mpz_t(), static_cast<unsigned long>(l_));
    if (degree_ == 2) return {x, y};
    return {mod(x + y * t0_), 0};
}

ResidueField::Elt ResidueField::mul(Elt a, Elt b) const noexcept {
    if (degree_ == 1) return {mod(a.u * b.u), 0};
    // (u1 + v1 t)(u2 + v2 t) with t^2 = s t + c
    std::int64_t vv = mod(a.v * b.v);
    std::int64_t uu = mod(a.u * b.u);
    std::int64_t cross = mod(a.u * b.v + a.v * b.u);
    return {mod(uu + c_ * vv), mod(cross + s_ * vv)};
}

ResidueField::Elt ResidueField::pow(Elt a, std::int64_t e) const {
    if (e < 0) throw std::invalid_argument("ResidueField::pow: negative exponent");
    Elt result = one();
    Elt base = a;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

int ResidueField::chi(Elt a) const {
    if (is_zero(a)) return 0;
    return pow(a, (q_ - 1) / 2) == one() ? 1 : -1;
}

}  // namespace fermatiq
