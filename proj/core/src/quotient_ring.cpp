#include "fermatiq/quotient_ring.hpp"

#include <stdexcept>

#include "fermatiq/abelian.hpp"

namespace fermatiq {

namespace {

// Floor-mod into [0, m).
mpz_class fmod_pos(const mpz_class& a, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace

QuotientRing::QuotientRing(OkElement modulus)
    : modulus_(std::move(modulus)), n1_(0), k_(0), m_(0) {
    if (modulus_.is_zero()) throw std::invalid_argument("QuotientRing: zero modulus");
    const Field& f = modulus_.field();
    // Lattice rows for (beta): beta = (x, y) and beta*theta = (t*y, x + s*y)
    // where theta^2 = s*theta + t.
    const mpz_class x = modulus_.x(), y = modulus_.y();
    const mpz_class r1x = x, r1y = y;
    const mpz_class r2x = mpz_class(f.theta_const()) * y;
    const mpz_class r2y = x + mpz_class(f.theta_lin()) * y;

    mpz_class g, u, v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), r1y.get_mpz_t(), r2y.get_mpz_t());
    k_ = g;  // > 0 unless both theta-coordinates vanish, impossible for beta != 0
    if (k_ == 0) throw std::logic_error("QuotientRing: degenerate lattice");
    m_ = u * r1x + v * r2x;
    // Row with zero theta-coordinate spans (beta) cap Z.
    n1_ = abs((r2y / g) * r1x - (r1y / g) * r2x);
    if (n1_ == 0) throw std::logic_error("QuotientRing: degenerate lattice");
    m_ = fmod_pos(m_, n1_);
    if (n1_ * k_ != abs(modulus_.norm())) throw std::logic_error("QuotientRing: HNF size mismatch");
}

OkElement QuotientRing::reduce(const OkElement& e) const {
    if (&e.field() != &modulus_.field()) throw std::invalid_argument("QuotientRing: field mismatch");
    mpz_class v = fmod_pos(e.y(), k_);
    mpz_class q = (e.y() - v) / k_;
    mpz_class u = fmod_pos(e.x() - q * m_, n1_);
    return OkElement(e.field(), u, v);
}

OkElement QuotientRing::pow(const OkElement& base, const mpz_class& e) const {
    if (e < 0) throw std::invalid_argument("QuotientRing::pow: negative exponent");
    OkElement result = reduce(OkElement::one(modulus_.field()));
    OkElement b = reduce(base);
    mpz_class n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) result = mul(result, b);
        b = mul(b, b);
        n /= 2;
    }
    return result;
}

std::vector<OkElement> QuotientRing::residues() const {
    if (!n1_.fits_slong_p() || !k_.fits_slong_p()) {
        throw std::domain_error("QuotientRing::residues: modulus too large for enumeration");
    }
    std::vector<OkElement> out;
    out.reserve(static_cast<std::size_t>(n1_.get_si() * k_.get_si()));
    for (long v = 0; v < k_.get_si(); ++v) {
        for (long u = 0; u < n1_.get_si(); ++u) {
            out.emplace_back(modulus_.field(), u, v);
        }
    }
    return out;
}

QuotientUnitGroup quotient_unit_group(const PrimeIdeal& P, int n) {
    if (n < 1) throw std::invalid_argument("quotient_unit_group: exponent must be positive");
    mpz_class modulus_norm = 1;
    for (int i = 0; i < n; ++i) modulus_norm *= P.residue_size();
    if (modulus_norm > 1000000) {
        throw std::domain_error("quotient_unit_group: modulus norm " + modulus_norm.get_str() +
                                " exceeds the enumeration guard (10^6)");
    }
    QuotientRing ring(P.generator().pow(static_cast<unsigned long>(n)));
    std::vector<OkElement> elts;
    for (auto& r : ring.residues()) {
        if (!P.divides(r)) elts.push_back(r);
    }
    auto mul = [&](const OkElement& a, const OkElement& b) { return ring.mul(a, b); };
    auto structure = invariant_factors<OkElement>(
        elts, mul, ring.reduce(OkElement::one(P.field())),
        [](const OkElement& e) { return e.x().get_str() + "|" + e.y().get_str(); });
    return QuotientUnitGroup{P, n, std::move(elts), std::move(structure)};
}

}  // namespace fermatiq
