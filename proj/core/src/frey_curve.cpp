#include "fermatiq/frey_curve.hpp"

#include <stdexcept>

#include "fermatiq/factor.hpp"
#include "fermatiq/residue_field.hpp"

namespace fermatiq {

namespace {

OkElement sixteen(const Field& f) { return OkElement::integer(f, 16); }

OkElement curve_c4(const OkElement& A, const OkElement& B) {
    return sixteen(A.field()) * (A * A + A * B + B * B);
}

OkElement curve_delta(const OkElement& A, const OkElement& B) {
    OkElement s = A + B;
    return sixteen(A.field()) * (A * A) * (B * B) * (s * s);
}

std::int64_t v_abc(const FreyInput& in, const PrimeIdeal& q) {
    return q.valuation(in.a()) + q.valuation(in.b()) + q.valuation(in.c());
}

}  // namespace

FreyInput::FreyInput(OkElement a, OkElement b, OkElement c, std::int64_t p, OkElement scale)
    : a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      p_(p),
      is_solution_(false),
      scale_(std::move(scale)) {
    is_solution_ = (a_.pow(static_cast<unsigned long>(p_)) + b_.pow(static_cast<unsigned long>(p_)) +
                    c_.pow(static_cast<unsigned long>(p_)))
                       .is_zero();
}

FreyInput FreyInput::make(const OkElement& a, const OkElement& b, const OkElement& c,
                          std::int64_t p) {
    if (&a.field() != &b.field() || &a.field() != &c.field()) {
        throw std::invalid_argument("FreyInput: entries from different fields");
    }
    if (a.is_zero() || b.is_zero() || c.is_zero()) {
        throw std::invalid_argument("FreyInput: zero entry");
    }
    if (!is_prime(p)) throw std::invalid_argument("FreyInput: exponent must be prime");
    if (!coprime(a, b) || !coprime(a, c) || !coprime(b, c)) {
        throw std::invalid_argument("FreyInput: entries are not pairwise coprime");
    }
    return FreyInput(a, b, c, p, OkElement::one(a.field()));
}

FreyInput FreyInput::scaled_by(const OkElement& lambda) const {
    if (lambda.is_zero()) throw std::invalid_argument("FreyInput: zero scaling");
    return FreyInput(lambda * a_, lambda * b_, lambda * c_, p_, lambda * scale_);
}

FreyCurve build_frey(const FreyInput& input) {
    const auto p = static_cast<unsigned long>(input.p());
    OkElement A = input.a().pow(p), B = input.b().pow(p);
    if ((A + B).is_zero()) {
        throw std::domain_error("build_frey: a^p + b^p = 0 gives a singular model");
    }
    OkElement c4 = curve_c4(A, B);
    OkElement delta = curve_delta(A, B);

    // j in lowest ideal terms, computed from the primitive triple (the
    // scaled invariants differ by lambda^{6p} in both numerator and
    // denominator). c4 and Delta of a coprime triple share only primes
    // above 2.
    OkElement A0 = input.primitive_a().pow(p), B0 = input.primitive_b().pow(p);
    OkElement c40 = curve_c4(A0, B0), delta0 = curve_delta(A0, B0);
    OkElement j_num = c40 * c40 * c40, j_den = delta0;
    if (j_num.is_zero()) {
        j_den = OkElement::one(input.field());
    } else {
        for (auto& P : split_prime(input.field(), 2)) {
            int m = std::min(P.valuation(j_num), P.valuation(j_den));
            for (int i = 0; i < m; ++i) {
                j_num = *j_num.divide_exact(P.generator());
                j_den = *j_den.divide_exact(P.generator());
            }
        }
    }
    return FreyCurve{input, std::move(A), std::move(B), std::move(c4), std::move(delta),
                     std::move(j_num), std::move(j_den)};
}

std::int64_t v_q_of_j(const FreyCurve& curve, const PrimeIdeal& q) {
    if (q.residue_char() != 2) {
        throw std::domain_error("v_q_of_j: " + q.label() + " is not above 2");
    }
    const FreyInput& in = curve.input;
    const std::int64_t vabc = v_abc(in, q);
    if (vabc == 0) throw std::domain_error("v_q_of_j: 2 does not divide abc");

    const auto p = static_cast<unsigned long>(in.p());
    OkElement mid = in.b().pow(2 * p) - in.a().pow(p) * in.c().pow(p);
    if (mid.is_zero()) throw std::domain_error("v_q_of_j: degenerate triple, b^{2p} = (ac)^p");
    const std::int64_t v2 = q.valuation(OkElement::integer(in.field(), 2));
    const std::int64_t num = 4 * v2 + 3 * q.valuation(mid);
    const std::int64_t den = 2 * in.p() * vabc;
    return num - den;
}

std::int64_t j_valuation(const FreyCurve& curve, const PrimeIdeal& P) {
    if (curve.j_num.is_zero()) throw std::domain_error("j_valuation: j = 0");
    return P.valuation(curve.j_num) - P.valuation(curve.j_den);
}

ReductionData reduction_type(const FreyCurve& curve, const PrimeIdeal& P) {
    if (P.residue_char() == 2) {
        throw std::domain_error("reduction_type: even primes are out of scope (no Tate algorithm "
                                "at residue characteristic 2)");
    }
    ReductionData rd{P, ReductionKind::Good, std::nullopt, std::nullopt};
    if (P.valuation(curve.delta) == 0) return rd;
    bool c4_unit_at_P = !curve.c4.is_zero() && P.valuation(curve.c4) == 0;
    rd.kind = c4_unit_at_P ? ReductionKind::Multiplicative : ReductionKind::Additive;
    if (rd.kind == ReductionKind::Additive && curve.input.is_primitive()) {
        throw std::logic_error("reduction_type: additive reduction at an odd prime is impossible "
                               "for a coprime triple");
    }
    return rd;
}

std::int64_t trace_of_frobenius(const FreyCurve& curve, const PrimeIdeal& P) {
    ReductionData rd = reduction_type(curve, P);
    if (rd.kind != ReductionKind::Good) {
        throw std::domain_error("trace_of_frobenius: bad reduction at " + P.label());
    }
    if (P.residue_size() > 1000000) {
        throw std::domain_error("trace_of_frobenius: residue field too large at " + P.label());
    }
    ResidueField F(P);
    auto Abar = F.reduce(curve.A);
    auto Bbar = F.reduce(curve.B);
    std::int64_t sum = 0;
    for (std::int64_t i = 0; i < F.size(); ++i) {
        auto x = F.element(i);
        auto fx = F.mul(F.mul(x, F.sub(x, Abar)), F.add(x, Bbar));
        sum += F.chi(fx);
    }
    return -sum;
}

ReductionData reduction_data(const FreyCurve& curve, const PrimeIdeal& P) {
    ReductionData rd = reduction_type(curve, P);
    if (rd.kind == ReductionKind::Good && P.residue_size() <= 1000000) {
        std::int64_t a = trace_of_frobenius(curve, P);
        rd.a_l = a;
        rd.point_count = P.residue_size() + 1 - a;
    }
    return rd;
}

std::vector<FreyInput> scale_by_representatives(const FreyInput& input,
                                                const CokernelReport& reps) {
    bool two_divides = false;
    for (auto& P : split_prime(input.field(), 2)) {
        if (v_abc(input, P) > 0) two_divides = true;
    }
    if (!two_divides) {
        throw std::domain_error("scale_by_representatives: 2 does not divide abc");
    }
    std::vector<FreyInput> out;
    out.reserve(reps.representatives.size());
    for (auto& lambda : reps.representatives) out.push_back(input.scaled_by(lambda));
    return out;
}

}  // namespace fermatiq
