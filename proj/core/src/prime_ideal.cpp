#include "fermatiq/prime_ideal.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "fermatiq/factor.hpp"

namespace fermatiq {

namespace {

// Orders associate candidates so the front element is the canonical
// generator: minimal (|y|, |x|), preferring y >= 0, then x > 0.
bool canonical_less(const OkElement& a, const OkElement& b) {
    auto key = [](const OkElement& e) {
        return std::make_tuple(abs(e.y()), abs(e.x()), e.y() < 0, e.x() < 0);
    };
    return key(a) < key(b);
}

// All elements of the given (prime) norm, found by bounded search on the
// theta coordinate.
std::vector<OkElement> elements_of_norm(const Field& f, std::int64_t target) {
    std::vector<OkElement> out;
    const long d = f.d();
    if (f.theta_kind() == ThetaKind::SqrtMinusD) {
        // x^2 + d y^2 = target
        for (std::int64_t y = 0; y * y * d <= target; ++y) {
            mpz_class x2 = mpz_class(static_cast<long>(target)) - mpz_class(d) * y * y;
            if (x2 < 0) break;
            if (mpz_perfect_square_p(x2.get_mpz_t()) == 0) continue;
            mpz_class x = sqrt(x2);
            for (int sx : {1, -1}) {
                for (int sy : {1, -1}) {
                    OkElement e(f, sx > 0 ? x : -x, sy > 0 ? mpz_class(y) : mpz_class(-y));
                    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
                }
            }
        }
    } else {
        // x^2 + xy + c y^2 = target <=> (2x+y)^2 + d y^2 = 4*target
        for (std::int64_t y = 0; y * y * d <= 4 * target; ++y) {
            mpz_class s2 = 4 * mpz_class(static_cast<long>(target)) - mpz_class(d) * y * y;
            if (s2 < 0) break;
            if (mpz_perfect_square_p(s2.get_mpz_t()) == 0) continue;
            mpz_class s = sqrt(s2);
            for (int sy : {1, -1}) {
                mpz_class yy = sy > 0 ? mpz_class(y) : mpz_class(-y);
                for (int ss : {1, -1}) {
                    mpz_class top = (ss > 0 ? s : -s) - yy;
                    if (!mpz_divisible_ui_p(top.get_mpz_t(), 2)) continue;
                    OkElement e(f, top / 2, yy);
                    if (e.norm() != target) continue;
                    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
                }
            }
        }
    }
    return out;
}

// Groups the norm-l elements into associate classes and returns the
// canonical generator of each class.
std::vector<OkElement> canonical_generators(const std::vector<OkElement>& elts) {
    std::vector<OkElement> gens;
    std::vector<bool> used(elts.size(), false);
    for (std::size_t i = 0; i < elts.size(); ++i) {
        if (used[i]) continue;
        OkElement best = elts[i];
        for (std::size_t j = i; j < elts.size(); ++j) {
            if (used[j]) continue;
            if (elts[i].divides(elts[j])) {  // same norm => associates
                used[j] = true;
                if (canonical_less(elts[j], best)) best = elts[j];
            }
        }
        gens.push_back(best);
    }
    std::sort(gens.begin(), gens.end(), canonical_less);
    return gens;
}

}  // namespace

std::string PrimeIdeal::label() const {
    return std::to_string(residue_char_) + "." + std::to_string(residue_size_) + "." +
           generator_.x().get_str() + "." + generator_.y().get_str();
}

int PrimeIdeal::valuation(const OkElement& e) const {
    if (e.is_zero()) throw std::domain_error("PrimeIdeal::valuation of zero");
    int v = 0;
    OkElement cur = e;
    while (true) {
        auto next = cur.divide_exact(generator_);
        if (!next) return v;
        cur = *next;
        ++v;
    }
}

std::vector<PrimeIdeal> split_prime(const Field& field, std::int64_t l) {
    if (!is_prime(l)) throw std::invalid_argument("split_prime: " + std::to_string(l) + " is not prime");
    const long disc = field.discriminant();
    mpz_class disc_z(disc);
    const bool ramified = mpz_divisible_ui_p(mpz_class(-disc_z).get_mpz_t(),
                                             static_cast<unsigned long>(l)) != 0;
    std::vector<PrimeIdeal> out;
    if (ramified) {
        auto gens = canonical_generators(elements_of_norm(field, l));
        if (gens.size() != 1) throw std::logic_error("split_prime: ramified prime search failed");
        out.emplace_back(l, SplitType::Ramified, gens[0], l);
        return out;
    }
    int symbol = mpz_kronecker_si(disc_z.get_mpz_t(), static_cast<long>(l));
    if (symbol == -1) {
        out.emplace_back(l, SplitType::Inert, OkElement::integer(field, static_cast<long>(l)),
                         l * l);
        return out;
    }
    auto gens = canonical_generators(elements_of_norm(field, l));
    if (gens.size() != 2) throw std::logic_error("split_prime: expected two primes above split " +
                                                 std::to_string(l));
    for (auto& g : gens) out.emplace_back(l, SplitType::Split, g, l);
    // report order = label order, for stable tables
    std::sort(out.begin(), out.end(),
              [](const PrimeIdeal& a, const PrimeIdeal& b) { return a.label() < b.label(); });
    return out;
}

std::vector<PrimeIdeal> primes_up_to_norm(const Field& field, std::int64_t max_norm) {
    std::vector<PrimeIdeal> out;
    for (std::int64_t l : primes_up_to(max_norm)) {
        for (auto& P : split_prime(field, l)) {
            if (P.residue_size() <= max_norm) out.push_back(P);
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
        if (a.residue_size() != b.residue_size()) return a.residue_size() < b.residue_size();
        return a.label() < b.label();
    });
    return out;
}

PrimeIdeal inert_prime_above_2(const Field& field) {
    auto above = split_prime(field, 2);
    if (above.size() != 1 || above[0].split_type() != SplitType::Inert) {
        throw std::domain_error("2 is not inert in " + field.name());
    }
    return above[0];
}

PrimeIdeal parse_prime_label(const Field& field, const std::string& label) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : label) {
        if (ch == '.') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 4) throw std::invalid_argument("bad prime label: " + label);
    std::int64_t l, nrm;
    mpz_class x, y;
    try {
        l = std::stoll(parts[0]);
        nrm = std::stoll(parts[1]);
        x = mpz_class(parts[2]);
        y = mpz_class(parts[3]);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad prime label: " + label);
    }
    for (auto& P : split_prime(field, l)) {
        if (P.residue_size() == nrm && P.generator().x() == x && P.generator().y() == y) return P;
    }
    throw std::invalid_argument("label " + label + " does not name a canonical prime of " +
                                field.name());
}

bool coprime(const OkElement& a, const OkElement& b) {
    if (a.is_zero() && b.is_zero()) return false;
    if (a.is_zero()) return b.is_unit();
    if (b.is_zero()) return a.is_unit();
    mpz_class g = gcd(a.norm(), b.norm());
    for (const auto& [p, e] : factorize(g)) {
        if (!p.fits_slong_p()) throw std::domain_error("coprime: norm gcd factor too large");
        for (auto& P : split_prime(a.field(), p.get_si())) {
            if (P.divides(a) && P.divides(b)) return false;
        }
    }
    return true;
}

}  // namespace fermatiq
