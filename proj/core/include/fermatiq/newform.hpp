#pragma once

#include <complex>
#include <map>
#include <string>

#include "fermatiq/hecke_field.hpp"
#include "fermatiq/prime_ideal.hpp"

namespace fermatiq {

/// A Bianchi newform as ingested data: its level (a prime power, in
/// practice dividing q^4), Hecke eigenvalue field, and eigenvalues keyed
/// by canonical prime labels.
struct NewformRecord {
    int field_d = 0;
    PrimeIdeal level_prime;
    int level_exponent = 0;
    HeckeField hecke_field;
    std::map<std::string, HeckeElement> eigenvalues;
    std::string source;  // file name or synthetic id, for reports

    std::string level_label() const {
        return level_prime.label() + "^" + std::to_string(level_exponent);
    }
    bool has_eigenvalue(const PrimeIdeal& P) const {
        return eigenvalues.count(P.label()) != 0;
    }
    const HeckeElement& eigenvalue(const PrimeIdeal& P) const;
};

/// All complex roots of the field's minimal polynomial
/// (Durand-Kerner iteration; used only for archimedean sanity bounds).
std::vector<std::complex<double>> min_poly_roots(const HeckeField& field);

/// Checks the record invariants: eigenvalue primes are odd (coprime to
/// the level) with canonical labels, and every eigenvalue obeys the
/// Ramanujan-style bound |a| <= 2 sqrt(N(P)) + 1e-6 in every embedding.
/// Throws std::invalid_argument with a diagnostic on violation.
void validate_newform(const NewformRecord& f);

}  // namespace fermatiq
