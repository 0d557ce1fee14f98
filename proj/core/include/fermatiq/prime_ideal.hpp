#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fermatiq/ok_element.hpp"

namespace fermatiq {

enum class SplitType { Split, Inert, Ramified };

/// A prime ideal of O_K. Class number one, so every prime is principal;
/// we carry a canonical generator (smallest (|y|,|x|) lexicographically,
/// ties broken by y >= 0 then x > 0) so that labels are deterministic.
///
/// Label format: "<l>.<norm>.<x>.<y>" with (x,y) the canonical generator
/// coordinates, e.g. the inert prime over 2 in Q(sqrt(-11)) is "2.4.2.0".
class PrimeIdeal {
public:
    PrimeIdeal(std::int64_t residue_char, SplitType split_type, OkElement generator,
               std::int64_t residue_size)
        : residue_char_(residue_char),
          split_type_(split_type),
          generator_(std::move(generator)),
          residue_size_(residue_size) {}

    std::int64_t residue_char() const noexcept { return residue_char_; }
    SplitType split_type() const noexcept { return split_type_; }
    const OkElement& generator() const noexcept { return generator_; }
    std::int64_t residue_size() const noexcept { return residue_size_; }
    const Field& field() const noexcept { return generator_.field(); }
    bool is_odd() const noexcept { return residue_char_ != 2; }

    std::string label() const;

    bool divides(const OkElement& e) const { return generator_.divides(e); }

    /// v_P(e) for e != 0 (throws std::domain_error at zero). Counts exact
    /// divisions by the generator, which is the ideal valuation even at
    /// ramified primes since P = (generator).
    int valuation(const OkElement& e) const;

    bool operator==(const PrimeIdeal& rhs) const {
        return generator_ == rhs.generator_;
    }

private:
    std::int64_t residue_char_;
    SplitType split_type_;
    OkElement generator_;
    std::int64_t residue_size_;
};

/// Prime ideals of O_K above the rational prime l, sorted by canonical
/// generator key. One entry for inert l (norm l^2) and for ramified l
/// (norm l, multiplicity implied by split_type); two entries for split l.
std::vector<PrimeIdeal> split_prime(const Field& field, std::int64_t l);

/// All primes of norm <= max_norm, sorted by (norm, label).
std::vector<PrimeIdeal> primes_up_to_norm(const Field& field, std::int64_t max_norm);

/// The unique prime above 2 in the six fields where 2 is inert.
/// Throws std::domain_error when 2 splits or ramifies.
PrimeIdeal inert_prime_above_2(const Field& field);

/// Parses and validates a canonical prime label against the field's own
/// labeling. Throws std::invalid_argument on malformed or non-canonical
/// labels.
PrimeIdeal parse_prime_label(const Field& field, const std::string& label);

/// Ideal-level coprimality: no prime of O_K divides both a and b.
bool coprime(const OkElement& a, const OkElement& b);

}  // namespace fermatiq
