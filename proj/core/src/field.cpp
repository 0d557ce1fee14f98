#include "fermatiq/field.hpp"

#include <array>
#include <stdexcept>

namespace fermatiq {

namespace {

constexpr std::array<int, 9> kClassNumberOneDs = {1, 2, 3, 7, 11, 19, 43, 67, 163};

ThetaKind kind_for(int d) {
    return (d % 4 == 3) ? ThetaKind::HalfOnePlusSqrtMinusD : ThetaKind::SqrtMinusD;
}

long disc_for(int d) {
    return (d % 4 == 3) ? -static_cast<long>(d) : -4L * d;
}

int units_for(int d) {
    if (d == 1) return 4;
    if (d == 3) return 6;
    return 2;
}

}  // namespace

bool Field::two_is_inert() const noexcept {
    // disc odd and disc = 5 (mod 8); concretely d = 3 (mod 8).
    return d_ % 8 == 3;
}

std::string Field::name() const {
    return "Q(sqrt(-" + std::to_string(d_) + "))";
}

const Field& make_field(int d) {
    static const std::array<Field, 9> table = {
        Field(1, kind_for(1), disc_for(1), units_for(1)),
        Field(2, kind_for(2), disc_for(2), units_for(2)),
        Field(3, kind_for(3), disc_for(3), units_for(3)),
        Field(7, kind_for(7), disc_for(7), units_for(7)),
        Field(11, kind_for(11), disc_for(11), units_for(11)),
        Field(19, kind_for(19), disc_for(19), units_for(19)),
        Field(43, kind_for(43), disc_for(43), units_for(43)),
        Field(67, kind_for(67), disc_for(67), units_for(67)),
        Field(163, kind_for(163), disc_for(163), units_for(163)),
    };
    for (std::size_t i = 0; i < kClassNumberOneDs.size(); ++i) {
        if (kClassNumberOneDs[i] == d) return table[i];
    }
    throw std::invalid_argument("make_field: Q(sqrt(-" + std::to_string(d) +
                                ")) does not have class number one");
}

const int* all_field_ds(int& count) noexcept {
    count = static_cast<int>(kClassNumberOneDs.size());
    return kClassNumberOneDs.data();
}

}  // namespace fermatiq
