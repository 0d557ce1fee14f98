#include "fermatiq/newform.hpp"

#include <cmath>
#include <stdexcept>

namespace fermatiq {

const HeckeElement& NewformRecord::eigenvalue(const PrimeIdeal& P) const {
    auto it = eigenvalues.find(P.label());
    if (it == eigenvalues.end()) {
        throw std::out_of_range("newform " + source + ": missing eigenvalue at " + P.label());
    }
    return it->second;
}

std::vector<std::complex<double>> min_poly_roots(const HeckeField& field) {
    const auto& f = field.min_poly();
    const int n = field.degree();
    std::vector<std::complex<double>> c(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) c[i] = f[i].get_d();
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * z + c[static_cast<std::size_t>(i)];
        return acc;
    };
    // Durand-Kerner from a non-real seed spread.
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(n));
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> cur(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
        cur *= seed;
        roots[static_cast<std::size_t>(i)] = cur;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom = 1;
            for (int j = 0; j < n; ++j) {
                if (j != i) denom *= roots[static_cast<std::size_t>(i)] - roots[static_cast<std::size_t>(j)];
            }
            std::complex<double> delta = eval(roots[static_cast<std::size_t>(i)]) / denom;
            roots[static_cast<std::size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-13) break;
    }
    return roots;
}

void validate_newform(const NewformRecord& f) {
    const Field& K = make_field(f.field_d);
    if (f.level_exponent < 1) {
        throw std::invalid_argument("newform " + f.source + ": level exponent must be >= 1");
    }
    auto roots = min_poly_roots(f.hecke_field);
    for (const auto& [label, a] : f.eigenvalues) {
        PrimeIdeal P = parse_prime_label(K, label);  // throws when non-canonical
        if (P.residue_char() == f.level_prime.residue_char()) {
            throw std::invalid_argument("newform " + f.source + ": eigenvalue prime " + label +
                                        " divides the level");
        }
        const double bound = 2.0 * std::sqrt(static_cast<double>(P.residue_size())) + 1e-6;
        for (auto root : roots) {
            std::complex<double> val = 0;
            const auto& cs = a.coeffs();
            for (std::size_t i = cs.size(); i-- > 0;) val = val * root + cs[i].get_d();
            if (std::abs(val) > bound) {
                throw std::invalid_argument("newform " + f.source + ": eigenvalue at " + label +
                                            " violates the Hasse bound in an embedding");
            }
        }
    }
}

}  // namespace fermatiq
