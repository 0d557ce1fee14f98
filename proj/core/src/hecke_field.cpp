#include "fermatiq/hecke_field.hpp"

#include <stdexcept>

namespace fermatiq {

namespace {

void trim(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

// Exact determinant by Bareiss fraction-free elimination with row pivoting.
mpz_class determinant(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Reduce coeffs (ascending) mod the monic polynomial f, in place.
void reduce_mod(std::vector<mpz_class>& a, const std::vector<mpz_class>& f) {
    const std::size_t n = f.size() - 1;  // degree of f
    while (a.size() > n) {
        mpz_class lead = a.back();
        a.pop_back();
        if (lead == 0) continue;
        const std::size_t k = a.size();  // degree of the removed term
        for (std::size_t j = 0; j < n; ++j) {
            a[k - n + j] -= lead * f[j];
        }
    }
    trim(a);
}

}  // namespace

HeckeField::HeckeField(std::vector<mpz_class> min_poly) : min_poly_(std::move(min_poly)) {
    trim(min_poly_);
    if (min_poly_.size() < 2) {
        throw std::invalid_argument("HeckeField: minimal polynomial must have degree >= 1");
    }
    if (min_poly_.back() != 1) {
        throw std::invalid_argument("HeckeField: minimal polynomial must be monic");
    }
    // Squarefree <=> disc != 0 <=> Res(f, f') != 0.
    std::vector<mpz_class> deriv;
    for (std::size_t i = 1; i < min_poly_.size(); ++i) deriv.push_back(min_poly_[i] * static_cast<long>(i));
    if (resultant(min_poly_, deriv) == 0) {
        throw std::invalid_argument("HeckeField: minimal polynomial is not squarefree");
    }
}

HeckeField HeckeField::rationals() { return HeckeField({0, 1}); }

void HeckeElement::require_same_field(const HeckeElement& rhs) const {
    if (!(field_ == rhs.field_)) throw std::invalid_argument("HeckeElement: field mismatch");
}

HeckeElement::HeckeElement(HeckeField field, std::vector<mpz_class> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    reduce_mod(coeffs_, field_.min_poly());
}

HeckeElement HeckeElement::operator+(const HeckeElement& rhs) const {
    require_same_field(rhs);
    std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
    return HeckeElement(field_, std::move(out));
}

HeckeElement HeckeElement::operator-(const HeckeElement& rhs) const {
    require_same_field(rhs);
    std::vector<mpz_class> out(std::max(coeffs_.size(), rhs.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] -= rhs.coeffs_[i];
    return HeckeElement(field_, std::move(out));
}

HeckeElement HeckeElement::operator-() const {
    std::vector<mpz_class> out;
    out.reserve(coeffs_.size());
    for (auto& c : coeffs_) out.push_back(-c);
    return HeckeElement(field_, std::move(out));
}

HeckeElement HeckeElement::operator*(const HeckeElement& rhs) const {
    require_same_field(rhs);
    if (is_zero() || rhs.is_zero()) return HeckeElement(field_, {});
    std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return HeckeElement(field_, std::move(out));
}

std::string HeckeElement::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += coeffs_[i] > 0 ? "+" : "";
        if (i == 0) {
            out += coeffs_[i].get_str();
        } else {
            if (coeffs_[i] == -1) out += "-";
            else if (coeffs_[i] != 1) out += coeffs_[i].get_str() + "*";
            out += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

mpz_class resultant(const std::vector<mpz_class>& f_in, const std::vector<mpz_class>& g_in) {
    std::vector<mpz_class> f = f_in, g = g_in;
    trim(f);
    trim(g);
    if (f.empty() || g.empty()) return 0;
    const std::size_t m = f.size() - 1, n = g.size() - 1;
    if (m == 0 && n == 0) return 1;
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g[0].get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f[0].get_mpz_t(), static_cast<unsigned long>(n));
        // Res(f,g) = (-1)^{mn} Res(g,f); m = 0 so the sign is +1.
        return r;
    }
    // Sylvester matrix: n shifted rows of f above m shifted rows of g,
    // coefficients written descending.
    const std::size_t size = m + n;
    std::vector<std::vector<mpz_class>> s(size, std::vector<mpz_class>(size, 0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
    }
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
    }
    return determinant(std::move(s));
}

mpz_class field_norm(const HeckeElement& x) {
    if (x.is_zero()) return 0;
    const auto& f = x.field().min_poly();
    if (x.is_rational()) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), x.coeffs()[0].get_mpz_t(),
                   static_cast<unsigned long>(x.field().degree()));
        return r;
    }
    // f monic, so Res(f, x) is exactly the product of x over the roots.
    return resultant(f, x.coeffs());
}

}  // namespace fermatiq
