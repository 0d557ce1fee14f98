#pragma once

#include <gmpxx.h>

#include <vector>

namespace fermatiq {

/// A Hecke eigenvalue field Q_f presented by a monic squarefree integer
/// polynomial; only integral elements (integer coordinates in the power
/// basis) are supported, which covers Bianchi eigenvalues.
class HeckeField {
public:
    /// Coefficients ascending, constant term first; the leading
    /// coefficient must be 1 and the polynomial squarefree.
    explicit HeckeField(std::vector<mpz_class> min_poly);

    /// Q itself, presented by the polynomial t.
    static HeckeField rationals();

    int degree() const noexcept { return static_cast<int>(min_poly_.size()) - 1; }
    const std::vector<mpz_class>& min_poly() const noexcept { return min_poly_; }

    bool operator==(const HeckeField& rhs) const { return min_poly_ == rhs.min_poly_; }

private:
    std::vector<mpz_class> min_poly_;
};

class HeckeElement {
public:
    /// Coefficients ascending in the power basis; reduced mod min_poly.
    HeckeElement(HeckeField field, std::vector<mpz_class> coeffs);

    static HeckeElement integer(const HeckeField& field, mpz_class n) {
        return HeckeElement(field, {std::move(n)});
    }
    static HeckeElement generator(const HeckeField& field) {
        return HeckeElement(field, {0, 1});
    }

    const HeckeField& field() const noexcept { return field_; }
    /// Ascending, trailing zeros trimmed; empty means zero.
    const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_rational() const noexcept { return coeffs_.size() <= 1; }

    HeckeElement operator+(const HeckeElement& rhs) const;
    HeckeElement operator-(const HeckeElement& rhs) const;
    HeckeElement operator*(const HeckeElement& rhs) const;
    HeckeElement operator-() const;
    bool operator==(const HeckeElement& rhs) const {
        return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
    }

    std::string str() const;  // polynomial in t

private:
    void require_same_field(const HeckeElement& rhs) const;

    HeckeField field_;
    std::vector<mpz_class> coeffs_;
};

/// Product of x over all conjugates: the resultant of min_poly and the
/// coordinate polynomial of x, exact in integers (Sylvester determinant,
/// fraction-free elimination). Rational integers m in a degree-n field
/// give m^n.
mpz_class field_norm(const HeckeElement& x);

/// Resultant of two integer polynomials (coefficients ascending).
mpz_class resultant(const std::vector<mpz_class>& f, const std::vector<mpz_class>& g);

}  // namespace fermatiq
