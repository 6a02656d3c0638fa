#pragma once

// Real quadratic fields Q(sqrt(d)): fundamental units from continued
// fractions, narrow class numbers from cycles of reduced forms, and the
// sine-product unit eta(d).

#include <string>
#include <string_view>

#include "arithgenus/big_real.hpp"
#include "arithgenus/number_core.hpp"

namespace arithgenus {

inline constexpr long kDefaultMaxD = 1'000'000;

class QuadField {
public:
    /// Throws DomainError unless d is squarefree with 1 < d <= max_d.
    explicit QuadField(long d, long max_d = kDefaultMaxD);

    long d() const noexcept { return d_; }
    /// d if d = 1 mod 4, else 4d.
    long discriminant() const noexcept { return d_ % 4 == 1 ? d_ : 4 * d_; }

    friend bool operator==(const QuadField&, const QuadField&) = default;

private:
    long d_;
};

/// A unit x + y*sqrt(d) of the maximal order of Q(sqrt(d)).
class QuadUnit {
public:
    /// Validates integrality and x^2 - d y^2 = +-1.
    QuadUnit(QuadField field, Rational x, Rational y);
    static QuadUnit one(QuadField field);
    /// Parses the `x + y*sqrt(d)` rendering produced by to_string().
    static QuadUnit parse(std::string_view text);

    const QuadField& field() const noexcept { return field_; }
    const Rational& x() const noexcept { return x_; }
    const Rational& y() const noexcept { return y_; }
    int norm() const noexcept { return norm_; }

    QuadUnit conjugate() const;
    QuadUnit inverse() const;
    QuadUnit pow(long n) const;
    bool is_torsion() const { return sgn(y_) == 0; }
    /// Exact comparison of the real embedding with 1.
    bool exceeds_one() const;

    std::string to_string() const;

    friend QuadUnit operator*(const QuadUnit& a, const QuadUnit& b);
    friend bool operator==(const QuadUnit& a, const QuadUnit& b) {
        return a.field_ == b.field_ && a.x_ == b.x_ && a.y_ == b.y_;
    }

private:
    QuadField field_;
    Rational x_;
    Rational y_;
    int norm_;
};

struct ClassData {
    QuadField field;
    long narrow_class_number;
    long class_number;
};

/// Smallest unit > 1 of the maximal order, from the period of the continued
/// fraction of a reduced quadratic irrational of the field.
QuadUnit fundamental_unit(const QuadField& field, long max_iterations = 10'000'000);
/// eps if N(eps) = +1, else eps^2.
QuadUnit norm_one_unit(const QuadField& field);

/// Narrow class number = number of cycles of reduced indefinite forms of the
/// fundamental discriminant; h = h+ or h+/2 depending on N(eps).
ClassData class_number(const QuadField& field);

/// prod_{r=1}^{D-1} sin(pi r/D)^(-(D/r)) with D the fundamental discriminant.
BigReal eta_analytic(const QuadField& field, long bits);
/// The same product for an arbitrary modulus (the as-printed reading uses d).
BigReal eta_with_modulus(long modulus, long bits);

BigReal unit_real_value(const QuadUnit& u, long bits);

/// Guard bits added to every requested precision.
inline constexpr long kGuardBits = 64;

}  // namespace arithgenus
