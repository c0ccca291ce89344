#pragma once

#include <string>
#include <vector>

namespace hypwave {

/// Polynomial in the characteristic coordinates s = x + y, t = x - y,
/// stored as a dense coefficient table coeff[j][k] * s^j * t^k.  The wave
/// operator factorizes as Delta_2 = 4 d^2/(ds dt), so derivatives of these
/// polynomials stay in the class and every analytic quantity a field needs
/// (value, gradient, wave operator) is exact.
class PolyST {
public:
    PolyST() = default;

    static PolyST constant(double c);
    static PolyST monomial(int s_pow, int t_pow, double c);

    /// Sum of c_j s^j (a pure profile F(s)).
    static PolyST profile_s(const std::vector<double>& coeffs);
    /// Sum of c_k t^k (a pure profile G(t)).
    static PolyST profile_t(const std::vector<double>& coeffs);

    /// Parses the CLI mini-grammar: terms of integer/decimal coefficients
    /// and powers of s, t joined by '+'/'-', products with '*', powers with
    /// '^'.  Examples: "s^2", "t^3", "2*s*t - 0.5*t^2 + 1".
    /// Throws std::invalid_argument on malformed input.
    static PolyST parse(const std::string& text);

    double eval(double s, double t) const;
    PolyST ds() const;
    PolyST dt() const;

    PolyST& operator+=(const PolyST& other);
    PolyST& operator*=(double c);
    friend PolyST operator+(PolyST a, const PolyST& b) { return a += b; }
    friend PolyST operator*(double c, PolyST a) { return a *= c; }
    friend PolyST operator*(const PolyST& a, const PolyST& b);

    bool is_zero() const;
    int degree_s() const { return static_cast<int>(coeff_.size()) - 1; }

    /// Canonical text form (used by the CLI to echo parsed fields).
    std::string to_string() const;

private:
    // coeff_[j][k] multiplies s^j t^k; rows may be ragged.
    std::vector<std::vector<double>> coeff_;

    void set(int j, int k, double c);
    double get(int j, int k) const;
};

}  // namespace hypwave
