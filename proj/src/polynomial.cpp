#include "hypwave/polynomial.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace hypwave {

void PolyST::set(int j, int k, double c) {
    if (j >= static_cast<int>(coeff_.size())) coeff_.resize(j + 1);
    auto& row = coeff_[j];
    if (k >= static_cast<int>(row.size())) row.resize(k + 1, 0.0);
    row[k] = c;
}

double PolyST::get(int j, int k) const {
    if (j >= static_cast<int>(coeff_.size())) return 0.0;
    const auto& row = coeff_[j];
    if (k >= static_cast<int>(row.size())) return 0.0;
    return row[k];
}

PolyST PolyST::constant(double c) { return monomial(0, 0, c); }

PolyST PolyST::monomial(int s_pow, int t_pow, double c) {
    PolyST p;
    p.set(s_pow, t_pow, c);
    return p;
}

PolyST PolyST::profile_s(const std::vector<double>& coeffs) {
    PolyST p;
    for (int j = 0; j < static_cast<int>(coeffs.size()); ++j) p.set(j, 0, coeffs[j]);
    return p;
}

PolyST PolyST::profile_t(const std::vector<double>& coeffs) {
    PolyST p;
    for (int k = 0; k < static_cast<int>(coeffs.size()); ++k) p.set(0, k, coeffs[k]);
    return p;
}

double PolyST::eval(double s, double t) const {
    // Horner in s of Horner-in-t rows.
    double acc = 0.0;
    for (int j = static_cast<int>(coeff_.size()) - 1; j >= 0; --j) {
        double row = 0.0;
        const auto& r = coeff_[j];
        for (int k = static_cast<int>(r.size()) - 1; k >= 0; --k) {
            row = row * t + r[k];
        }
        acc = acc * s + row;
    }
    return acc;
}

PolyST PolyST::ds() const {
    PolyST out;
    for (int j = 1; j < static_cast<int>(coeff_.size()); ++j) {
        for (int k = 0; k < static_cast<int>(coeff_[j].size()); ++k) {
            if (coeff_[j][k] != 0.0) out.set(j - 1, k, j * coeff_[j][k]);
        }
    }
    return out;
}

PolyST PolyST::dt() const {
    PolyST out;
    for (int j = 0; j < static_cast<int>(coeff_.size()); ++j) {
        for (int k = 1; k < static_cast<int>(coeff_[j].size()); ++k) {
            if (coeff_[j][k] != 0.0) out.set(j, k - 1, k * coeff_[j][k]);
        }
    }
    return out;
}

PolyST& PolyST::operator+=(const PolyST& other) {
    for (int j = 0; j < static_cast<int>(other.coeff_.size()); ++j) {
        for (int k = 0; k < static_cast<int>(other.coeff_[j].size()); ++k) {
            const double c = other.coeff_[j][k];
            if (c != 0.0) set(j, k, get(j, k) + c);
        }
    }
    return *this;
}

PolyST& PolyST::operator*=(double c) {
    for (auto& row : coeff_) {
        for (auto& v : row) v *= c;
    }
    return *this;
}

PolyST operator*(const PolyST& a, const PolyST& b) {
    PolyST out;
    for (int j = 0; j < static_cast<int>(a.coeff_.size()); ++j) {
        for (int k = 0; k < static_cast<int>(a.coeff_[j].size()); ++k) {
            const double ca = a.coeff_[j][k];
            if (ca == 0.0) continue;
            for (int m = 0; m < static_cast<int>(b.coeff_.size()); ++m) {
                for (int n = 0; n < static_cast<int>(b.coeff_[m].size()); ++n) {
                    const double cb = b.coeff_[m][n];
                    if (cb == 0.0) continue;
                    out.set(j + m, k + n, out.get(j + m, k + n) + ca * cb);
                }
            }
        }
    }
    return out;
}

bool PolyST::is_zero() const {
    for (const auto& row : coeff_) {
        for (double v : row) {
            if (v != 0.0) return false;
        }
    }
    return true;
}

std::string PolyST::to_string() const {
    std::string out;
    char buf[64];
    for (int j = 0; j < static_cast<int>(coeff_.size()); ++j) {
        for (int k = 0; k < static_cast<int>(coeff_[j].size()); ++k) {
            const double c = coeff_[j][k];
            if (c == 0.0) continue;
            if (!out.empty()) out += (c < 0.0 ? " - " : " + ");
            else if (c < 0.0) out += "-";
            const double a = std::abs(c);
            if (a != 1.0 || (j == 0 && k == 0)) {
                std::snprintf(buf, sizeof buf, "%.17g", a);
                out += buf;
                if (j > 0 || k > 0) out += "*";
            }
            if (j > 0) {
                out += "s";
                if (j > 1) {
                    std::snprintf(buf, sizeof buf, "^%d", j);
                    out += buf;
                }
            }
            if (k > 0) {
                if (j > 0) out += "*";
                out += "t";
                if (k > 1) {
                    std::snprintf(buf, sizeof buf, "^%d", k);
                    out += buf;
                }
            }
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

// Recursive-descent parser for the field mini-grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := number | var ['^' integer] | '(' expr ')'
struct Parser {
    const char* p;

    explicit Parser(const char* text) : p(text) {}

    void skip() {
        while (*p == ' ' || *p == '\t') ++p;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("field expression: " + msg);
    }

    PolyST expr() {
        skip();
        bool neg = false;
        if (*p == '-') {
            neg = true;
            ++p;
        } else if (*p == '+') {
            ++p;
        }
        PolyST acc = term();
        if (neg) acc *= -1.0;
        skip();
        while (*p == '+' || *p == '-') {
            const bool minus = (*p == '-');
            ++p;
            PolyST t = term();
            if (minus) t *= -1.0;
            acc += t;
            skip();
        }
        return acc;
    }

    PolyST term() {
        PolyST acc = factor();
        skip();
        while (*p == '*') {
            ++p;
            acc = acc * factor();
            skip();
        }
        return acc;
    }

    PolyST factor() {
        skip();
        if (*p == '(') {
            ++p;
            PolyST inner = expr();
            skip();
            if (*p != ')') fail("missing ')'");
            ++p;
            return inner;
        }
        if (*p == 's' || *p == 't') {
            const bool is_s = (*p == 's');
            ++p;
            int power = 1;
            skip();
            if (*p == '^') {
                ++p;
                skip();
                if (!std::isdigit(static_cast<unsigned char>(*p))) fail("expected integer exponent");
                power = 0;
                while (std::isdigit(static_cast<unsigned char>(*p))) {
                    power = power * 10 + (*p - '0');
                    ++p;
                }
                if (power > 24) fail("exponent too large");
            }
            return is_s ? PolyST::monomial(power, 0, 1.0) : PolyST::monomial(0, power, 1.0);
        }
        if (std::isdigit(static_cast<unsigned char>(*p)) || *p == '.') {
            char* end = nullptr;
            const double v = std::strtod(p, &end);
            if (end == p) fail("expected number");
            p = end;
            return PolyST::constant(v);
        }
        fail(std::string("unexpected character '") + (*p ? std::string(1, *p) : "end") + "'");
    }
};

}  // namespace

PolyST PolyST::parse(const std::string& text) {
    Parser parser(text.c_str());
    PolyST result = parser.expr();
    parser.skip();
    if (*parser.p != '\0') parser.fail("trailing input");
    return result;
}

}  // namespace hypwave
