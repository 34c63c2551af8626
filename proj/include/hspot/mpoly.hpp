#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "hspot/rational.hpp"

namespace hspot {

/// Polynomial in the (symbolic) dimension m with exact rational coefficients.
/// coeffs[d] multiplies m^d.  The P_k / Q_k recurrences only ever multiply by
/// linear factors (m + c), so this stays closed under everything we need.
class MPoly {
  public:
    MPoly() = default;
    explicit MPoly(Rational constant) {
        if (constant != 0) coeffs_ = {std::move(constant)};
    }
    static MPoly m() { return MPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    MPoly operator+(const MPoly& o) const {
        std::vector<Rational> r(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
        for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
        return MPoly(std::move(r));
    }
    MPoly operator-() const {
        std::vector<Rational> r = coeffs_;
        for (auto& c : r) c = -c;
        return MPoly(std::move(r));
    }
    MPoly operator-(const MPoly& o) const { return *this + (-o); }

    MPoly operator*(const MPoly& o) const {
        if (is_zero() || o.is_zero()) return MPoly();
        std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < coeffs_.size(); ++i)
            for (size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
        return MPoly(std::move(r));
    }
    MPoly operator*(const Rational& s) const {
        if (s == 0) return MPoly();
        std::vector<Rational> r = coeffs_;
        for (auto& c : r) c *= s;
        return MPoly(std::move(r));
    }

    bool operator==(const MPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    Rational eval(long m) const {
        Rational acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * m + coeffs_[i];
        return acc;
    }

    /// Canonical rendering, highest degree first: "m^2+m", "-3*m-3", "0".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t i = coeffs_.size(); i-- > 0;) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? "+" : "");
            if (i == 0) {
                os << c;
            } else {
                if (c == -1)
                    os << "-";
                else if (c != 1)
                    os << c << "*";
                os << "m";
                if (i > 1) os << "^" << i;
            }
            first = false;
        }
        return os.str();
    }

  private:
    explicit MPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

inline MPoly m_plus(long c) { return MPoly::m() + MPoly(Rational(c)); }

}  // namespace hspot
