#pragma once

#include "arith.hpp"

namespace wfano {

// Polynomial arithmetic truncated at a fixed degree, exact integer coefficients.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int truncation) {
        require(truncation >= 0, "TruncatedSeries: negative truncation");
        coeff_.assign(static_cast<std::size_t>(truncation) + 1, Int(0));
    }

    static TruncatedSeries one(int truncation) {
        TruncatedSeries s(truncation);
        s.coeff_[0] = 1;
        return s;
    }

    // coefficient * t^exponent, zero when the exponent exceeds the truncation
    static TruncatedSeries monomial(int truncation, int exponent, Int coefficient) {
        TruncatedSeries s(truncation);
        require(exponent >= 0, "TruncatedSeries: negative exponent");
        if (exponent <= truncation)
            s.coeff_[static_cast<std::size_t>(exponent)] = std::move(coefficient);
        return s;
    }

    int truncation() const { return static_cast<int>(coeff_.size()) - 1; }

    const Int& at(int i) const {
        require(i >= 0 && i <= truncation(), "TruncatedSeries: coefficient index out of range");
        return coeff_[static_cast<std::size_t>(i)];
    }

    const std::vector<Int>& coefficients() const { return coeff_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        require(a.truncation() == b.truncation(), "TruncatedSeries: truncation mismatch");
        TruncatedSeries out(a.truncation());
        for (std::size_t i = 0; i < a.coeff_.size(); ++i)
            out.coeff_[i] = a.coeff_[i] + b.coeff_[i];
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        require(a.truncation() == b.truncation(), "TruncatedSeries: truncation mismatch");
        TruncatedSeries out(a.truncation());
        for (std::size_t i = 0; i < a.coeff_.size(); ++i)
            out.coeff_[i] = a.coeff_[i] - b.coeff_[i];
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        require(a.truncation() == b.truncation(), "TruncatedSeries: truncation mismatch");
        TruncatedSeries out(a.truncation());
        const auto nz_a = nonzero_indices(a.coeff_);
        const auto nz_b = nonzero_indices(b.coeff_);
        // iterate the sparser factor outermost
        const bool a_outer = nz_a.size() <= nz_b.size();
        const auto& outer = a_outer ? nz_a : nz_b;
        const auto& inner = a_outer ? nz_b : nz_a;
        const auto& oc = a_outer ? a.coeff_ : b.coeff_;
        const auto& ic = a_outer ? b.coeff_ : a.coeff_;
        for (std::size_t i : outer)
            for (std::size_t j : inner) {
                if (i + j >= out.coeff_.size()) break;
                out.coeff_[i + j] += oc[i] * ic[j];
            }
        return out;
    }

    // Power-series division; requires the divisor to have constant term 1, so
    // the quotient coefficients stay integral without any rounding choice.
    TruncatedSeries divided_by(const TruncatedSeries& divisor) const {
        require(truncation() == divisor.truncation(), "TruncatedSeries: truncation mismatch");
        require(divisor.coeff_[0] == 1,
                "TruncatedSeries: division requires a divisor with constant term 1");
        std::vector<std::size_t> nz;  // nonzero divisor indices past the constant term
        for (std::size_t k = 1; k < divisor.coeff_.size(); ++k)
            if (divisor.coeff_[k] != 0) nz.push_back(k);
        TruncatedSeries out(truncation());
        for (std::size_t m = 0; m < coeff_.size(); ++m) {
            Int acc = coeff_[m];
            for (std::size_t k : nz) {
                if (k > m) break;
                acc -= divisor.coeff_[k] * out.coeff_[m - k];
            }
            out.coeff_[m] = std::move(acc);
        }
        return out;
    }

    bool operator==(const TruncatedSeries& other) const { return coeff_ == other.coeff_; }

private:
    static std::vector<std::size_t> nonzero_indices(const std::vector<Int>& c) {
        std::vector<std::size_t> nz;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) nz.push_back(i);
        return nz;
    }

    std::vector<Int> coeff_;
};

}  // namespace wfano
