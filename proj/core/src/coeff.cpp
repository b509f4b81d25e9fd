#include "qtri/coeff.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace qtri {

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// GaussianRational
// ---------------------------------------------------------------------------

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::from_fractions(const mpz_class& num, const mpz_class& den,
                                                  const mpz_class& inum, const mpz_class& iden) {
    if (sgn(den) == 0 || sgn(iden) == 0) throw std::domain_error("zero denominator");
    return {mpq_class(num, den), mpq_class(inum, iden)};
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    mpq_class norm = re_ * re_ + im_ * im_;
    return {re_ / norm, -im_ / norm};
}

GaussianRational GaussianRational::pow(std::int64_t e) const {
    GaussianRational base = e < 0 ? inverse() : *this;
    std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
    GaussianRational result(1);
    while (n) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n) base *= base;
    }
    return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string GaussianRational::to_string() const {
    if (is_real()) return re_.get_str();
    auto imag_part = [](const mpq_class& v) {
        return v == 1 ? std::string("i") : v.get_str() + "*i";
    };
    if (sgn(re_) == 0) {
        if (im_ == 1) return "i";
        return "(" + imag_part(im_) + ")";
    }
    std::string s = "(" + re_.get_str();
    if (sgn(im_) > 0) {
        s += "+" + imag_part(im_);
    } else {
        s += "-" + imag_part(mpq_class(-im_));
    }
    return s + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& c) { return os << c.to_string(); }

// ---------------------------------------------------------------------------
// ScalarQ
// ---------------------------------------------------------------------------

ScalarQ::ScalarQ(const GaussianRational& c, Exponent k) {
    if (!c.is_zero()) terms_.emplace(k, c);
}

bool ScalarQ::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == GaussianRational(1);
}

ScalarQ ScalarQ::unit_inverse() const {
    if (!is_unit()) throw std::domain_error("scalar " + to_string() + " is not a unit");
    const auto& [k, c] = *terms_.begin();
    if (k == INT64_MIN) throw std::overflow_error("exponent overflow");
    return {c.inverse(), -k};
}

ScalarQ ScalarQ::pow(std::int64_t e) const {
    if (e < 0) {
        if (e == INT64_MIN) throw std::overflow_error("exponent overflow");
        return unit_inverse().pow(-e);
    }
    if (is_unit()) {
        const auto& [k, c] = *terms_.begin();
        return {c.pow(e), detail::checked_mul(k, e)};
    }
    ScalarQ base = *this;
    ScalarQ result(1);
    auto n = static_cast<std::uint64_t>(e);
    while (n) {
        if (n & 1U) result = result * base;
        n >>= 1U;
        if (n) base = base * base;
    }
    return result;
}

ScalarQ ScalarQ::shifted(Exponent k) const {
    if (k == 0) return *this;
    ScalarQ r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), detail::checked_add(e, k), c);
    return r;
}

ScalarQ ScalarQ::conj() const {
    ScalarQ r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c.conj());
    return r;
}

GaussianRational ScalarQ::eval(const GaussianRational& q0) const {
    if (q0.is_zero()) throw std::domain_error("q must be evaluated at a unit");
    GaussianRational sum;
    for (const auto& [e, c] : terms_) sum += c * q0.pow(e);
    return sum;
}

void ScalarQ::add_term(Exponent k, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ScalarQ& ScalarQ::operator+=(const ScalarQ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ScalarQ& ScalarQ::operator-=(const ScalarQ& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ScalarQ operator*(const ScalarQ& a, const ScalarQ& b) {
    ScalarQ r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) r.add_term(detail::checked_add(ea, eb), ca * cb);
    }
    return r;
}

ScalarQ operator-(const ScalarQ& a) {
    ScalarQ r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
}

std::string ScalarQ::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        GaussianRational mag = c;
        bool negative = false;
        if ((c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0)) {
            negative = true;
            mag = -c;
        }
        if (first) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string qpart;
        if (k == 1) {
            qpart = "q";
        } else if (k != 0) {
            qpart = "q^" + std::to_string(k);
        }
        if (qpart.empty()) {
            out += mag.to_string();
        } else if (mag == GaussianRational(1)) {
            out += qpart;
        } else {
            out += mag.to_string() + "*" + qpart;
        }
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const ScalarQ& s) { return os << s.to_string(); }

std::optional<ScalarQ> divide_exact(const ScalarQ& a, const ScalarQ& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (a.is_zero()) return ScalarQ();
    if (b.is_unit()) return a * b.unit_inverse();

    // Strip the lowest q-powers; what remains are polynomials with nonzero
    // constant terms, and b | a in the Laurent ring iff B | A in Q(i)[q].
    const auto amin = a.min_exponent();
    const auto bmin = b.min_exponent();
    const auto adeg = detail::checked_add(a.max_exponent(), -amin);
    const auto bdeg = detail::checked_add(b.max_exponent(), -bmin);
    if (adeg < bdeg) return std::nullopt;

    std::vector<GaussianRational> rem(static_cast<std::size_t>(adeg) + 1);
    for (const auto& [e, c] : a.terms()) rem[static_cast<std::size_t>(e - amin)] = c;
    std::vector<GaussianRational> den(static_cast<std::size_t>(bdeg) + 1);
    for (const auto& [e, c] : b.terms()) den[static_cast<std::size_t>(e - bmin)] = c;

    const GaussianRational lead_inv = den.back().inverse();
    ScalarQ quotient;
    for (auto d = adeg; d >= bdeg; --d) {
        const GaussianRational& top = rem[static_cast<std::size_t>(d)];
        if (top.is_zero()) continue;
        GaussianRational factor = top * lead_inv;
        const auto shift = d - bdeg;
        for (std::int64_t j = 0; j <= bdeg; ++j) {
            if (!den[static_cast<std::size_t>(j)].is_zero())
                rem[static_cast<std::size_t>(shift + j)] -= factor * den[static_cast<std::size_t>(j)];
        }
        quotient.add_term(shift, factor);
    }
    for (const auto& c : rem) {
        if (!c.is_zero()) return std::nullopt;
    }
    return quotient.shifted(amin - bmin);
}

}  // namespace qtri
