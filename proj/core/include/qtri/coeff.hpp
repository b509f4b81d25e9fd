#pragma once

// Scalar ring: Laurent polynomials in a formal variable q with Gaussian
// rational coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace qtri {

/// An element re + im*i of Q(i), always held in lowest terms.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(mpq_class re, mpq_class im = 0);

    /// Builds num/den + (inum/iden) i; denominators must be nonzero.
    static GaussianRational from_fractions(const mpz_class& num, const mpz_class& den,
                                           const mpz_class& inum = 0,
                                           const mpz_class& iden = 1);
    static GaussianRational imaginary_unit() { return {0, 1}; }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// Throws std::domain_error on zero.
    GaussianRational inverse() const;
    GaussianRational pow(std::int64_t e) const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        return a * b.inverse();
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// "a/b", "(c/d*i)" or "(a/b+c/d*i)".
    std::string to_string() const;

private:
    mpq_class re_;
    mpq_class im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& c);

/// Sparse Laurent polynomial sum_k c_k q^k with no zero coefficient stored.
/// Two scalars are equal iff their term maps coincide.
class ScalarQ {
public:
    using Exponent = std::int64_t;
    using TermMap = std::map<Exponent, GaussianRational>;

    ScalarQ() = default;
    ScalarQ(long value) : ScalarQ(GaussianRational(value)) {}  // NOLINT(google-explicit-constructor)
    ScalarQ(const GaussianRational& c, Exponent k = 0);     // NOLINT(google-explicit-constructor)

    static ScalarQ q_power(Exponent k) { return {GaussianRational(1), k}; }
    static ScalarQ q() { return q_power(1); }
    static ScalarQ imaginary_unit() { return ScalarQ(GaussianRational::imaginary_unit()); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    /// A unit of the Laurent ring: a single nonzero term c q^k.
    bool is_unit() const { return terms_.size() == 1; }
    /// Throws std::domain_error unless is_unit().
    ScalarQ unit_inverse() const;
    /// Integer powers; negative exponents require a unit.
    ScalarQ pow(std::int64_t e) const;

    /// Multiplication by q^k.
    ScalarQ shifted(Exponent k) const;
    /// Coefficient-wise conjugation; q is fixed.
    ScalarQ conj() const;
    /// Exact evaluation at q = q0; throws std::domain_error when q0 == 0.
    GaussianRational eval(const GaussianRational& q0) const;

    Exponent min_exponent() const { return terms_.begin()->first; }
    Exponent max_exponent() const { return terms_.rbegin()->first; }

    void add_term(Exponent k, const GaussianRational& c);

    ScalarQ& operator+=(const ScalarQ& o);
    ScalarQ& operator-=(const ScalarQ& o);
    ScalarQ& operator*=(const ScalarQ& o) { return *this = *this * o; }

    friend ScalarQ operator+(ScalarQ a, const ScalarQ& b) { return a += b; }
    friend ScalarQ operator-(ScalarQ a, const ScalarQ& b) { return a -= b; }
    friend ScalarQ operator*(const ScalarQ& a, const ScalarQ& b);
    friend ScalarQ operator-(const ScalarQ& a);
    friend bool operator==(const ScalarQ& a, const ScalarQ& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const ScalarQ& s);

inline ScalarQ conj(const ScalarQ& s) { return s.conj(); }
inline GaussianRational eval(const ScalarQ& s, const GaussianRational& q0) { return s.eval(q0); }

/// a / b inside the Laurent ring, or nullopt when b does not divide a.
/// Throws std::domain_error when b is zero.
std::optional<ScalarQ> divide_exact(const ScalarQ& a, const ScalarQ& b);

namespace detail {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace detail

}  // namespace qtri
