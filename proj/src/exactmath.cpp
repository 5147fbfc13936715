#include "cyclo/exactmath.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cyclo {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    std::string_view num = body;
    std::string_view den;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
        if (!all_digits(den)) throw ParseError("malformed rational: '" + std::string(s) + "'");
    }
    if (!all_digits(num)) throw ParseError("malformed rational: '" + std::string(s) + "'");

    mpz_class n(std::string(num), 10);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    if (negative) n = -n;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    return value.get_str(10);
}

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    normalize();
}

RatPoly::RatPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

RatPoly RatPoly::constant(const Rational& c) {
    return RatPoly(std::vector<Rational>{c});
}

RatPoly RatPoly::monomial(std::size_t k, const Rational& c) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::unity_minus_one(std::size_t n) {
    std::vector<Rational> v(n + 1);
    v[0] = -1;
    v[n] += 1;
    return RatPoly(std::move(v));
}

void RatPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RatPoly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& RatPoly::leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

bool RatPoly::is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == 1;
}

bool RatPoly::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.get_den() == 1; });
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    return inv * *this;
}

RatPoly RatPoly::reversed() const {
    std::vector<Rational> v(coeffs_.rbegin(), coeffs_.rend());
    return RatPoly(std::move(v));
}

RatPoly RatPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
    return RatPoly(std::move(v));
}

Rational RatPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a) {
    std::vector<Rational> v(a.coeffs_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = -a.coeffs_[k];
    return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    return a + (-b);
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RatPoly(std::move(v));
}

RatPoly operator*(const Rational& c, const RatPoly& a) {
    if (c == 0) return {};
    std::vector<Rational> v(a.coeffs_.size());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = c * a.coeffs_[k];
    return RatPoly(std::move(v));
}

DivMod divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPoly{}, a};

    std::vector<Rational> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const Rational inv_lc = 1 / bc.back();
    std::vector<Rational> quot(rem.size() - db);

    for (std::size_t k = quot.size(); k-- > 0;) {
        Rational q = rem[k + db] * inv_lc;
        quot[k] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    }
    rem.resize(db);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) {
    return divmod(a, b).remainder;
}

RatPoly exact_divide(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("non-exact polynomial division");
    return q;
}

bool divides(const RatPoly& divisor, const RatPoly& p) {
    return (p % divisor).is_zero();
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
    RatPoly r0 = a.monic();
    RatPoly r1 = b.monic();
    while (!r1.is_zero()) {
        RatPoly r2 = (r0 % r1).monic();
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0;
}

Bezout xgcd(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("xgcd of two zero polynomials");
    if (a.is_zero()) {
        Rational inv = 1 / b.leading();
        return {b.monic(), RatPoly{}, RatPoly::constant(inv)};
    }
    // When a | b the gcd is a itself, with the whole weight on a.
    if (divides(a, b)) {
        Rational inv = 1 / a.leading();
        return {a.monic(), RatPoly::constant(inv), RatPoly{}};
    }

    RatPoly r0 = a, r1 = b;
    RatPoly s0 = RatPoly::constant(1), s1;
    RatPoly t0, t1 = RatPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RatPoly s2 = s0 - q * s1;
        RatPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    Rational inv = 1 / r0.leading();
    Bezout out{inv * r0, inv * s0, inv * t0};
    if (out.u * a + out.v * b != out.gcd) throw std::logic_error("xgcd identity violated");
    return out;
}

Rational resultant(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("resultant with the zero polynomial");
    const auto m = static_cast<std::size_t>(a.degree());
    const auto k = static_cast<std::size_t>(b.degree());
    const std::size_t size = m + k;
    if (size == 0) return 1;

    RatMatrix syl(size, size);
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    for (std::size_t row = 0; row < k; ++row)
        for (std::size_t j = 0; j <= m; ++j) syl(row, row + j) = ac[m - j];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t j = 0; j <= k; ++j) syl(k + row, row + j) = bc[k - j];
    return bareiss_det(syl);
}

RatPoly parse_poly(std::string_view text) {
    std::vector<Rational> coeffs;
    std::string_view rest = trim(text);
    if (rest.empty()) throw ParseError("empty polynomial");
    while (true) {
        auto comma = rest.find(',');
        coeffs.push_back(parse_rational(rest.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return RatPoly(std::move(coeffs));
}

std::string format_poly(const RatPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        if (k) out += ',';
        out += format_rational(p.coeffs()[k]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// RatMatrix

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw DomainError("matrix entry count does not match shape");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) throw DomainError("ragged matrix literal");
        for (long v : row) entries_.emplace_back(v);
    }
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Rational> RatMatrix::multiply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector size mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
}

Rational bareiss_det(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    RatMatrix a = m;
    Rational prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    Rational det = a(n - 1, n - 1);
    return negate ? Rational(-det) : det;
}

namespace {

struct Echelon {
    RatMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

Echelon reduced_row_echelon(const RatMatrix& m) {
    RatMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
        Rational inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0) continue;
            Rational f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
    return reduced_row_echelon(m).pivot_cols.size();
}

std::vector<std::vector<Rational>> nullspace(const RatMatrix& m) {
    auto [a, pivots] = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
        for (const auto& x : m.multiply(v))
            if (x != 0) throw std::logic_error("nullspace vector fails M*v = 0");
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace cyclo
