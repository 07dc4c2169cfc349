#include "discrim/exactfield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace discrim {

namespace {

bool square_free(long d) {
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

}  // namespace

Scalar::Scalar(const mpq_class& a, const mpq_class& b, long d) : a_(a), b_(b), d_(d) {
    if (sgn(b_) != 0 && (d_ < 2 || !square_free(d_)))
        throw std::invalid_argument("radicand must be a square-free integer > 1");
    normalize();
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    return Scalar(mpq_class(num, den));
}

void Scalar::normalize() {
    a_.canonicalize();
    b_.canonicalize();
    if (sgn(b_) == 0) d_ = 0;
}

long Scalar::merge_radicand(long d1, long d2) {
    if (d1 == 0) return d2;
    if (d2 == 0 || d1 == d2) return d1;
    throw FieldMismatch("scalars from Q(sqrt(" + std::to_string(d1) + ")) and Q(sqrt(" +
                        std::to_string(d2) + ")) cannot be combined");
}

int Scalar::sign() const {
    const int sa = sgn(a_);
    const int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const mpq_class n = a_ * a_ - mpq_class(d_) * b_ * b_;
    return sa * sgn(n);
}

Scalar Scalar::conjugate() const {
    Scalar r = *this;
    r.b_ = -r.b_;
    return r;
}

mpq_class Scalar::norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    d_ = merge_radicand(d_, o.d_);
    a_ += o.a_;
    b_ += o.b_;
    if (sgn(b_) == 0) d_ = 0;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    d_ = merge_radicand(d_, o.d_);
    a_ -= o.a_;
    b_ -= o.b_;
    if (sgn(b_) == 0) d_ = 0;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
        return *this;
    }
    const long d = merge_radicand(d_, o.d_);
    mpq_class a = a_ * o.a_ + b_ * o.b_ * d;
    mpq_class b = a_ * o.b_ + o.a_ * b_;
    a_ = std::move(a);
    b_ = std::move(b);
    d_ = d;
    if (sgn(b_) == 0) d_ = 0;
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (sgn(o.b_) == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        return *this;
    }
    const mpq_class n = o.norm();
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    if (sgn(b_) == 0) d_ = 0;
    return *this;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    const int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Scalar::to_string() const {
    if (sgn(b_) == 0) return a_.get_str();
    std::string irr;
    const mpq_class mag = ::abs(b_);
    if (mag == 1)
        irr = "sqrt(" + std::to_string(d_) + ")";
    else
        irr = mag.get_str() + "*sqrt(" + std::to_string(d_) + ")";
    if (sgn(a_) == 0) return sgn(b_) < 0 ? "-" + irr : irr;
    return a_.get_str() + (sgn(b_) < 0 ? " - " : " + ") + irr;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

namespace {

// Recursive-descent reader over the literal with whitespace skipped.
class ScalarReader {
public:
    explicit ScalarReader(std::string_view s) : s_(s) {}

    Scalar read() {
        mpq_class a = 0, b = 0;
        long d = 0;
        skip();
        if (pos_ == s_.size()) fail("empty scalar");
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coef, radicand] = term();
            coef *= sign;
            if (radicand == 0) {
                a += coef;
            } else {
                if (d != 0 && d != radicand) fail("a scalar may use only one radicand");
                d = radicand;
                b += coef;
            }
            skip();
            if (pos_ == s_.size()) break;
        }
        if (sgn(b) == 0) return Scalar(a);
        return Scalar(a, b, d);
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ScalarParseError("malformed scalar \"" + std::string(s_) + "\": " + msg + " at column " +
                                   std::to_string(pos_ + 1),
                               pos_ + 1);
    }
    bool accept(std::string_view word) {
        skip();
        if (s_.substr(pos_, word.size()) == word) {
            pos_ += word.size();
            return true;
        }
        return false;
    }
    void expect(std::string_view word) {
        if (!accept(word)) fail("expected '" + std::string(word) + "'");
    }

    std::string digits() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    mpq_class number() {
        std::string whole = digits();
        if (peek() == '.') {
            ++pos_;
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected digits after '.'");
            const std::string frac(s_.substr(start, pos_ - start));
            mpz_class den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
            mpq_class q(mpz_class(whole + frac), den);
            q.canonicalize();
            return q;
        }
        skip();
        if (peek() == '/') {
            ++pos_;
            mpz_class den(digits());
            if (den == 0) fail("zero denominator");
            mpq_class q(mpz_class(whole), den);
            q.canonicalize();
            return q;
        }
        return mpq_class(mpz_class(whole));
    }

    long radical() {
        expect("sqrt");
        expect("(");
        const std::string ds = digits();
        if (ds.size() > 12) fail("radicand too large");
        const long d = std::stol(ds);
        if (d < 2 || !square_free(d)) fail("radicand must be a square-free integer > 1");
        expect(")");
        return d;
    }

    std::pair<mpq_class, long> term() {
        skip();
        if (s_.substr(pos_, 4) == "sqrt") {
            const long d = radical();
            mpq_class c = 1;
            if (accept("*")) c = number();
            return {c, d};
        }
        mpq_class c = number();
        if (accept("*")) return {c, radical()};
        return {c, 0};
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarReader(text).read(); }

bool ScalarKeyLess::operator()(const Scalar& x, const Scalar& y) const {
    if (int c = cmp(x.rational_part(), y.rational_part()); c != 0) return c < 0;
    if (int c = cmp(x.irrational_part(), y.irrational_part()); c != 0) return c < 0;
    return x.radicand() < y.radicand();
}

bool VectorKeyLess::operator()(const Vector& x, const Vector& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), ScalarKeyLess{});
}

Scalar dot(std::span<const Scalar> x, std::span<const Scalar> y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
    Scalar s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
    }
    return s;
}

bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector canonical_projective(std::span<const Scalar> v) {
    auto lead = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (lead == v.end()) throw std::invalid_argument("zero vector has no projective class");
    const Scalar pivot = *lead;
    Vector out;
    out.reserve(v.size());
    for (const Scalar& s : v) out.push_back(s / pivot);
    if (!std::all_of(out.begin(), out.end(), [](const Scalar& s) { return s.is_rational(); })) return out;

    mpz_class den = 1, num = 0;
    for (const Scalar& s : out) {
        const mpq_class& q = s.rational_part();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    for (const Scalar& s : out) {
        const mpq_class& q = s.rational_part();
        mpz_class n = q.get_num() * (den / q.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    }
    for (Scalar& s : out) {
        mpq_class q = s.rational_part() * mpq_class(den) / mpq_class(num);
        s = Scalar(q);
    }
    return out;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

std::size_t rank(const Matrix& input) {
    Matrix m = input;
    const std::size_t rows = m.rows(), cols = m.cols();
    Scalar prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        }
        const Scalar pivot = m(r, c);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const Scalar f = m(i, c);
            for (std::size_t j = c + 1; j < cols; ++j) {
                m(i, j) = (pivot * m(i, j) - f * m(r, j)) / prev;
            }
            m(i, c) = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

Scalar det(const Matrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("det: matrix is not square");
    Matrix m = input;
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Scalar prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
            }
        }
        prev = m(k, k);
    }
    return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

std::optional<AffineSubspace> solution_space(const Matrix& m, std::span<const Scalar> rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solution_space: rhs length mismatch");
    const std::size_t rows = m.rows(), cols = m.cols();
    Matrix a(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) a(i, j) = m(i, j);
        a(i, cols) = rhs[i];
    }
    // Gauss-Jordan to reduced row echelon form.
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c <= cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (c == cols) return std::nullopt;
        if (p != r) {
            for (std::size_t j = 0; j <= cols; ++j) std::swap(a(p, j), a(r, j));
        }
        const Scalar inv = Scalar(1) / a(r, c);
        for (std::size_t j = c; j <= cols; ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Scalar f = a(i, c);
            for (std::size_t j = c; j <= cols; ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    AffineSubspace out;
    out.basepoint.assign(cols, Scalar{});
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        out.basepoint[pivots[i]] = a(i, cols);
        is_pivot[pivots[i]] = true;
    }
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, f);
        out.basis.push_back(std::move(v));
    }
    return out;
}

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient) {
    Subspace s(ambient);
    for (const Vector& v : vectors) s.insert(v);
    return s;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: dimension mismatch");
    Vector w(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Scalar f = w[pivots_[i]];
        if (f.is_zero()) continue;
        const Vector& row = rows_[i];
        for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
            if (!row[j].is_zero()) w[j] -= f * row[j];
        }
    }
    return w;
}

bool Subspace::contains(std::span<const Scalar> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [this](const Vector& v) { return contains(v); });
}

bool Subspace::insert(std::span<const Scalar> v) {
    Vector w = reduce(v);
    auto lead = std::find_if(w.begin(), w.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (lead == w.end()) return false;
    const std::size_t q = static_cast<std::size_t>(lead - w.begin());
    const Scalar inv = Scalar(1) / w[q];
    for (std::size_t j = q; j < ambient_; ++j) w[j] *= inv;
    for (Vector& row : rows_) {
        const Scalar f = row[q];
        if (f.is_zero()) continue;
        for (std::size_t j = q; j < ambient_; ++j) {
            if (!w[j].is_zero()) row[j] -= f * w[j];
        }
    }
    auto at = std::lower_bound(pivots_.begin(), pivots_.end(), q);
    const auto offset = at - pivots_.begin();
    pivots_.insert(at, q);
    rows_.insert(rows_.begin() + offset, std::move(w));
    return true;
}

bool SubspaceKeyLess::operator()(const Subspace& x, const Subspace& y) const {
    if (x.ambient() != y.ambient()) return x.ambient() < y.ambient();
    if (x.dimension() != y.dimension()) return x.dimension() < y.dimension();
    return std::lexicographical_compare(x.basis().begin(), x.basis().end(), y.basis().begin(), y.basis().end(),
                                        VectorKeyLess{});
}

}  // namespace discrim
