#include "gcoalg/field.hpp"

#include <charconv>

namespace gcoalg {

namespace {

bool is_prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) acc = acc * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return acc;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw NotPrime("not a prime modulus: " + std::to_string(p));
    if (p >= (std::uint64_t{1} << 32)) throw NotPrime("modulus too large: " + std::to_string(p));
    Field f;
    f.kind_ = Kind::prime;
    f.p_ = p;
    return f;
}

std::string Field::name() const {
    return kind_ == Kind::rationals ? "Q" : "F" + std::to_string(p_);
}

Field Field::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.size() >= 2 && text[0] == 'F') {
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), p);
        if (ec == std::errc{} && ptr == text.data() + text.size()) return prime(p);
    }
    throw ParseError("bad field spec: \"" + text + "\" (expected \"Q\" or \"F<p>\")");
}

Scalar Scalar::zero(const Field& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long value) {
    Scalar s;
    s.field_ = f;
    if (f.is_prime_field()) {
        long r = value % static_cast<long>(f.modulus());
        if (r < 0) r += static_cast<long>(f.modulus());
        s.res_ = static_cast<std::uint64_t>(r);
    } else {
        s.rat_ = value;
    }
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    Scalar s;
    s.field_ = f;
    try {
        if (f.is_prime_field()) {
            std::string body = text;
            auto pos = text.find(" mod ");
            if (pos != std::string::npos) {
                std::uint64_t p = std::stoull(text.substr(pos + 5));
                if (p != f.modulus())
                    throw ParseError("scalar \"" + text + "\" has modulus " + std::to_string(p) +
                                     " but the ambient field is " + f.name());
                body = text.substr(0, pos);
            }
            mpz_class z(body, 10);
            mpz_class m(static_cast<unsigned long>(f.modulus()));
            mpz_class r = z % m;
            if (r < 0) r += m;
            s.res_ = r.get_ui();
        } else {
            mpq_class q(text, 10);
            q.canonicalize();
            s.rat_ = q;
        }
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad scalar \"" + text + "\" over " + f.name());
    }
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_prime_field() ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_prime_field() ? res_ == 1 % field_.modulus() : rat_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatch("cannot combine scalars over " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar r = *this;
    if (field_.is_prime_field())
        r.res_ = (res_ + o.res_) % field_.modulus();
    else
        r.rat_ = rat_ + o.rat_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar r = *this;
    if (field_.is_prime_field())
        r.res_ = (res_ + field_.modulus() - o.res_) % field_.modulus();
    else
        r.rat_ = rat_ - o.rat_;
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar r = *this;
    if (field_.is_prime_field())
        r.res_ = res_ * o.res_ % field_.modulus();
    else
        r.rat_ = rat_ * o.rat_;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_.is_prime_field())
        r.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
    else
        r.rat_ = -rat_;
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero over " + field_.name());
    Scalar r = *this;
    if (field_.is_prime_field())
        r.res_ = mod_pow(res_, field_.modulus() - 2, field_.modulus());
    else
        r.rat_ = 1 / rat_;
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return field_.is_prime_field() ? res_ == o.res_ : rat_ == o.rat_;
}

std::string Scalar::str() const {
    if (field_.is_prime_field())
        return std::to_string(res_) + " mod " + std::to_string(field_.modulus());
    return rat_.get_str();
}

std::uint64_t Scalar::residue() const {
    if (!field_.is_prime_field()) throw FieldMismatch("residue() called on a rational scalar");
    return res_;
}

const mpq_class& Scalar::rational() const {
    if (field_.is_prime_field()) throw FieldMismatch("rational() called on a prime-field scalar");
    return rat_;
}

}  // namespace gcoalg
