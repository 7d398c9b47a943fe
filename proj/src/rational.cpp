#include "rejsched/rational.hpp"

#include <cctype>

namespace rejsched {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.q_ == 0) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    if (s.empty()) throw ParseError("empty rational literal: '" + text + "'");

    Rational out;
    if (auto pos = s.find('/'); pos != std::string::npos) {
        std::string num = s.substr(0, pos), den = s.substr(pos + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("bad rational literal: '" + text + "'");
        mpz_class d(den);
        if (d == 0) throw ParseError("zero denominator: '" + text + "'");
        out = Rational(mpz_class(num), d);
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty()) ip = "0";
        if (fp.empty()) fp = "0";
        if (!all_digits(ip) || !all_digits(fp))
            throw ParseError("bad decimal literal: '" + text + "'");
        mpz_class den = 1;
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        out = Rational(mpz_class(ip) * den + mpz_class(fp), den);
    } else {
        if (!all_digits(s)) throw ParseError("bad integer literal: '" + text + "'");
        out = Rational(mpz_class(s), mpz_class(1));
    }
    return neg ? -out : out;
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return r;
}

mpz_class Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::decimal(int digits) const {
    mpz_class scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    mpq_class scaled = q_ * mpq_class(scale);
    mpz_class t;
    mpz_tdiv_q(t.get_mpz_t(), scaled.get_num().get_mpz_t(), scaled.get_den().get_mpz_t());
    bool neg = t < 0;
    mpz_class a = abs(t);
    std::string ds = a.get_str();
    if (static_cast<int>(ds.size()) <= digits)
        ds = std::string(digits + 1 - ds.size(), '0') + ds;
    std::string out = ds.substr(0, ds.size() - digits) + "." + ds.substr(ds.size() - digits);
    return neg ? "-" + out : out;
}

}  // namespace rejsched
