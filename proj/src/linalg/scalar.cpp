#include "glkm/linalg/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace glkm {

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
    if (text.empty()) throw std::invalid_argument("empty rational in scalar '" + std::string(whole) + "'");
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw std::invalid_argument("bad scalar '" + std::string(whole) + "'");
    }
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad scalar '" + std::string(whole) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    q.canonicalize();
    return q;
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw std::domain_error("Scalar::rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

Scalar Scalar::parse(std::string_view text) {
    std::string_view t = text;
    while (!t.empty() && t.front() == ' ') t.remove_prefix(1);
    while (!t.empty() && t.back() == ' ') t.remove_suffix(1);
    if (t.empty()) throw std::invalid_argument("empty scalar");
    if (t.back() != 'i') return Scalar(parse_rational(t, text));

    std::string_view body = t.substr(0, t.size() - 1);
    // split at the last sign that is not in leading position
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    std::string_view re_part = split == std::string_view::npos ? std::string_view{} : body.substr(0, split);
    std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
    mpq_class im;
    if (im_part.empty() || im_part == "+")
        im = 1;
    else if (im_part == "-")
        im = -1;
    else
        im = parse_rational(im_part, text);
    mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part, text);
    return Scalar(re, im);
}

Scalar Scalar::canonical() const { return Scalar(re_, im_); }

bool Scalar::is_canonical() const {
    mpq_class r = re_, i = im_;
    r.canonicalize();
    i.canonicalize();
    return r.get_num() == re_.get_num() && r.get_den() == re_.get_den() && i.get_num() == im_.get_num() &&
           i.get_den() == im_.get_den();
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
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

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw std::domain_error("Scalar division by zero");
    if (o.is_real()) {
        re_ /= o.re_;
        if (sgn(im_) != 0) im_ /= o.re_;
        return *this;
    }
    mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
    mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
    mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string Scalar::str() const {
    if (is_real()) return re_.get_str();
    std::string im_text;
    if (im_ == 1)
        im_text = "i";
    else if (im_ == -1)
        im_text = "-i";
    else
        im_text = im_.get_str() + "i";
    if (sgn(re_) == 0) return im_text;
    if (im_text.front() != '-') im_text.insert(0, "+");
    return re_.get_str() + im_text;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

mpz_class common_denominator(const Scalar& s) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), s.re().get_den_mpz_t(), s.im().get_den_mpz_t());
    return l;
}

}  // namespace glkm
