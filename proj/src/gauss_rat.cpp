#include "cr/gauss_rat.hpp"

#include <ostream>
#include <stdexcept>

namespace cr {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool slash = false;
    if (start == s.size()) throw std::invalid_argument("bad rational: " + s);
    for (std::size_t k = start; k < s.size(); ++k) {
        char c = s[k];
        if (c == '/') {
            if (slash || k == start || k + 1 == s.size()) throw std::invalid_argument("bad rational: " + s);
            slash = true;
        } else if (c < '0' || c > '9') {
            throw std::invalid_argument("bad rational: " + s);
        }
    }
    Rat r;
    std::string body = s[0] == '+' ? s.substr(1) : s;
    if (r.set_str(body, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& r) { return r.get_str(10); }

GaussRat::GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussRat GaussRat::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rat n = norm();
    return GaussRat(re_ / n, -im_ / n);
}

GaussRat& GaussRat::operator+=(const GaussRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
    if (sgn(o.im_) == 0) {
        re_ *= o.re_;
        im_ *= o.re_;
        return *this;
    }
    Rat r = re_ * o.re_ - im_ * o.im_;
    Rat i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= o.inverse(); }

std::string GaussRat::str() const { return "(" + rat_str(re_) + "," + rat_str(im_) + ")"; }

GaussRat GaussRat::parse(const std::string& re, const std::string& im) {
    return GaussRat(parse_rat(re), parse_rat(im));
}

std::ostream& operator<<(std::ostream& os, const GaussRat& g) { return os << g.str(); }

}  // namespace cr
