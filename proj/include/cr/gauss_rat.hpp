#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace cr {

using Rat = mpq_class;

// Parses "p", "-p" or "p/q"; the result is canonical. Throws std::invalid_argument.
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);

// Exact complex number re + i*im with rational parts.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long re) : re_(re) {}
    GaussRat(Rat re, Rat im = 0);

    static GaussRat i() { return GaussRat(0, 1); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    Rat norm() const { return re_ * re_ + im_ * im_; }
    GaussRat inverse() const;

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat& operator+=(const GaussRat& o);
    GaussRat& operator-=(const GaussRat& o);
    GaussRat& operator*=(const GaussRat& o);
    GaussRat& operator/=(const GaussRat& o);

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    // "(re,im)" with rationals written as p or p/q.
    std::string str() const;
    static GaussRat parse(const std::string& re, const std::string& im);

private:
    Rat re_ = 0;
    Rat im_ = 0;
};

std::ostream& operator<<(std::ostream& os, const GaussRat& g);

}  // namespace cr
