#include "nmres/gauss_rat.hpp"

namespace nmres {

namespace {

std::string q_str(const mpq_class& q) { return q.get_str(); }

// imaginary part rendered as "i", "-i", "k*i"
std::string im_str(const mpq_class& q) {
    if (q == 1) return "i";
    if (q == -1) return "-i";
    return q_str(q) + "*i";
}

}  // namespace

std::string GaussRat::to_string() const {
    if (is_zero()) return "0";
    if (im_ == 0) return q_str(re_);
    if (re_ == 0) return im_str(im_);
    std::string s = q_str(re_);
    if (im_ > 0) s += "+";
    s += im_str(im_);
    return s;
}

}  // namespace nmres
