#pragma once

#include <string>

#include "ivp/rat.hpp"

namespace ivp {

/**
 * A value of a rank-one valuation: an exact rational or infinity, normalized
 * so v(p) = 1. Totally ordered with infinity above every rational.
 */
class Val {
public:
    Val() : inf_(false), v_(0) {}
    Val(const Rat& v) : inf_(false), v_(v) {}  // NOLINT: implicit by design
    Val(long v) : inf_(false), v_(v) {}        // NOLINT

    static Val infinity() {
        Val v;
        v.inf_ = true;
        return v;
    }

    bool is_infinity() const { return inf_; }
    const Rat& value() const {
        if (inf_) throw std::domain_error("Val: infinity has no rational value");
        return v_;
    }

    bool operator==(const Val& o) const {
        return inf_ == o.inf_ && (inf_ || v_ == o.v_);
    }
    bool operator!=(const Val& o) const { return !(*this == o); }
    bool operator<(const Val& o) const {
        if (inf_) return false;
        if (o.inf_) return true;
        return v_ < o.v_;
    }
    bool operator>(const Val& o) const { return o < *this; }
    bool operator<=(const Val& o) const { return !(o < *this); }
    bool operator>=(const Val& o) const { return !(*this < o); }

    std::string str() const { return inf_ ? "inf" : v_.get_str(); }

    /// Parses "inf" (or "oo") or a rational "a/b".
    static Val parse(const std::string& s) {
        if (s == "inf" || s == "oo" || s == "infinity") return infinity();
        return Val(parse_rat(s));
    }

private:
    bool inf_;
    Rat v_;
};

inline Val min(const Val& a, const Val& b) { return a < b ? a : b; }

}  // namespace ivp
