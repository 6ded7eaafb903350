#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace fr {

// Either a finite nonnegative real or an explicit infinity marker.
// Infinite values never flow through arithmetic as numbers; callers must
// branch on is_finite() first.
class HausdorffValue {
public:
    static HausdorffValue finite(double v) {
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("finite Hausdorff value must be a nonnegative real");
        HausdorffValue h;
        h.finite_ = true;
        h.value_ = v;
        return h;
    }

    static HausdorffValue infinite() { return HausdorffValue{}; }

    bool is_finite() const { return finite_; }
    bool is_infinite() const { return !finite_; }

    double value() const {
        if (!finite_) throw std::logic_error("value() on infinite Hausdorff distance");
        return value_;
    }

    std::string str() const { return finite_ ? std::to_string(value_) : "inf"; }

    friend bool operator==(const HausdorffValue& a, const HausdorffValue& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }

private:
    bool finite_ = false;
    double value_ = 0.0;
};

}  // namespace fr
