#pragma once

#include <limits>
#include <string>

namespace springer {

/// Natural number extended with a single infinity.
///
/// Infinity absorbs increment and decrement, and compares greater than
/// every finite value. Used for "no right neighbour" markers and for the
/// row indices of the two-column construction algorithm.
class ExtInt {
public:
    constexpr ExtInt() = default;
    constexpr explicit ExtInt(int v) : v_(v) {}

    static constexpr ExtInt infinity() {
        ExtInt e;
        e.v_ = kInf;
        return e;
    }

    [[nodiscard]] constexpr bool is_infinite() const { return v_ == kInf; }

    /// Finite value; meaningless when infinite.
    [[nodiscard]] constexpr int value() const { return v_; }

    [[nodiscard]] constexpr ExtInt succ() const {
        return is_infinite() ? *this : ExtInt(v_ + 1);
    }
    [[nodiscard]] constexpr ExtInt pred() const {
        return is_infinite() ? *this : ExtInt(v_ - 1);
    }

    friend constexpr bool operator==(ExtInt a, ExtInt b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(ExtInt a, ExtInt b) { return a.v_ != b.v_; }
    friend constexpr bool operator<(ExtInt a, ExtInt b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
    friend constexpr bool operator<=(ExtInt a, ExtInt b) { return !(b < a); }
    friend constexpr bool operator>=(ExtInt a, ExtInt b) { return !(a < b); }

    [[nodiscard]] std::string to_string() const {
        return is_infinite() ? std::string("inf") : std::to_string(v_);
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();
    int v_ = 0;
};

} // namespace springer
