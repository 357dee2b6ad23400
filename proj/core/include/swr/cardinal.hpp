#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace swr {

// A count that is either a finite natural number or omega (countably
// infinite). Omega absorbs addition; there is no subtraction.
class Cardinal {
  public:
    constexpr Cardinal() : finite_(true), n_(0) {}

    static constexpr Cardinal finite(std::uint64_t n) { return Cardinal(true, n); }
    static constexpr Cardinal omega() { return Cardinal(false, 0); }

    constexpr bool is_finite() const { return finite_; }
    constexpr bool is_omega() const { return !finite_; }
    constexpr bool is_zero() const { return finite_ && n_ == 0; }

    // Valid only when finite.
    constexpr std::uint64_t value() const { return n_; }

    friend constexpr bool operator==(Cardinal a, Cardinal b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.n_ == b.n_);
    }

    // Total order with Finite(n) < Omega.
    friend constexpr std::strong_ordering operator<=>(Cardinal a, Cardinal b) {
        if (a.finite_ != b.finite_)
            return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
        if (!a.finite_)
            return std::strong_ordering::equal;
        return a.n_ <=> b.n_;
    }

    std::string to_string() const;

  private:
    constexpr Cardinal(bool finite, std::uint64_t n) : finite_(finite), n_(n) {}

    bool finite_;
    std::uint64_t n_;
};

Cardinal cardinal_add(Cardinal a, Cardinal b);

// Parses a non-negative integer or the string "omega".
Cardinal parse_cardinal(std::string_view s);

} // namespace swr
