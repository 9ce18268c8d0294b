#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "qmpl/errors.hpp"

namespace qmpl {

/// An indeterminate: q, t_i (i >= 1), x, y, or the constant symbol a.
/// Total order is fixed as q < t1 < t2 < ... < x < y < a.
class Symbol {
  public:
    enum class Kind : std::uint8_t { q = 0, t = 1, x = 2, y = 3, a = 4 };

    static Symbol Q() { return Symbol(make(Kind::q, 0)); }
    static Symbol T(int i) {
        if (i < 1) throw Error("t subscript must be >= 1");
        return Symbol(make(Kind::t, static_cast<std::uint32_t>(i)));
    }
    static Symbol X() { return Symbol(make(Kind::x, 0)); }
    static Symbol Y() { return Symbol(make(Kind::y, 0)); }
    static Symbol A() { return Symbol(make(Kind::a, 0)); }

    Kind kind() const { return static_cast<Kind>(code_ >> 24); }
    int subscript() const { return static_cast<int>(code_ & 0xffffff); }
    std::uint32_t code() const { return code_; }

    std::string name() const {
        switch (kind()) {
            case Kind::q: return "q";
            case Kind::t: return "t" + std::to_string(subscript());
            case Kind::x: return "x";
            case Kind::y: return "y";
            case Kind::a: return "a";
        }
        return "?";
    }

    friend auto operator<=>(const Symbol&, const Symbol&) = default;

  private:
    explicit Symbol(std::uint32_t code) : code_(code) {}
    static std::uint32_t make(Kind k, std::uint32_t sub) {
        return (static_cast<std::uint32_t>(k) << 24) | (sub & 0xffffff);
    }
    std::uint32_t code_;
};

}  // namespace qmpl
