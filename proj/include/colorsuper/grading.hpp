#pragma once

#include <compare>
#include <string>

namespace colorsuper {

/// Element of Z2 x Z2. Addition is componentwise mod 2; the dot product
/// a1*b1 + a2*b2 mod 2 drives every bracket and reordering sign.
struct Grading {
    int a1{0};
    int a2{0};

    friend Grading operator+(Grading a, Grading b) {
        return {(a.a1 + b.a1) % 2, (a.a2 + b.a2) % 2};
    }
    friend bool operator==(Grading, Grading) = default;
    friend auto operator<=>(Grading, Grading) = default;

    std::string str() const {
        return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
    }
};

inline int dot(Grading a, Grading b) { return (a.a1 * b.a1 + a.a2 * b.a2) % 2; }

/// (-1)^(a.b) as an int factor.
inline int bracket_sign(Grading a, Grading b) { return dot(a, b) ? -1 : 1; }

}  // namespace colorsuper
