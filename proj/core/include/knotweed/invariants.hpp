#pragma once

#include "knotweed/diagram.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace knotweed {

using BigInt = boost::multiprecision::cpp_int;

// Integer Laurent polynomial kept in normal form: lowest exponent 0 and a
// positive leading coefficient, so units +-t^k are quotiented out.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coefficients);

    static IntPoly one() { return IntPoly({BigInt(1)}); }

    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    BigInt evaluate(const BigInt& t) const;
    std::string to_string() const;

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    std::vector<BigInt> coeffs_; // coeffs_[i] multiplies t^i
};

int writhe(const Diagram& d);

// |Alexander(-1)| from the Goeritz matrix of a checkerboard colouring.
BigInt determinant(const Diagram& d);

// Alexander polynomial from a minor of the Wirtinger crossing matrix.
IntPoly alexander(const Diagram& d);

} // namespace knotweed
