#include "arctan_cert/scalar.hpp"

namespace arctan_cert {

PrecisionScope::PrecisionScope(unsigned digits10)
    : saved_(BigScalar::default_precision())
{
    BigScalar::default_precision(digits10);
}

PrecisionScope::~PrecisionScope()
{
    BigScalar::default_precision(saved_);
}

unsigned default_digits()
{
    return BigScalar::default_precision();
}

BigScalar to_big(const BigInt& value, unsigned digits10)
{
    BigScalar out;
    out.precision(digits10);
    out = value;
    return out;
}

BigScalar to_big(const Rational& value, unsigned digits10)
{
    BigScalar num = to_big(BigInt(boost::multiprecision::numerator(value)), digits10);
    const BigScalar den = to_big(BigInt(boost::multiprecision::denominator(value)), digits10);
    num /= den;
    return num;
}

} // namespace arctan_cert
