#include "dgcalc/scalar.hpp"

namespace dgc {

bool is_prime(std::uint32_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::int64_t Scalar::inv_mod(std::int64_t a, std::uint32_t p)
{
    // extended Euclid
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1)
        throw Error("not invertible mod p (p must be prime)");
    return t < 0 ? t + p : t;
}

Field parse_field(const std::string& spec)
{
    if (spec == "q" || spec == "Q")
        return Field{0};
    if (spec.rfind("fp:", 0) == 0) {
        long p = std::stol(spec.substr(3));
        if (p < 2 || !is_prime((std::uint32_t)p))
            throw Error("field modulus must be prime: " + spec);
        return Field{(std::uint32_t)p};
    }
    throw Error("bad field spec (want q or fp:<p>): " + spec);
}

}  // namespace dgc
