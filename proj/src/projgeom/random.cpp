#include "quintic/projgeom/random.hpp"

namespace quintic::projgeom {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, int type_id, std::uint64_t index)
{
    return splitmix64(splitmix64(seed + static_cast<std::uint64_t>(type_id)) + index);
}

exactalg::Scalar ScalarRng::next()
{
    if (field_.is_prime())
        return exactalg::Scalar::residue(engine_() % field_.modulus(), field_.modulus());
    return exactalg::Scalar(field_, static_cast<long>(engine_() % 101) - 50);
}

exactalg::Scalar ScalarRng::next_nonzero()
{
    for (;;) {
        auto s = next();
        if (!s.is_zero())
            return s;
    }
}

}  // namespace quintic::projgeom
