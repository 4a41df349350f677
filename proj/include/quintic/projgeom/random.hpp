#pragma once

#include <cstdint>
#include <random>

#include "quintic/exactalg/scalar.hpp"

namespace quintic::projgeom {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
std::uint64_t splitmix64(std::uint64_t x);

/// Seed for sample `index` of configuration type `type_id` in a sweep driven by
/// `seed`: splitmix64(splitmix64(seed + type_id) + index).
std::uint64_t derive_seed(std::uint64_t seed, int type_id, std::uint64_t index);

/// Deterministic source of field elements. The engine is std::mt19937_64,
/// whose output sequence is fixed by the C++ standard. F_p draws are
/// engine() mod p; rational draws are integers engine() mod 101 - 50.
class ScalarRng {
public:
    ScalarRng(exactalg::Field field, std::uint64_t seed) : field_(field), engine_(seed) {}

    const exactalg::Field& field() const { return field_; }
    exactalg::Scalar next();
    exactalg::Scalar next_nonzero();
    std::uint64_t raw() { return engine_(); }

private:
    exactalg::Field field_;
    std::mt19937_64 engine_;
};

}  // namespace quintic::projgeom
