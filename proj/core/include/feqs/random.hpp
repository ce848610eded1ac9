#pragma once

#include <cstdint>
#include <string_view>

#include "feqs/cfunction.hpp"

namespace feqs {

/// Deterministic splitmix64 stream, identical on every platform. The
/// stream position depends only on the base seed and the context label, so
/// randomized checks are reproducible from the seed echoed in reports.
class SeededRng {
public:
    SeededRng(std::uint64_t seed, std::string_view label);

    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double next_unit();
    /// Re and Im uniform in [-1, 1).
    Complex next_complex();
    CFunction next_cfunction(int n);

private:
    std::uint64_t state_;
};

}  // namespace feqs
