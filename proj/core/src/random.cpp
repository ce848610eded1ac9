#include "feqs/random.hpp"

namespace feqs {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::string_view label)
    : state_(seed ^ fnv1a(label)) {}

std::uint64_t SeededRng::next_u64() { return splitmix64(state_); }

double SeededRng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Complex SeededRng::next_complex() {
    const double re = 2.0 * next_unit() - 1.0;
    const double im = 2.0 * next_unit() - 1.0;
    return {re, im};
}

CFunction SeededRng::next_cfunction(int n) {
    std::vector<Complex> vals(n);
    for (auto& v : vals) v = next_complex();
    return CFunction(std::move(vals));
}

}  // namespace feqs
