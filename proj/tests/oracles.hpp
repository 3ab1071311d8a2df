#pragma once

// Test-only reference implementations, deliberately independent of the
// tanh-sinh engine: a composite Simpson rule for integral adjudication and
// direct classical series for the sigma = 0 hypergeometric reductions.

#include <functional>

namespace oracles {

inline constexpr double kEulerGamma = 0.5772156649015328606;

// Composite Simpson on [a,b] with `panels` panels (must be even), summed with
// compensation so the oracle itself is good to ~1e-15 relative.
double composite_simpson(const std::function<double(double)>& f, double a, double b,
                         long panels);

// Simpson oracle for integrals over (0,1) whose integrand vanishes at the
// endpoints faster than any polynomial: [1e-6, 1-1e-6] with 1e6 panels.
double simpson_unit(const std::function<double(double)>& f);

// Classical Kummer 1F1(b;c;x) by direct series.
double classical_1f1(double b, double c, double x);

// Classical Gauss 2F1(a,b;c;x) by direct series, |x| < 1.
double classical_2f1(double a, double b, double c, double x);

// Digamma by the defining series -gamma + sum_{k>=0} (1/(k+1) - 1/(y+k)),
// summed to `terms` terms with a logarithmic tail correction.
double digamma_series(double y, long terms = 1'000'000);

// Deterministic splitmix64-based sampler for randomized tests; independent of
// the library's sweep RNG.
class TestRng {
public:
    explicit TestRng(unsigned long long seed) : state_(seed) {}
    double uniform01() {
        unsigned long long z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        return static_cast<double>(z >> 11) * 0x1.0p-53;
    }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    double log_uniform(double lo, double hi);

private:
    unsigned long long state_;
};

}  // namespace oracles
