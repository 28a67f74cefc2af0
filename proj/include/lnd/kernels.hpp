#pragma once

// Data-parallel frame kernels. Each has a serial reference kept for tests and
// benchmarks, and an OpenMP version used by default. Outputs are identical.

#include "lnd/derivation.hpp"
#include "lnd/monomial.hpp"
#include "lnd/polynomial.hpp"
#include "lnd/ring.hpp"

#include <span>
#include <vector>

namespace lnd::kernels {

enum class Execution { serial, parallel };

/// nf(D(m)) for every frame monomial m.
std::vector<Polynomial> derivation_images_serial(const Derivation& d, std::span<const Monomial> frame);
std::vector<Polynomial> derivation_images_parallel(const Derivation& d, std::span<const Monomial> frame);
std::vector<Polynomial> derivation_images(const Derivation& d, std::span<const Monomial> frame, Execution exec);

/// nf(prod_i gens[i]^e[i]) for every exponent tuple e.
std::vector<Polynomial> power_products_serial(std::span<const RingElement> gens,
                                              std::span<const std::vector<unsigned>> exponents);
std::vector<Polynomial> power_products_parallel(std::span<const RingElement> gens,
                                                std::span<const std::vector<unsigned>> exponents);
std::vector<Polynomial> power_products(std::span<const RingElement> gens,
                                       std::span<const std::vector<unsigned>> exponents, Execution exec);

}  // namespace lnd::kernels
