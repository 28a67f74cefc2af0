#include "lnd/kernels.hpp"

#include <cstddef>

namespace lnd::kernels {

namespace {

Polynomial image_of(const Derivation& d, const Monomial& m) {
    return d.ring()->reduce(d.apply_raw(Polynomial(d.ring()->context(), m)));
}

// Powers gens[i]^e for e up to the largest exponent requested for gens[i].
std::vector<std::vector<RingElement>> power_table(std::span<const RingElement> gens,
                                                  std::span<const std::vector<unsigned>> exponents) {
    std::vector<unsigned> top(gens.size(), 0);
    for (const auto& e : exponents) {
        for (std::size_t i = 0; i < gens.size(); ++i) top[i] = std::max(top[i], e.at(i));
    }
    std::vector<std::vector<RingElement>> table;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        std::vector<RingElement> powers{gens[i].ring()->one()};
        for (unsigned k = 1; k <= top[i]; ++k) powers.push_back(powers.back() * gens[i]);
        table.push_back(std::move(powers));
    }
    return table;
}

Polynomial product_of(const Ring& ring, const std::vector<std::vector<RingElement>>& table,
                      const std::vector<unsigned>& e) {
    RingElement acc = ring->one();
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] != 0) acc *= table[i][e[i]];
    }
    return acc.repr();
}

}  // namespace

std::vector<Polynomial> derivation_images_serial(const Derivation& d, std::span<const Monomial> frame) {
    std::vector<Polynomial> out;
    out.reserve(frame.size());
    for (const auto& m : frame) out.push_back(image_of(d, m));
    return out;
}

std::vector<Polynomial> derivation_images_parallel(const Derivation& d, std::span<const Monomial> frame) {
    std::vector<Polynomial> out(frame.size(), Polynomial(d.ring()->context()));
    const auto n = static_cast<std::ptrdiff_t>(frame.size());
#pragma omp parallel for schedule(dynamic, 4) default(none) shared(d, frame, out, n)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = image_of(d, frame[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<Polynomial> derivation_images(const Derivation& d, std::span<const Monomial> frame, Execution exec) {
    return exec == Execution::serial ? derivation_images_serial(d, frame) : derivation_images_parallel(d, frame);
}

std::vector<Polynomial> power_products_serial(std::span<const RingElement> gens,
                                              std::span<const std::vector<unsigned>> exponents) {
    if (gens.empty()) return {};
    const Ring& ring = gens.front().ring();
    const auto table = power_table(gens, exponents);
    std::vector<Polynomial> out;
    out.reserve(exponents.size());
    for (const auto& e : exponents) out.push_back(product_of(ring, table, e));
    return out;
}

std::vector<Polynomial> power_products_parallel(std::span<const RingElement> gens,
                                                std::span<const std::vector<unsigned>> exponents) {
    if (gens.empty()) return {};
    const Ring& ring = gens.front().ring();
    const auto table = power_table(gens, exponents);
    std::vector<Polynomial> out(exponents.size(), Polynomial(ring->context()));
    const auto n = static_cast<std::ptrdiff_t>(exponents.size());
#pragma omp parallel for schedule(dynamic, 4) default(none) shared(ring, table, exponents, out, n)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = product_of(ring, table, exponents[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<Polynomial> power_products(std::span<const RingElement> gens,
                                       std::span<const std::vector<unsigned>> exponents, Execution exec) {
    return exec == Execution::serial ? power_products_serial(gens, exponents)
                                     : power_products_parallel(gens, exponents);
}

}  // namespace lnd::kernels
