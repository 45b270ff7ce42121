#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "paravi/types.hpp"

namespace paravi {

/// A finite sequence z(0), ..., z(N-1) of points.
using Sequence = std::vector<Point>;

/// z(n+1) - z(n); needs 0 <= n < N-1.
Point forward_difference(const Sequence& z, std::size_t n);
/// z(n) - z(n-1); needs 1 <= n < N.
Point backward_difference(const Sequence& z, std::size_t n);
/// z(n+1) - 2 z(n) + z(n-1).
Point second_difference(const Sequence& z, std::size_t n);

/// <h(n+1), g(n+1)> - <h(n), g(n)>.
double inner_forward_difference(const Sequence& h, const Sequence& g, std::size_t n);
/// <h(n), g(n)> - <h(n-1), g(n-1)>.
double inner_backward_difference(const Sequence& h, const Sequence& g, std::size_t n);

/// Expands <h,g>^Delta(n) = <h^Delta, g> + <h, g^Delta> + <h^Delta, g^Delta>.
double forward_product_rule(const Sequence& h, const Sequence& g, std::size_t n);
/// Expands <h,g>^Nabla(n) = <h^Nabla, g> + <h, g^Nabla> - <h^Nabla, g^Nabla>.
double backward_product_rule(const Sequence& h, const Sequence& g, std::size_t n);

/// Checks both product rules and z^{Delta Nabla} = z^{Nabla Delta} =
/// z(n+1) - 2z(n) + z(n-1) = z^Delta - z^Nabla on `trials` random sequences,
/// with relative tolerance 1e-12.
bool difference_identities_check(std::uint64_t seed, std::size_t trials);

}  // namespace paravi
