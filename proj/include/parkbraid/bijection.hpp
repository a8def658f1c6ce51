#pragma once

// The initial-vector map In: bases -> parking functions and its inverses.

#include <span>

#include "parkbraid/dbasis.hpp"
#include "parkbraid/parking.hpp"

namespace parkbraid {

/// (a_1.lo, ..., a_n.lo).
ParkingFunction in_vector(const DistinguishedBasis& a);

/// Covering construction: roots are built in order of decreasing f (ties by
/// decreasing index); a_k runs from f(k) through the block of later-index
/// supports starting at f(k), skips one point, then through the block of
/// earlier-index supports.
DistinguishedBasis reconstruct(const ParkingFunction& f);

/// Ray construction on the diagram: Ter(k) is the x-coordinate where the
/// north-east ray from P_k first meets P_l with l > k, the Dyck path, or the
/// x-axis.
DistinguishedBasis reconstruct_geometric(const ParkingFunction& f);

/// For a permutation: Ter(k) is the largest t with [sigma(k), t] inside
/// sigma({1..k}). Throws Error("not_permutation").
DistinguishedBasis reconstruct_permutation(std::span<const int> sigma);

}  // namespace parkbraid
