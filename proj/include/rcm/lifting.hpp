#pragma once
// Deterministic lifting of regular circulants along the reduction
// Z/p^{t+1}Z -> Z/p^tZ. The kernel of the corresponding reduction of
// matrix groups contains exactly p^n circulant elements, which is what
// makes the prime-power order formula a telescoping product; see
// kernel_circulant_count in zmod.hpp.

#include "rcm/circulant.hpp"
#include "rcm/zmod.hpp"

namespace rcm {

// Lift a regular circulant over Z/p^tZ to the regular circulant over
// Z/p^{t+1}Z whose entries are the same least non-negative representatives.
// `lifted` must be lifted_modulus_ring(c.ring()); passing the target ring
// explicitly keeps ring lifetimes in the caller's hands. Rejects singular
// input; the result reduces back to the input entrywise.
Circulant<ZmodRing> lift_circulant(const Circulant<ZmodRing>& c, const ZmodRing& lifted);

}  // namespace rcm
