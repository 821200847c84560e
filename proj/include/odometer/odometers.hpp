#pragma once

#include <cstdint>

#include "odometer/rational.hpp"
#include "odometer/words.hpp"

namespace odometer {

/// Dyadic odometer: add 1 with carry to a binary word read least significant
/// digit first. The all-ones word maps to the all-zeros word.
TailWord dyadic_step(const TailWord& w);

/// Odometer on words over {k, k+1, ...} with k = w.floor():
/// (w1, w2, w3, ...) -> (k repeated w1-k times, w2+1, w3, ...).
TailWord baire_step(const TailWord& w);

/// Drops the first letter.
TailWord shift(const TailWord& w);

/// dyadic_step applied m times, computed as a single binary addition.
TailWord fast_forward(const TailWord& w, const Natural& m);

/// m * 2^n * 2^(k1 + ... + kn) for w = (k1, k2, ...). With E this value,
/// baire_step^m(shift^n(w)) == shift^n(baire_step^E(w)).
Natural renormalization_exponent(const TailWord& w, const Natural& m, std::uint64_t n);

}  // namespace odometer
