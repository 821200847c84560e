#include "odometer/odometers.hpp"

#include <stdexcept>
#include <vector>

namespace odometer {

namespace {

void require_binary(const TailWord& w, const char* what) {
  if (!w.is_binary()) throw std::invalid_argument(std::string(what) + ": word is not binary");
}

}  // namespace

TailWord dyadic_step(const TailWord& w) {
  require_binary(w, "dyadic_step");
  // A zero, if any, occurs within the preperiod or the first period copy.
  const std::size_t horizon = w.preperiod().size() + w.period().size();
  for (std::size_t i = 1; i <= horizon; ++i) {
    if (w.letter(i) == 0) {
      std::vector<Letter> head(i, 0);
      head.back() = 1;
      return w.drop(i).prepend(head);
    }
  }
  return TailWord::constant(0, 0);
}

TailWord baire_step(const TailWord& w) {
  const Letter k = w.floor();
  const Letter first = w.letter(1);
  std::vector<Letter> head(static_cast<std::size_t>(first - k), k);
  head.push_back(w.letter(2) + 1);
  return w.drop(2).prepend(head);
}

TailWord shift(const TailWord& w) { return w.drop(1); }

TailWord fast_forward(const TailWord& w, const Natural& m) {
  require_binary(w, "fast_forward");
  if (m < 0) throw std::invalid_argument("fast_forward: negative step count");
  if (m == 0) return w;

  const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  std::vector<Letter> head(bits);
  Letter carry = 0;
  for (std::size_t i = 0; i < bits; ++i) {
    const Letter s = w.letter(i + 1) + static_cast<Letter>(mpz_tstbit(m.get_mpz_t(), i)) + carry;
    head[i] = s & 1;
    carry = s >> 1;
  }
  TailWord rest = w.drop(bits);
  // A carry out of the added digits is one more odometer step on the tail.
  if (carry) rest = dyadic_step(rest);
  return rest.prepend(head);
}

Natural renormalization_exponent(const TailWord& w, const Natural& m, std::uint64_t n) {
  if (m < 0) throw std::invalid_argument("renormalization_exponent: negative m");
  std::uint64_t exponent = n;
  for (std::uint64_t i = 1; i <= n; ++i) exponent += static_cast<std::uint64_t>(w.letter(i) - w.floor());
  return m * pow2(exponent);
}

}  // namespace odometer
