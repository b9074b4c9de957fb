// Walks through 1/13 in base 10 and 1/75 in base 8 with the library API.

#include <iostream>

#include "midylab/cli.hpp"
#include "midylab/midylab.hpp"

using namespace midylab;

namespace {

void show(const Natural& b, const Natural& N, std::size_t d) {
  const auto e = period_digits(1, N, b);
  std::cout << "1/" << N << " in base " << b << ": period";
  for (auto digit : e.digits) std::cout << ' ' << digit;
  std::cout << " (length " << order_mod(b, N) << ")\n";

  const auto dec = blocks_and_sum(e, d);
  std::cout << "  " << d << " block values:";
  for (const auto& block : dec.blocks) std::cout << ' ' << block;
  std::cout << ", sum " << dec.sum << '\n';

  const auto verdict = midy_check_ppl2(b, N, d);
  std::cout << "  d = " << d << (verdict.holds ? " is" : " is not")
            << " in the Midy set";
  if (verdict.certificate) std::cout << " (" << cli::describe(*verdict.certificate) << ')';
  std::cout << "\n  Midy set: " << cli::set_string(midy_set(b, N).members) << "\n";
}

}  // namespace

int main() {
  show(10, 13, 3);
  show(8, 75, 4);
  show(8, 75, 5);

  const auto trace = prime_progression(10, 3, 1, 4);
  std::cout << "primes = 1 mod 3 from Midy witnesses in base 10:";
  for (const auto& step : trace.steps) std::cout << ' ' << step.prime;
  std::cout << '\n';
}
