// Copyright 2026 The slowprov Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "slowprov/oracles.hpp"

namespace slowprov::oracles {

namespace {

std::uint64_t bits_of(const Natural& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

void guard(const Natural& v, std::uint64_t cap) {
  if (bits_of(v) > cap) throw HardCapExceeded("oracle value exceeds the hard bit cap");
}

Natural f2(const Natural& x, std::uint64_t cap) {
  const Natural e = x + 1;
  if (!e.fits_ulong_p() || e.get_ui() + bits_of(e) > cap + 1) {
    throw HardCapExceeded("oracle value exceeds the hard bit cap");
  }
  Natural r;
  mpz_mul_2exp(r.get_mpz_t(), e.get_mpz_t(), e.get_ui());
  return r - 1;
}

}  // namespace

Natural oracle_F(const Ordinal& alpha, const Natural& n, std::uint64_t bit_cap) {
  if (alpha.is_finite()) {
    const Natural k = *alpha.as_finite();
    if (k == 0) return n + 1;
    if (k == 1) return 2 * n + 1;
    if (k == 2) return f2(n, bit_cap);
  }
  Classification c = classify(alpha);
  if (c.kind == OrdinalKind::kSuccessor) {
    Natural x = n;
    for (Natural i = 0; i <= n; ++i) {
      x = oracle_F(*c.predecessor, x, bit_cap);
      guard(x, bit_cap);
    }
    return x;
  }
  if (alpha.is_epsilon_zero() && n >= kMaxTowerHeight) {
    throw HardCapExceeded("fundamental sequence index too large");
  }
  return oracle_F(fund_seq(alpha, n), n, bit_cap);
}

}  // namespace slowprov::oracles
