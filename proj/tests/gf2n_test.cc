// Copyright 2026 The MPF Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mpf/gf2n.h"

#include <random>

#include "gtest/gtest.h"
#include "mpf/errors.h"
#include "oracles.h"

namespace mpf {
namespace {

TEST(MakeField, DefaultModuli) {
  EXPECT_EQ(make_field(1).modulus(), 0b10u);
  EXPECT_EQ(make_field(2).modulus(), 0b111u);
  EXPECT_EQ(make_field(3).modulus(), 0b1011u);
  EXPECT_EQ(make_field(1).size(), 2u);
}

TEST(MakeField, DefaultIsSmallestIrreducible) {
  // Brute-force factorization oracle over every candidate of degree n.
  for (int n = 1; n <= 8; ++n) {
    std::uint32_t expected = 0;
    for (std::uint32_t p = 1u << n; p < (2u << n); ++p) {
      if (oracle::irreducible(p)) {
        expected = p;
        break;
      }
    }
    EXPECT_EQ(make_field(n).modulus(), expected) << "n=" << n;
  }
}

TEST(MakeField, IrreducibilityAgreesWithFactorization) {
  for (std::uint32_t p = 2; p < 1024; ++p) {
    EXPECT_EQ(is_irreducible(p), oracle::irreducible(p)) << p;
  }
}

TEST(MakeField, RejectsBadModuli) {
  EXPECT_THROW(make_field(2, 0b101), InvalidFieldError);   // (X+1)^2
  EXPECT_THROW(make_field(3, 0b111), InvalidFieldError);   // degree 2
  EXPECT_THROW(make_field(2, 0b1011), InvalidFieldError);  // degree 3
  EXPECT_THROW(make_field(0), InvalidFieldError);
  EXPECT_THROW(make_field(25), InvalidFieldError);
  EXPECT_NO_THROW(make_field(3, 0b1101));
  EXPECT_NO_THROW(make_field(24));
}

TEST(FieldMul, SmallExamples) {
  const FieldSpec f4 = make_field(2);
  EXPECT_EQ(f4.mul(2, 2), 3u);
  for (FieldElement a = 0; a < 4; ++a) {
    EXPECT_EQ(f4.mul(a, 0), 0u);
    EXPECT_EQ(f4.mul(a, 1), a);
  }
}

TEST(FieldMul, MatchesLongDivisionOracle) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 24; ++n) {
    const FieldSpec f = make_field(n);
    const oracle::Field o{n, f.modulus()};
    for (int t = 0; t < 300; ++t) {
      const FieldElement a = rng() & f.mask();
      const FieldElement b = rng() & f.mask();
      ASSERT_EQ(f.mul(a, b), o.mul(a, b)) << "n=" << n;
    }
  }
}

TEST(FieldMul, RingAxiomsExhaustiveSmall) {
  for (int n = 1; n <= 4; ++n) {
    const FieldSpec f = make_field(n);
    for (FieldElement a = 0; a < f.size(); ++a) {
      for (FieldElement b = 0; b < f.size(); ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (FieldElement c = 0; c < f.size(); ++c) {
          EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          EXPECT_EQ(f.mul(a, b ^ c), f.mul(a, b) ^ f.mul(a, c));
        }
      }
    }
  }
}

TEST(FieldMul, MultiplicativeOrderDividesGroupOrder) {
  for (int n : {1, 2, 5, 8, 13}) {
    const FieldSpec f = make_field(n);
    for (FieldElement a = 1; a < f.size() && a < 200; ++a) {
      EXPECT_EQ(f.pow(a, f.size() - 1), 1u) << "n=" << n << " a=" << a;
      EXPECT_EQ(f.mul(a, f.inverse(a)), 1u);
    }
    EXPECT_EQ(f.inverse(0), 0u);
  }
}

TEST(Trace, SmallExamples) {
  const FieldSpec f4 = make_field(2);
  EXPECT_EQ(f4.trace(0), 0);
  EXPECT_EQ(f4.trace(2), 1);  // alpha + alpha^2 = 1
  EXPECT_EQ(f4.trace(1), 0);
  EXPECT_EQ(make_field(1).trace(1), 1);
}

TEST(Trace, MaskMatchesConjugateSumAndOracle) {
  for (int n = 1; n <= 10; ++n) {
    const FieldSpec f = make_field(n);
    const oracle::Field o{n, f.modulus()};
    for (FieldElement a = 0; a < f.size(); ++a) {
      ASSERT_EQ(f.trace(a), f.trace_by_conjugates(a));
      ASSERT_EQ(f.trace(a), o.trace(a));
    }
  }
}

TEST(Trace, LinearAndFrobeniusInvariant) {
  for (int n = 1; n <= 6; ++n) {
    const FieldSpec f = make_field(n);
    for (FieldElement a = 0; a < f.size(); ++a) {
      EXPECT_EQ(f.trace(f.square(a)), f.trace(a));
      for (FieldElement b = 0; b < f.size(); ++b) {
        EXPECT_EQ(f.trace(a ^ b), f.trace(a) ^ f.trace(b));
      }
    }
  }
}

TEST(Trace, FormMask) {
  const FieldSpec f = make_field(5);
  for (FieldElement w = 0; w < f.size(); ++w) {
    const std::uint32_t m = f.trace_form_mask(w);
    for (FieldElement x = 0; x < f.size(); ++x) {
      EXPECT_EQ(f.trace(f.mul(w, x)), std::popcount(m & x) & 1);
    }
  }
}

TEST(Sigma, SmallExamples) {
  const FieldSpec f4 = make_field(2);
  for (FieldElement c = 0; c < 4; ++c) EXPECT_EQ(f4.sigma(c, 0), 0);
  EXPECT_EQ(f4.sigma(1, 2), 1);
  EXPECT_EQ(f4.sigma(1, 1), 1);
  // One summand-free field.
  EXPECT_EQ(make_field(1).sigma(1, 1), 0);
}

TEST(Sigma, MatchesOracleAndDependsOnProductOnly) {
  for (int n = 1; n <= 6; ++n) {
    const FieldSpec f = make_field(n);
    const oracle::Field o{n, f.modulus()};
    for (FieldElement c = 0; c < f.size(); ++c) {
      for (FieldElement x = 0; x < f.size(); ++x) {
        const int s = f.sigma(c, x);
        ASSERT_EQ(s, o.sigma(c, x));
        ASSERT_EQ(s, f.sigma(1, f.mul(c, x)));
        // sigma^2 = sigma in the field.
        ASSERT_EQ(f.square(static_cast<FieldElement>(s)),
                  static_cast<FieldElement>(s));
      }
    }
  }
}

TEST(Sigma, AdditivityExhaustive) {
  for (int n = 1; n <= 5; ++n) {
    const FieldSpec f = make_field(n);
    for (FieldElement c = 0; c < f.size(); ++c) {
      for (FieldElement a = 0; a < f.size(); ++a) {
        for (FieldElement b = 0; b < f.size(); ++b) {
          const int rhs = f.sigma(c, a) ^ f.sigma(c, b) ^
                          (f.trace(f.mul(c, a)) & f.trace(f.mul(c, b))) ^
                          f.trace(f.mul(f.square(c), f.mul(a, b)));
          ASSERT_EQ(f.sigma(c, a ^ b), rhs) << n << ' ' << c << ' ' << a << ' ' << b;
        }
      }
    }
  }
}

TEST(Trace, ModFourIdentity) {
  for (int n = 1; n <= 5; ++n) {
    const FieldSpec f = make_field(n);
    for (FieldElement x = 0; x < f.size(); ++x) {
      for (FieldElement y = 0; y < f.size(); ++y) {
        const int tx = f.trace(x), ty = f.trace(y);
        EXPECT_EQ((tx + ty) % 4, (f.trace(x ^ y) + 2 * tx * ty) % 4);
      }
    }
  }
}

TEST(Field, NonDefaultModulus) {
  const FieldSpec f = make_field(3, 0b1101);
  const oracle::Field o{3, 0b1101};
  for (FieldElement a = 0; a < 8; ++a) {
    for (FieldElement b = 0; b < 8; ++b) EXPECT_EQ(f.mul(a, b), o.mul(a, b));
    EXPECT_EQ(f.trace(a), o.trace(a));
  }
}

}  // namespace
}  // namespace mpf
