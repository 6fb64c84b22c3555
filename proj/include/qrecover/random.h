// Copyright 2026 The qrecover Authors
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

#ifndef QRECOVER_RANDOM_H
#define QRECOVER_RANDOM_H

#include <cstdint>
#include <random>

#include "qrecover/channel.h"
#include "qrecover/matrix.h"

namespace qrecover {

/// Seeded generator whose output is identical on every platform.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the standard.
/// Uniform doubles take the top 53 bits of each draw; normals use the Box-Muller
/// transform on two uniforms. std::*_distribution is avoided because its output is
/// implementation-defined.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }
    /// Uniform on [0, 1).
    double uniform();
    /// Standard normal.
    double normal();
    /// (x + iy) / sqrt(2) with x, y standard normal, so E|z|^2 = 1.
    Complex complex_normal();

   private:
    std::mt19937_64 engine_;
    double spare_ = 0;
    bool has_spare_ = false;
};

ComplexMatrix random_gaussian_matrix(size_t rows, size_t cols, Rng &rng);
/// Haar-like n x m isometry from Gram-Schmidt on a Gaussian sample.
ComplexMatrix random_isometry(size_t n, size_t m, Rng &rng);
ComplexMatrix random_unitary(size_t n, Rng &rng);
ComplexMatrix random_hermitian(size_t n, Rng &rng);
/// |psi><psi| for a Haar-random unit vector.
DensityMatrix random_pure_state(size_t k, Rng &rng);
/// G G^dag / tr(G G^dag) with G a k x k complex Gaussian sample.
DensityMatrix random_mixed_state(size_t k, Rng &rng);

}  // namespace qrecover

#endif
