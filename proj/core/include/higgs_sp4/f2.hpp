// Copyright 2026 The higgs-sp4 Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace higgs_sp4 {

/// Vector in F2^n. For a genus-g curve n = 2g and the coordinates are
/// (a_1..a_g, b_1..b_g).
class F2Vec {
  public:
    F2Vec() = default;
    /// `bits` fills the first min(n, 64) coordinates.
    explicit F2Vec(std::size_t len, std::uint64_t bits = 0);
    /// Bitstring "0101..."; character k is coordinate k.
    static F2Vec parse(std::string_view bits);
    static F2Vec unit(std::size_t len, std::size_t k);

    std::size_t size() const { return len_; }
    /// Coordinates 0..63 packed into a word.
    std::uint64_t bits() const { return w_.empty() ? 0 : w_[0]; }
    bool get(std::size_t k) const;
    void set(std::size_t k, bool value);
    bool is_zero() const;

    std::string to_string() const;

    friend F2Vec operator+(const F2Vec &x, const F2Vec &y);
    friend bool operator==(const F2Vec &x, const F2Vec &y) { return x.len_ == y.len_ && x.w_ == y.w_; }
    friend bool operator!=(const F2Vec &x, const F2Vec &y) { return !(x == y); }
    friend bool operator<(const F2Vec &x, const F2Vec &y)
    {
        return x.len_ != y.len_ ? x.len_ < y.len_ : x.w_ < y.w_;
    }

  private:
    std::size_t len_ = 0;
    std::vector<std::uint64_t> w_;
};

/// sum_i a_i b'_i + a'_i b_i over F2^g blocks. Throws DimensionMismatch.
int f2_pairing(const F2Vec &a, const F2Vec &b, const F2Vec &a2, const F2Vec &b2);

/// The same pairing with x = (a, b), y = (a', b') in F2^{2g}.
int f2_pairing(const F2Vec &x, const F2Vec &y);

/// (x + y, pairing(x, y)).
std::pair<F2Vec, int> f2_sw_map(const F2Vec &x, const F2Vec &y);

/// A pair (x, y) mapped to (w1, w2) by f2_sw_map; empty exactly for (0, 1).
std::optional<std::pair<F2Vec, F2Vec>> f2_preimage(const F2Vec &w1, int w2);

} // namespace higgs_sp4
