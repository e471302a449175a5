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

#include "higgs_sp4/f2.hpp"

#include <bit>

#include "higgs_sp4/error.hpp"

namespace higgs_sp4 {

namespace {

constexpr std::size_t kWord = 64;

void require_len(const F2Vec &x, const F2Vec &y)
{
    if (x.size() != y.size()) {
        fail(ErrorKind::DimensionMismatch, "F2 vectors of lengths " + std::to_string(x.size()) +
                                               " and " + std::to_string(y.size()));
    }
}

} // namespace

F2Vec::F2Vec(std::size_t len, std::uint64_t bits) : len_(len), w_((len + kWord - 1) / kWord, 0)
{
    if (len < kWord && (bits >> len) != 0) fail(ErrorKind::InvalidArgument, "F2 bits exceed length");
    if (len > 0) w_[0] = bits;
}

F2Vec F2Vec::parse(std::string_view text)
{
    F2Vec v(text.size());
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] == '1') {
            v.set(k, true);
        } else if (text[k] != '0') {
            fail(ErrorKind::InvalidArgument, "F2 bitstring may only contain 0 and 1");
        }
    }
    return v;
}

F2Vec F2Vec::unit(std::size_t len, std::size_t k)
{
    F2Vec v(len);
    v.set(k, true);
    return v;
}

bool F2Vec::get(std::size_t k) const { return k < len_ && ((w_[k / kWord] >> (k % kWord)) & 1U) != 0; }

void F2Vec::set(std::size_t k, bool value)
{
    if (k >= len_) fail(ErrorKind::InvalidArgument, "F2 coordinate out of range");
    const std::uint64_t bit = std::uint64_t{1} << (k % kWord);
    if (value) {
        w_[k / kWord] |= bit;
    } else {
        w_[k / kWord] &= ~bit;
    }
}

bool F2Vec::is_zero() const
{
    for (auto w : w_) {
        if (w != 0) return false;
    }
    return true;
}

std::string F2Vec::to_string() const
{
    std::string s(len_, '0');
    for (std::size_t k = 0; k < len_; ++k) {
        if (get(k)) s[k] = '1';
    }
    return s;
}

F2Vec operator+(const F2Vec &x, const F2Vec &y)
{
    require_len(x, y);
    F2Vec z = x;
    for (std::size_t k = 0; k < z.w_.size(); ++k) z.w_[k] ^= y.w_[k];
    return z;
}

int f2_pairing(const F2Vec &a, const F2Vec &b, const F2Vec &a2, const F2Vec &b2)
{
    require_len(a, b);
    require_len(a, a2);
    require_len(a, b2);
    int s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s ^= (a.get(k) && b2.get(k)) ^ (a2.get(k) && b.get(k));
    return s;
}

int f2_pairing(const F2Vec &x, const F2Vec &y)
{
    require_len(x, y);
    if (x.size() % 2 != 0) fail(ErrorKind::DimensionMismatch, "pairing needs even length 2g");
    const std::size_t g = x.size() / 2;
    if (x.size() <= kWord) {
        const std::uint64_t lo = (std::uint64_t{1} << g) - 1;
        const std::uint64_t ax = x.bits() & lo, bx = x.bits() >> g;
        const std::uint64_t ay = y.bits() & lo, by = y.bits() >> g;
        return std::popcount((ax & by) ^ (ay & bx)) & 1;
    }
    int s = 0;
    for (std::size_t k = 0; k < g; ++k) s ^= (x.get(k) && y.get(g + k)) ^ (y.get(k) && x.get(g + k));
    return s;
}

std::pair<F2Vec, int> f2_sw_map(const F2Vec &x, const F2Vec &y)
{
    return {x + y, f2_pairing(x, y)};
}

std::optional<std::pair<F2Vec, F2Vec>> f2_preimage(const F2Vec &w1, int w2)
{
    const std::size_t n = w1.size();
    if (w2 == 0) return std::make_pair(w1, F2Vec(n));
    if (w1.is_zero()) return std::nullopt;
    // pairing(e, w1 + e) = pairing(e, w1), so pick e dual to a set coordinate.
    const std::size_t g = n / 2;
    std::size_t k = 0;
    while (!w1.get(k)) ++k;
    const F2Vec e = F2Vec::unit(n, k < g ? k + g : k - g);
    return std::make_pair(e, w1 + e);
}

} // namespace higgs_sp4
