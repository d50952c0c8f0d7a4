// Copyright 2026 The ricesim Authors
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

#include "rice/rng.hpp"

namespace rice {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
  return mix64(a * kGolden + mix64(b + kGolden));
}

RngStream::RngStream(const StreamKey& key) {
  std::uint64_t h = mix64(key.seed + kGolden);
  h = hash_combine(h, key.episode);
  h = hash_combine(h, key.step);
  h = hash_combine(h, key.region);
  h = hash_combine(h, static_cast<std::uint64_t>(key.purpose));
  base_ = h;
}

RngStream::result_type RngStream::operator()() {
  ++counter_;
  return mix64(base_ + counter_ * kGolden);
}

double RngStream::uniform() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

}  // namespace rice
