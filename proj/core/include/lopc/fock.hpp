// Copyright 2026 The lopc Authors
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

#pragma once

// Fixed-photon-number Fock subspaces of N optical modes.
//
// The n-photon subspace over N modes is spanned by the occupation vectors
// |n_1 ... n_N> with n_1 + ... + n_N = n. Bases are enumerated in descending
// lexicographic order, so (n,0,...,0) comes first and (0,...,0,n) last; for
// two modes this is |n,0>, |n-1,1>, ..., |0,n>. All indices are 0-based.

#include <Eigen/Core>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lopc {

// Photon counts per mode; the label of a Fock basis state.
class OccupationVector {
 public:
  OccupationVector() = default;
  // Throws InvalidArgument on an empty vector or a negative entry.
  explicit OccupationVector(std::vector<int> occupations);
  OccupationVector(std::initializer_list<int> occupations);

  // Vacuum over `modes` modes.
  static OccupationVector vacuum(int modes);

  std::size_t modes() const { return occupations_.size(); }
  int total() const;
  int operator[](std::size_t mode) const { return occupations_[mode]; }
  std::span<const int> occupations() const { return occupations_; }

  // "0010" when every entry is a single digit, "1,0,12" otherwise.
  std::string to_string() const;

  friend bool operator==(const OccupationVector&,
                         const OccupationVector&) = default;
  friend auto operator<=>(const OccupationVector&,
                          const OccupationVector&) = default;

 private:
  std::vector<int> occupations_;
};

struct OccupationHash {
  std::size_t operator()(const OccupationVector& v) const noexcept;
};

// Parses the CLI text form: an undelimited digit string ("0010") or a
// comma-separated list ("1,0,12"), optionally wrapped in brackets.
// Throws ParseError.
OccupationVector parse_occupation(std::string_view text);

// binomial(n + N - 1, N - 1), the number of weak compositions of `photons`
// into `modes` parts. Exact; throws CapExceeded if the result does not fit
// in 64 bits and InvalidArgument for modes < 1 or photons < 0.
std::uint64_t dimension(int modes, int photons);

// Ordered basis of the n-photon subspace over N modes, with reverse lookup.
// Cheap to copy: the enumeration is shared and immutable.
class FockBasis {
 public:
  FockBasis(int modes, int photons);

  int modes() const;
  int photons() const;
  std::size_t size() const;
  const std::vector<OccupationVector>& states() const;
  const OccupationVector& operator[](std::size_t i) const;

  // Position of `v`; throws NotMember naming the reason (wrong number of
  // modes, wrong total).
  std::size_t index_of(const OccupationVector& v) const;
  std::optional<std::size_t> find(const OccupationVector& v) const;

  // Bases over the same (modes, photons) are identical.
  friend bool operator==(const FockBasis& a, const FockBasis& b) {
    return a.modes() == b.modes() && a.photons() == b.photons();
  }

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

FockBasis enumerate_basis(int modes, int photons);
std::size_t index_of(const FockBasis& basis, const OccupationVector& v);

// Exact half-integer, stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int twice) {
    HalfInteger h;
    h.twice_ = twice;
    return h;
  }
  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return twice_ / 2.0; }
  // "5/2", "-1/2", "3".
  std::string to_string() const;

  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

 private:
  int twice_ = 0;
};

// Angular-momentum labels |j, l> of a two-mode Fock state:
// j = (n1 + n2) / 2, l = (n1 - n2) / 2.
struct AngularLabel {
  HalfInteger j;
  HalfInteger l;
  friend constexpr bool operator==(AngularLabel, AngularLabel) = default;
};

// Throws InvalidArgument unless `v` has exactly two modes.
AngularLabel jl_relabel(const OccupationVector& v);

// Amplitudes over a FockBasis.
class StateVector {
 public:
  StateVector(FockBasis basis, Eigen::VectorXcd amplitudes);
  static StateVector basis_state(FockBasis basis, const OccupationVector& v);

  const FockBasis& basis() const { return basis_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(const OccupationVector& v) const;
  double norm_squared() const { return amplitudes_.squaredNorm(); }
  bool is_normalized(double tol = 1e-10) const;

 private:
  FockBasis basis_;
  Eigen::VectorXcd amplitudes_;
};

}  // namespace lopc
