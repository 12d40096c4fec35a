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

#include "lopc/fock.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "lopc/errors.hpp"

namespace lopc {

OccupationVector::OccupationVector(std::vector<int> occupations)
    : occupations_(std::move(occupations)) {
  if (occupations_.empty()) {
    throw InvalidArgument("occupation vector needs at least one mode");
  }
  for (int n : occupations_) {
    if (n < 0) {
      throw InvalidArgument("occupation numbers must be nonnegative");
    }
  }
}

OccupationVector::OccupationVector(std::initializer_list<int> occupations)
    : OccupationVector(std::vector<int>(occupations)) {}

OccupationVector OccupationVector::vacuum(int modes) {
  if (modes < 1) throw InvalidArgument("vacuum needs at least one mode");
  return OccupationVector(std::vector<int>(static_cast<std::size_t>(modes), 0));
}

int OccupationVector::total() const {
  return std::accumulate(occupations_.begin(), occupations_.end(), 0);
}

std::string OccupationVector::to_string() const {
  const bool digits = std::all_of(occupations_.begin(), occupations_.end(),
                                  [](int n) { return n <= 9; });
  std::string out;
  for (std::size_t i = 0; i < occupations_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(occupations_[i]);
  }
  return out;
}

std::size_t OccupationHash::operator()(
    const OccupationVector& v) const noexcept {
  std::size_t h = v.modes();
  for (int n : v.occupations()) {
    h ^= static_cast<std::size_t>(n) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

OccupationVector parse_occupation(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (body.size() >= 2 && body.front() == '[' && body.back() == ']') {
    body = trim(body.substr(1, body.size() - 2));
  }
  if (body.empty()) throw ParseError("empty occupation string");

  std::vector<int> occ;
  if (body.find(',') == std::string_view::npos) {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw ParseError("invalid character '" + std::string(1, c) +
                         "' in occupation string \"" + std::string(text) +
                         "\"");
      }
      occ.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t comma = body.find(',', start);
      const std::string_view field = trim(body.substr(
          start, comma == std::string_view::npos ? std::string_view::npos
                                                 : comma - start));
      if (field.empty() ||
          !std::all_of(field.begin(), field.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        throw ParseError("invalid field in occupation string \"" +
                         std::string(text) + "\"");
      }
      if (field.size() > 9) throw ParseError("occupation number too large");
      occ.push_back(std::stoi(std::string(field)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return OccupationVector(std::move(occ));
}

std::uint64_t dimension(int modes, int photons) {
  if (modes < 1) throw InvalidArgument("dimension: modes must be >= 1");
  if (photons < 0) throw InvalidArgument("dimension: photons must be >= 0");
  // binomial(photons + k, k) with k = modes - 1, built as a running product
  // of exact intermediate binomials binomial(photons + i, i).
  const std::uint64_t k = static_cast<std::uint64_t>(modes) - 1;
  const std::uint64_t n = static_cast<std::uint64_t>(photons);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n + i) / i is an integer; cancel the common factor first so
    // the multiplication is the only place that can overflow.
    std::uint64_t num = n + i;
    std::uint64_t den = i;
    const std::uint64_t g1 = std::gcd(result, den);
    result /= g1;
    den /= g1;
    num /= den;  // den now divides num
    if (num != 0 && result > std::numeric_limits<std::uint64_t>::max() / num) {
      throw CapExceeded("dimension(" + std::to_string(modes) + ", " +
                        std::to_string(photons) +
                        ") exceeds the 64-bit integer range");
    }
    result *= num;
  }
  return result;
}

struct FockBasis::Data {
  int modes = 0;
  int photons = 0;
  std::vector<OccupationVector> states;
  std::unordered_map<OccupationVector, std::size_t, OccupationHash> index;
};

namespace {

void enumerate_into(std::vector<int>& prefix, int mode, int remaining,
                    std::vector<OccupationVector>& out) {
  const int modes = static_cast<int>(prefix.size());
  if (mode == modes - 1) {
    prefix[mode] = remaining;
    out.emplace_back(prefix);
    return;
  }
  for (int n = remaining; n >= 0; --n) {
    prefix[mode] = n;
    enumerate_into(prefix, mode + 1, remaining - n, out);
  }
}

}  // namespace

FockBasis::FockBasis(int modes, int photons) {
  const std::uint64_t dim = dimension(modes, photons);
  if (dim > std::numeric_limits<std::size_t>::max() / 2) {
    throw CapExceeded("basis too large to enumerate");
  }
  auto data = std::make_shared<Data>();
  data->modes = modes;
  data->photons = photons;
  data->states.reserve(static_cast<std::size_t>(dim));
  std::vector<int> prefix(static_cast<std::size_t>(modes), 0);
  enumerate_into(prefix, 0, photons, data->states);
  data->index.reserve(data->states.size());
  for (std::size_t i = 0; i < data->states.size(); ++i) {
    data->index.emplace(data->states[i], i);
  }
  data_ = std::move(data);
}

int FockBasis::modes() const { return data_->modes; }
int FockBasis::photons() const { return data_->photons; }
std::size_t FockBasis::size() const { return data_->states.size(); }
const std::vector<OccupationVector>& FockBasis::states() const {
  return data_->states;
}
const OccupationVector& FockBasis::operator[](std::size_t i) const {
  return data_->states[i];
}

std::optional<std::size_t> FockBasis::find(const OccupationVector& v) const {
  auto it = data_->index.find(v);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t FockBasis::index_of(const OccupationVector& v) const {
  if (static_cast<int>(v.modes()) != modes()) {
    throw NotMember("state " + v.to_string() + " has " +
                    std::to_string(v.modes()) + " modes, basis has " +
                    std::to_string(modes()));
  }
  if (v.total() != photons()) {
    throw NotMember("state " + v.to_string() + " has total " +
                    std::to_string(v.total()) + ", basis has " +
                    std::to_string(photons()) + " photons");
  }
  return data_->index.at(v);
}

FockBasis enumerate_basis(int modes, int photons) {
  return FockBasis(modes, photons);
}

std::size_t index_of(const FockBasis& basis, const OccupationVector& v) {
  return basis.index_of(v);
}

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

AngularLabel jl_relabel(const OccupationVector& v) {
  if (v.modes() != 2) {
    throw InvalidArgument("jl_relabel needs a two-mode state, got " +
                          std::to_string(v.modes()) + " modes");
  }
  return {HalfInteger::from_twice(v[0] + v[1]),
          HalfInteger::from_twice(v[0] - v[1])};
}

StateVector::StateVector(FockBasis basis, Eigen::VectorXcd amplitudes)
    : basis_(std::move(basis)), amplitudes_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amplitudes_.size()) != basis_.size()) {
    throw InvalidArgument("state vector has " +
                          std::to_string(amplitudes_.size()) +
                          " amplitudes for a basis of dimension " +
                          std::to_string(basis_.size()));
  }
}

StateVector StateVector::basis_state(FockBasis basis,
                                     const OccupationVector& v) {
  const std::size_t i = basis.index_of(v);
  Eigen::VectorXcd amps =
      Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(basis.size()));
  amps(static_cast<Eigen::Index>(i)) = 1.0;
  return StateVector(std::move(basis), std::move(amps));
}

std::complex<double> StateVector::amplitude(const OccupationVector& v) const {
  return amplitudes_(static_cast<Eigen::Index>(basis_.index_of(v)));
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

}  // namespace lopc
