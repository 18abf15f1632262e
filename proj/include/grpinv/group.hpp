// Copyright 2026 The grpinv Authors
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

#ifndef GRPINV_GROUP_HPP_
#define GRPINV_GROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grpinv/errors.hpp"
#include "grpinv/group_spec.hpp"

namespace grpinv {

using Element = std::uint32_t;

struct BuildOptions {
  // Largest realized order accepted by build(); the CLI may raise it to 512.
  std::size_t max_order = 128;
  // Associativity is checked on all triples for groups up to this order.
  std::size_t associativity_check_max_order = 512;
};

// A finite group given by its Cayley table. Element 0 is the identity.
// Immutable after construction.
class FiniteGroup {
 public:
  // Takes a row-major order x order multiplication table and validates it:
  // entries in range, 0 is a two-sided identity, every element has an
  // inverse, and (up to options.associativity_check_max_order) the
  // operation is associative. Throws InvalidSpec on any violation.
  FiniteGroup(std::size_t order, std::vector<Element> table, std::string label,
              const BuildOptions& options = {})
      : order_(order), table_(std::move(table)), label_(std::move(label)) {
    if (order_ == 0) throw InvalidSpec("group order must be positive");
    if (table_.size() != order_ * order_) throw InvalidSpec("table size mismatch");
    for (Element v : table_)
      if (v >= order_) throw InvalidSpec("table entry out of range");
    for (Element a = 0; a < order_; ++a) {
      if (mul(0, a) != a || mul(a, 0) != a) throw InvalidSpec("element 0 is not the identity");
    }
    inverse_.assign(order_, 0);
    for (Element a = 0; a < order_; ++a) {
      // Latin-square rows: a*x = 0 has exactly one solution in a group.
      std::size_t found = 0;
      for (Element b = 0; b < order_; ++b) {
        if (mul(b, a) == 0) {
          inverse_[a] = b;
          ++found;
        }
      }
      if (found != 1 || mul(a, inverse_[a]) != 0) throw InvalidSpec("element without unique inverse");
    }
    if (order_ <= options.associativity_check_max_order) {
      for (Element a = 0; a < order_; ++a)
        for (Element b = 0; b < order_; ++b) {
          const Element ab = mul(a, b);
          for (Element c = 0; c < order_; ++c) {
            if (mul(ab, c) != mul(a, mul(b, c))) throw InvalidSpec("operation is not associative");
          }
        }
    }
    elem_order_.assign(order_, 1);
    for (Element a = 1; a < order_; ++a) {
      std::uint32_t m = 1;
      for (Element x = a; x != 0; x = mul(x, a)) ++m;
      elem_order_[a] = m;
    }
  }

  std::size_t order() const { return order_; }
  static constexpr Element identity() { return 0; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::uint32_t element_order(Element a) const { return elem_order_[a]; }
  std::span<const std::uint32_t> element_orders() const { return elem_order_; }
  std::span<const Element> table() const { return table_; }
  const std::string& label() const { return label_; }

  FiniteGroup with_label(std::string label) const {
    FiniteGroup copy = *this;
    copy.label_ = std::move(label);
    return copy;
  }

  Element power(Element a, std::uint64_t k) const {
    Element result = 0;
    k %= elem_order_[a];
    for (std::uint64_t i = 0; i < k; ++i) result = mul(result, a);
    return result;
  }

  bool is_abelian() const {
    for (Element a = 0; a < order_; ++a)
      for (Element b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  bool is_cyclic() const {
    return std::any_of(elem_order_.begin(), elem_order_.end(),
                       [this](std::uint32_t o) { return o == order_; });
  }

  // Same table; labels are diagnostic and ignored.
  bool operator==(const FiniteGroup& other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

 private:
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::uint32_t> elem_order_;
  std::string label_;
};

// ord(a): least m >= 1 with a^m = identity.
inline std::uint32_t element_order(const FiniteGroup& g, Element a) { return g.element_order(a); }

namespace detail {

inline void check_order_limit(std::uint64_t order, const BuildOptions& options) {
  if (order > options.max_order)
    throw OrderLimitExceeded("group order " + std::to_string(order) + " exceeds the limit " +
                             std::to_string(options.max_order));
}

inline FiniteGroup make_cyclic(std::uint64_t n, const std::string& label, const BuildOptions& opt) {
  std::vector<Element> table(n * n);
  for (std::uint64_t i = 0; i < n; ++i)
    for (std::uint64_t j = 0; j < n; ++j) table[i * n + j] = static_cast<Element>((i + j) % n);
  return FiniteGroup(n, std::move(table), label, opt);
}

// r^i a^s at index s*n + i; (r^i a^s)(r^j a^t) = r^(i + (-1)^s j) a^(s+t).
inline FiniteGroup make_dihedral(std::uint64_t n, const std::string& label, const BuildOptions& opt) {
  const std::uint64_t order = 2 * n;
  std::vector<Element> table(order * order);
  for (std::uint64_t x = 0; x < order; ++x) {
    const std::uint64_t s = x / n, i = x % n;
    for (std::uint64_t y = 0; y < order; ++y) {
      const std::uint64_t t = y / n, j = y % n;
      const std::uint64_t rot = s == 0 ? (i + j) % n : (i + n - j) % n;
      table[x * order + y] = static_cast<Element>(((s + t) % 2) * n + rot);
    }
  }
  return FiniteGroup(order, std::move(table), label, opt);
}

// Q_m = <x, y | x^(m/2) = 1, y^2 = x^(m/4), y^-1 x y = x^-1>; x^i y^s at
// index s*(m/2) + i.
inline FiniteGroup make_quaternion(std::uint64_t m, const std::string& label, const BuildOptions& opt) {
  const std::uint64_t half = m / 2, quarter = m / 4;
  std::vector<Element> table(m * m);
  for (std::uint64_t a = 0; a < m; ++a) {
    const std::uint64_t s = a / half, i = a % half;
    for (std::uint64_t b = 0; b < m; ++b) {
      const std::uint64_t t = b / half, j = b % half;
      std::uint64_t rot, ys;
      if (s == 0) {
        rot = (i + j) % half;
        ys = t;
      } else if (t == 0) {
        rot = (i + half - j) % half;
        ys = 1;
      } else {
        // x^i y x^j y = x^(i-j) y^2 = x^(i-j+m/4)
        rot = (i + half - j + quarter) % half;
        ys = 0;
      }
      table[a * m + b] = static_cast<Element>(ys * half + rot);
    }
  }
  return FiniteGroup(m, std::move(table), label, opt);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

// Pairs (i mod q, j mod p) at index j*q + i with
// (i, j)(i', j') = (i + r^j i', j + j'), r the least r > 1 with r^p = 1 mod q.
inline FiniteGroup make_semidirect(std::uint64_t q, std::uint64_t p, const std::string& label,
                                   const BuildOptions& opt) {
  std::uint64_t r = 2;
  while (pow_mod(r, p, q) != 1) ++r;
  std::vector<std::uint64_t> rpow(p);
  for (std::uint64_t j = 0; j < p; ++j) rpow[j] = pow_mod(r, j, q);
  const std::uint64_t order = p * q;
  std::vector<Element> table(order * order);
  for (std::uint64_t x = 0; x < order; ++x) {
    const std::uint64_t j = x / q, i = x % q;
    for (std::uint64_t y = 0; y < order; ++y) {
      const std::uint64_t j2 = y / q, i2 = y % q;
      const std::uint64_t ni = (i + rpow[j] * i2) % q;
      const std::uint64_t nj = (j + j2) % p;
      table[x * order + y] = static_cast<Element>(nj * q + ni);
    }
  }
  return FiniteGroup(order, std::move(table), label, opt);
}

}  // namespace detail

// Direct product with (a, b) at index a*|right| + b.
inline FiniteGroup direct_product(const FiniteGroup& left, const FiniteGroup& right,
                                  const std::string& label, const BuildOptions& opt = {}) {
  const std::size_t n1 = left.order(), n2 = right.order(), order = n1 * n2;
  detail::check_order_limit(order, opt);
  std::vector<Element> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const Element a = static_cast<Element>(x / n2), b = static_cast<Element>(x % n2);
    for (std::size_t y = 0; y < order; ++y) {
      const Element c = static_cast<Element>(y / n2), d = static_cast<Element>(y % n2);
      table[x * order + y] = static_cast<Element>(left.mul(a, c) * n2 + right.mul(b, d));
    }
  }
  return FiniteGroup(order, std::move(table), label, opt);
}

// A permutation in one-line notation over points 0..degree-1.
using Permutation = std::vector<std::uint32_t>;

inline Permutation permutation_from_cycles(const CycleGenerator& cycles, unsigned degree) {
  Permutation perm(degree);
  std::iota(perm.begin(), perm.end(), 0u);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      perm[cycle[k] - 1] = cycle[(k + 1) % cycle.size()] - 1;
    }
  }
  return perm;
}

// Breadth-first closure of the generators. Element 0 is the identity;
// later indices follow discovery order, multiplying each discovered element
// on the right by the generators in the given order. The product a*b applies
// a first, then b.
inline FiniteGroup from_permutation_generators(const std::vector<Permutation>& gens,
                                               unsigned degree, const std::string& label,
                                               const BuildOptions& opt = {}) {
  for (const auto& g : gens) {
    if (g.size() != degree) throw InvalidSpec("generator degree mismatch");
    std::vector<bool> hit(degree, false);
    for (auto x : g) {
      if (x >= degree || hit[x]) throw InvalidSpec("generator is not a bijection");
      hit[x] = true;
    }
  }
  auto compose = [degree](const Permutation& a, const Permutation& b) {
    Permutation out(degree);
    for (unsigned x = 0; x < degree; ++x) out[x] = b[a[x]];
    return out;
  };
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  std::vector<Permutation> elements{id};
  std::map<Permutation, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : gens) {
      Permutation next = compose(elements[head], g);
      if (index.emplace(next, static_cast<Element>(elements.size())).second) {
        elements.push_back(std::move(next));
        detail::check_order_limit(elements.size(), opt);
      }
    }
  }
  const std::size_t order = elements.size();
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      table[a * order + b] = index.at(compose(elements[a], elements[b]));
  return FiniteGroup(order, std::move(table), label, opt);
}

// Realizes a GroupSpec. Deterministic: equal specs give identical tables.
// Throws InvalidSpec or OrderLimitExceeded.
inline FiniteGroup build(const GroupSpec& spec, const BuildOptions& opt = {}) {
  using K = GroupSpec::Kind;
  validate(spec);
  if (auto predicted = predicted_order(spec)) detail::check_order_limit(*predicted, opt);
  const std::string label = to_string(spec);
  switch (spec.kind) {
    case K::kCyclic:
      return detail::make_cyclic(spec.params[0], label, opt);
    case K::kDihedral:
      return detail::make_dihedral(spec.params[0], label, opt);
    case K::kQuaternion:
      return detail::make_quaternion(spec.params[0], label, opt);
    case K::kSemidirectPQ:
      return detail::make_semidirect(spec.params[0], spec.params[1], label, opt);
    case K::kProduct:
      return direct_product(build(spec.children[0], opt), build(spec.children[1], opt), label, opt);
    case K::kPower: {
      const FiniteGroup base = build(spec.children[0], opt);
      FiniteGroup acc = base.with_label(label);
      for (std::uint64_t i = 1; i < spec.params[0]; ++i) acc = direct_product(acc, base, label, opt);
      return acc;
    }
    case K::kPermGroup: {
      std::vector<Permutation> perms;
      for (const auto& g : spec.generators) perms.push_back(permutation_from_cycles(g, spec.degree));
      return from_permutation_generators(perms, spec.degree, label, opt);
    }
  }
  throw InvalidSpec("unknown spec kind");
}

inline FiniteGroup build_semidirect_pq(std::uint64_t q, std::uint64_t p, const BuildOptions& opt = {}) {
  return build(GroupSpec::semidirect_pq(q, p), opt);
}

}  // namespace grpinv

#endif  // GRPINV_GROUP_HPP_
