#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "noncomm/field.hpp"
#include "noncomm/group.hpp"

namespace noncomm {

/// GL(2,q): invertible 2x2 matrices over GF(q), enumerated in lexicographic
/// order of (a,b,c,d). Order (q^2-1)(q^2-q); the center is the q-1 scalar
/// matrices. Requires q > 2 (GL(2,2) is handled by S_3 and the paper's
/// theorems assume q > 2).
inline FiniteGroup make_gl2(std::uint32_t q,
                            const std::vector<std::uint32_t>& irreducible = {},
                            std::size_t order_cap = 10000) {
  if (q <= 2) {
    throw std::invalid_argument("make_gl2: need prime power q > 2");
  }
  auto field = std::make_shared<GaloisField>(GaloisField::make(q, irreducible));

  const std::size_t expected_order =
      static_cast<std::size_t>(q * q - 1) * (q * q - q);
  if (expected_order > order_cap) {
    throw std::invalid_argument("make_gl2: |GL(2," + std::to_string(q) +
                                ")| = " + std::to_string(expected_order) +
                                " exceeds cap " + std::to_string(order_cap));
  }

  auto pack = [q](std::uint32_t a, std::uint32_t b, std::uint32_t c,
                  std::uint32_t d) {
    return ((a * q + b) * q + c) * q + d;
  };
  auto elements = std::make_shared<std::vector<std::uint32_t>>();
  auto index_of = std::make_shared<std::vector<std::uint32_t>>(
      static_cast<std::size_t>(q) * q * q * q, 0);
  std::uint32_t identity = 0;
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) {
      for (std::uint32_t c = 0; c < q; ++c) {
        for (std::uint32_t d = 0; d < q; ++d) {
          const std::uint32_t det =
              field->sub(field->mul(a, d), field->mul(b, c));
          if (det == 0) continue;
          if (a == 1 && b == 0 && c == 0 && d == 1) {
            identity = static_cast<std::uint32_t>(elements->size());
          }
          (*index_of)[pack(a, b, c, d)] =
              static_cast<std::uint32_t>(elements->size());
          elements->push_back(pack(a, b, c, d));
        }
      }
    }
  }
  if (elements->size() != expected_order) {
    throw std::logic_error("make_gl2: enumeration does not match "
                           "(q^2-1)(q^2-q)");
  }

  auto unpack = [q](std::uint32_t code) {
    std::uint32_t d = code % q;
    code /= q;
    std::uint32_t c = code % q;
    code /= q;
    std::uint32_t b = code % q;
    std::uint32_t a = code / q;
    return std::array<std::uint32_t, 4>{a, b, c, d};
  };

  FiniteGroup::Impl impl;
  impl.order = elements->size();
  impl.identity = identity;
  impl.label = "GL(2," + std::to_string(q) + ")";
  impl.mul = [field, elements, index_of, pack, unpack](
                 FiniteGroup::Element x, FiniteGroup::Element y) {
    const auto mx = unpack((*elements)[x]);
    const auto my = unpack((*elements)[y]);
    const auto& f = *field;
    const std::uint32_t a =
        f.add(f.mul(mx[0], my[0]), f.mul(mx[1], my[2]));
    const std::uint32_t b =
        f.add(f.mul(mx[0], my[1]), f.mul(mx[1], my[3]));
    const std::uint32_t c =
        f.add(f.mul(mx[2], my[0]), f.mul(mx[3], my[2]));
    const std::uint32_t d =
        f.add(f.mul(mx[2], my[1]), f.mul(mx[3], my[3]));
    return (*index_of)[pack(a, b, c, d)];
  };
  impl.namer = [elements, unpack](FiniteGroup::Element x) {
    const auto m = unpack((*elements)[x]);
    return "[[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "],[" +
           std::to_string(m[2]) + "," + std::to_string(m[3]) + "]]";
  };
  return FiniteGroup::from_impl(std::move(impl));
}

}  // namespace noncomm
