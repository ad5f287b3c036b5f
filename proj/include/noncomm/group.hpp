#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace noncomm {

/// Orders up to this bound get a dense Cayley table; larger groups multiply
/// through their structural formula.
inline constexpr std::size_t kCayleyTableCap = 1024;

/// A finite group with elements 0..order-1. Immutable after construction
/// and cheap to copy; safe to share across threads.
class FiniteGroup {
 public:
  using Element = std::uint32_t;

  FiniteGroup() = default;

  std::size_t order() const { return impl_->order; }
  Element identity() const { return impl_->identity; }
  const std::string& label() const { return impl_->label; }

  Element multiply(Element x, Element y) const {
    if (!impl_->table.empty()) {
      return impl_->table[static_cast<std::size_t>(x) * impl_->order + y];
    }
    return impl_->mul(x, y);
  }

  Element inverse(Element x) const { return impl_->inverses[x]; }

  std::string element_name(Element x) const { return impl_->namer(x); }

  bool commutes(Element x, Element y) const {
    return multiply(x, y) == multiply(y, x);
  }

  bool is_abelian() const {
    const std::size_t n = order();
    for (Element x = 0; x < n; ++x) {
      for (Element y = static_cast<Element>(x) + 1; y < n; ++y) {
        if (!commutes(x, y)) return false;
      }
    }
    return true;
  }

  struct Impl {
    std::size_t order = 1;
    Element identity = 0;
    std::string label;
    std::vector<Element> table;  // row-major order*order, empty if formulaic
    std::function<Element(Element, Element)> mul;
    std::vector<Element> inverses;
    std::function<std::string(Element)> namer;
  };

  static FiniteGroup from_impl(Impl impl) {
    FiniteGroup g;
    auto p = std::make_shared<Impl>(std::move(impl));
    if (p->order <= kCayleyTableCap && p->table.empty()) {
      p->table.resize(p->order * p->order);
      for (Element x = 0; x < p->order; ++x) {
        for (Element y = 0; y < p->order; ++y) {
          p->table[static_cast<std::size_t>(x) * p->order + y] = p->mul(x, y);
        }
      }
    }
    if (p->inverses.empty()) {
      p->inverses.assign(p->order, 0);
      FiniteGroup tmp;
      tmp.impl_ = p;
      for (Element x = 0; x < p->order; ++x) {
        bool found = false;
        for (Element y = 0; y < p->order; ++y) {
          if (tmp.multiply(x, y) == p->identity &&
              tmp.multiply(y, x) == p->identity) {
            p->inverses[x] = y;
            found = true;
            break;
          }
        }
        if (!found) throw std::logic_error("group element without inverse");
      }
    }
    g.impl_ = std::move(p);
    return g;
  }

 private:
  std::shared_ptr<const Impl> impl_;
};

/// Elements commuting with everything; brute-force enumeration.
inline std::vector<FiniteGroup::Element> center(const FiniteGroup& g) {
  std::vector<FiniteGroup::Element> z;
  const std::size_t n = g.order();
  for (FiniteGroup::Element x = 0; x < n; ++x) {
    bool central = true;
    for (FiniteGroup::Element y = 0; y < n && central; ++y) {
      central = g.commutes(x, y);
    }
    if (central) z.push_back(x);
  }
  return z;
}

/// All y with xy = yx.
inline std::vector<FiniteGroup::Element> centralizer(
    const FiniteGroup& g, FiniteGroup::Element x) {
  if (x >= g.order()) throw std::out_of_range("centralizer: bad element");
  std::vector<FiniteGroup::Element> c;
  for (FiniteGroup::Element y = 0; y < g.order(); ++y) {
    if (g.commutes(x, y)) c.push_back(y);
  }
  return c;
}

/// Dihedral group of order 2n, n >= 3. Element 0 is e, 1..n-1 are the
/// rotations r^i in power order. For even n the reflections come in
/// commuting pairs (s r^j, s r^{j+n/2}) placed adjacently, which makes the
/// non-commuting graph's adjacency matrix equal the block layout used in
/// the dihedral spectrum proofs, entry for entry.
inline FiniteGroup make_dihedral(int n) {
  if (n < 3) {
    throw std::invalid_argument(
        "make_dihedral: need n >= 3 (D_4 is abelian, its graph is null)");
  }
  const std::uint32_t un = static_cast<std::uint32_t>(n);
  // index <-> (eps, a) for elements s^eps r^a
  std::vector<std::uint32_t> exp_of_pos(un);  // reflection slot -> exponent
  std::vector<std::uint32_t> pos_of_exp(un);
  if (n % 2 == 0) {
    for (std::uint32_t p = 0; p < un / 2; ++p) {
      exp_of_pos[2 * p] = p;
      exp_of_pos[2 * p + 1] = p + un / 2;
    }
  } else {
    for (std::uint32_t p = 0; p < un; ++p) exp_of_pos[p] = p;
  }
  for (std::uint32_t p = 0; p < un; ++p) pos_of_exp[exp_of_pos[p]] = p;

  auto decode = [un, exp_of_pos](FiniteGroup::Element i)
      -> std::pair<std::uint32_t, std::uint32_t> {
    return i < un ? std::make_pair(0u, i)
                  : std::make_pair(1u, exp_of_pos[i - un]);
  };
  auto encode = [un, pos_of_exp](std::uint32_t eps,
                                 std::uint32_t a) -> FiniteGroup::Element {
    return eps == 0 ? a : un + pos_of_exp[a];
  };

  FiniteGroup::Impl impl;
  impl.order = 2 * static_cast<std::size_t>(n);
  impl.identity = 0;
  impl.label = "D_" + std::to_string(2 * n);
  impl.mul = [un, decode, encode](FiniteGroup::Element x,
                                  FiniteGroup::Element y) {
    auto [e1, a1] = decode(x);
    auto [e2, a2] = decode(y);
    // s^e1 r^a1 * s^e2 r^a2 = s^(e1^e2) r^(a2-a1 or a1+a2)
    std::uint32_t a = e2 ? (a2 + un - a1) % un : (a1 + a2) % un;
    return encode(e1 ^ e2, a);
  };
  impl.namer = [decode](FiniteGroup::Element i) {
    auto [eps, a] = decode(i);
    if (eps == 0) return a == 0 ? std::string("e") : "r^" + std::to_string(a);
    return a == 0 ? std::string("s") : "s*r^" + std::to_string(a);
  };
  return FiniteGroup::from_impl(std::move(impl));
}

/// Cyclic group of order n >= 1.
inline FiniteGroup make_cyclic(int n) {
  if (n < 1) throw std::invalid_argument("make_cyclic: need n >= 1");
  const std::uint32_t un = static_cast<std::uint32_t>(n);
  FiniteGroup::Impl impl;
  impl.order = un;
  impl.identity = 0;
  impl.label = "C_" + std::to_string(n);
  impl.mul = [un](FiniteGroup::Element x, FiniteGroup::Element y) {
    return (x + y) % un;
  };
  impl.namer = [](FiniteGroup::Element i) {
    return i == 0 ? std::string("e") : "g^" + std::to_string(i);
  };
  return FiniteGroup::from_impl(std::move(impl));
}

/// Symmetric group S_k, 2 <= k <= 6, permutations in lexicographic order of
/// one-line notation (so index 0 is the identity).
inline FiniteGroup make_symmetric(int k) {
  if (k < 2 || k > 6) {
    throw std::invalid_argument("make_symmetric: need 2 <= k <= 6");
  }
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] =
      static_cast<std::uint8_t>(i);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto shared_perms =
      std::make_shared<std::vector<std::vector<std::uint8_t>>>(
          std::move(perms));
  // one-line notation -> index, via mixed-radix rank
  auto rank = [k](const std::vector<std::uint8_t>& q) {
    std::size_t r = 0;
    for (int i = 0; i < k; ++i) {
      std::size_t smaller = 0;
      for (int j = i + 1; j < k; ++j) smaller += q[j] < q[i];
      std::size_t fact = 1;
      for (int f = 2; f <= k - 1 - i; ++f) fact *= static_cast<std::size_t>(f);
      r += smaller * fact;
    }
    return r;
  };

  FiniteGroup::Impl impl;
  impl.order = shared_perms->size();
  impl.identity = 0;
  impl.label = "S_" + std::to_string(k);
  impl.mul = [shared_perms, rank, k](FiniteGroup::Element x,
                                     FiniteGroup::Element y) {
    const auto& px = (*shared_perms)[x];
    const auto& py = (*shared_perms)[y];
    std::vector<std::uint8_t> comp(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) comp[static_cast<std::size_t>(i)] =
        px[py[static_cast<std::size_t>(i)]];  // (x*y)(i) = x(y(i))
    return static_cast<FiniteGroup::Element>(rank(comp));
  };
  impl.namer = [shared_perms](FiniteGroup::Element i) {
    std::string s = "(";
    for (std::size_t j = 0; j < (*shared_perms)[i].size(); ++j) {
      if (j) s += " ";
      s += std::to_string((*shared_perms)[i][j]);
    }
    return s + ")";
  };
  return FiniteGroup::from_impl(std::move(impl));
}

/// Direct product with componentwise multiplication. Pairs are ordered with
/// the second factor major: element index = b * |g| + a.
inline FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                                  std::size_t order_cap = 10000) {
  const std::size_t order = g.order() * h.order();
  if (order > order_cap) {
    throw std::invalid_argument("direct_product: order " +
                                std::to_string(order) + " exceeds cap " +
                                std::to_string(order_cap));
  }
  const std::uint32_t gn = static_cast<std::uint32_t>(g.order());
  FiniteGroup::Impl impl;
  impl.order = order;
  impl.identity = h.identity() * gn + g.identity();
  impl.label = g.label() + " x " + h.label();
  impl.mul = [g, h, gn](FiniteGroup::Element x, FiniteGroup::Element y) {
    const FiniteGroup::Element ax = x % gn, bx = x / gn;
    const FiniteGroup::Element ay = y % gn, by = y / gn;
    return h.multiply(bx, by) * gn + g.multiply(ax, ay);
  };
  impl.namer = [g, h, gn](FiniteGroup::Element x) {
    return "(" + g.element_name(x % gn) + ", " + h.element_name(x / gn) + ")";
  };
  return FiniteGroup::from_impl(std::move(impl));
}

struct GroupAxiomReport {
  bool identity_ok = false;
  bool inverses_ok = false;
  bool associativity_ok = false;
  bool all_ok() const { return identity_ok && inverses_ok && associativity_ok; }
};

/// Identity/inverse checks are always exhaustive. Associativity is
/// exhaustive for order <= 64 and sampled (>= 10^5 triples) above.
inline GroupAxiomReport verify_group_axioms(const FiniteGroup& g,
                                            std::uint64_t seed = 12345) {
  GroupAxiomReport rep;
  const std::size_t n = g.order();
  const FiniteGroup::Element e = g.identity();

  rep.identity_ok = true;
  for (FiniteGroup::Element x = 0; x < n; ++x) {
    rep.identity_ok &= g.multiply(e, x) == x && g.multiply(x, e) == x;
  }
  rep.inverses_ok = true;
  for (FiniteGroup::Element x = 0; x < n; ++x) {
    const FiniteGroup::Element y = g.inverse(x);
    rep.inverses_ok &= g.multiply(x, y) == e && g.multiply(y, x) == e;
  }
  rep.associativity_ok = true;
  auto check = [&](FiniteGroup::Element a, FiniteGroup::Element b,
                   FiniteGroup::Element c) {
    return g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c));
  };
  if (n <= 64) {
    for (FiniteGroup::Element a = 0; a < n && rep.associativity_ok; ++a) {
      for (FiniteGroup::Element b = 0; b < n && rep.associativity_ok; ++b) {
        for (FiniteGroup::Element c = 0; c < n; ++c) {
          if (!check(a, b, c)) {
            rep.associativity_ok = false;
            break;
          }
        }
      }
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(
        0, static_cast<std::uint32_t>(n - 1));
    for (int i = 0; i < 100000; ++i) {
      if (!check(dist(rng), dist(rng), dist(rng))) {
        rep.associativity_ok = false;
        break;
      }
    }
  }
  return rep;
}

}  // namespace noncomm
