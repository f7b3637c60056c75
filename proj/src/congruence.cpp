// czx - exact arithmetic for the extended bicyclic semigroup and its extensions

#include "czx/congruence.hpp"

#include <map>
#include <numeric>
#include <string>

namespace czx {

  namespace {
    std::uint64_t magnitude(std::int64_t x) noexcept {
      return x < 0 ? ~static_cast<std::uint64_t>(x) + 1
                   : static_cast<std::uint64_t>(x);
    }

    std::int64_t residue(std::int64_t v, std::uint64_t k) {
      auto r = magnitude(v) % k;
      if (v < 0 && r != 0) {
        r = k - r;
      }
      if (r > static_cast<std::uint64_t>(INT64_MAX)) {
        throw OverflowError("residue does not fit in 64 bits");
      }
      return static_cast<std::int64_t>(r);
    }

    std::vector<std::uint32_t> canonical_labels(
        std::vector<std::uint32_t> const& raw) {
      std::map<std::uint32_t, std::uint32_t> relabel;
      std::vector<std::uint32_t>             out(raw.size());
      for (std::size_t i = 0; i < raw.size(); ++i) {
        auto const next = static_cast<std::uint32_t>(relabel.size());
        out[i]          = relabel.try_emplace(raw[i], next).first->second;
      }
      return out;
    }

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n), _size(n, 1) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }

      std::uint32_t find(std::uint32_t x) noexcept {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      // Returns (root, absorbed) or (x, x) if already joined.
      std::pair<std::uint32_t, std::uint32_t> unite(std::uint32_t x,
                                                    std::uint32_t y) noexcept {
        x = find(x);
        y = find(y);
        if (x == y) {
          return {x, x};
        }
        if (_size[x] < _size[y]) {
          std::swap(x, y);
        }
        _parent[y] = x;
        _size[x] += _size[y];
        return {x, y};
      }

     private:
      std::vector<std::uint32_t> _parent;
      std::vector<std::uint32_t> _size;
    };

    // Windows wider than this make the product tables unreasonably large.
    constexpr std::size_t max_saturation_width = 64;
  }  // namespace

  bool related(CongruenceSpec const& spec, Cz x, Cz y) {
    if (spec.kind == CongruenceSpec::Kind::identity) {
      return x == y;
    }
    auto const d = checked::sub(index(x), index(y));
    if (spec.k == 0) {
      return d == 0;
    }
    return residue(d, spec.k) == 0;
  }

  std::int64_t quotient_map(std::uint64_t k, Cz x) {
    auto const i = index(x);
    return k == 0 ? i : residue(i, k);
  }

  std::uint64_t gcd(std::int64_t x, std::int64_t y) {
    return std::gcd(magnitude(x), magnitude(y));
  }

  CongruenceSpec congruence_from_pairs(std::span<CzPair const> gens) {
    bool          trivial = true;
    std::uint64_t g       = 0;
    for (auto const& [x, y] : gens) {
      if (x != y) {
        trivial = false;
      }
      g = std::gcd(g, magnitude(checked::sub(index(x), index(y))));
    }
    return trivial ? CongruenceSpec::identity() : CongruenceSpec::sigma(g);
  }

  std::uint64_t cyclic_generator(std::int64_t n, std::int64_t k) {
    if (k <= 0) {
      throw DomainError("cyclic_generator: the subgroup kZ must be "
                        "non-trivial, got k = "
                        + std::to_string(k));
    }
    return gcd(n, k);
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(Window w, std::vector<std::uint32_t> labels)
      : _window(w), _labels(), _classes(0) {
    if (labels.size() != w.size()) {
      throw DomainError("partition labels do not match the window size");
    }
    _labels = canonical_labels(labels);
    for (auto l : _labels) {
      _classes = std::max<std::size_t>(_classes, l + 1);
    }
  }

  bool Partition::same_class(Cz x, Cz y) const {
    if (!_window.contains(x) || !_window.contains(y)) {
      throw DomainError("same_class: element outside the partition window");
    }
    return _labels[_window.position(x)] == _labels[_window.position(y)];
  }

  std::vector<std::vector<Cz>> Partition::classes() const {
    std::vector<std::vector<Cz>> out(_classes);
    for (std::size_t i = 0; i < _labels.size(); ++i) {
      out[_labels[i]].push_back(_window.at(i));
    }
    return out;
  }

  Partition Partition::restrict(Window const& sub) const {
    if (!_window.contains(sub.lo()) || !_window.contains(sub.hi())) {
      throw DomainError("restrict: sub-window not contained in the window");
    }
    std::vector<std::uint32_t> labels;
    labels.reserve(sub.size());
    for (auto const& x : sub.elements()) {
      labels.push_back(_labels[_window.position(x)]);
    }
    return Partition(sub, std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Saturation
  ////////////////////////////////////////////////////////////////////////

  // Congruence closure restricted to the window. Every class root r keeps,
  // for each multiplier u, one in-window product of a member of r with u
  // (right[r * n + u] for r·u, left[r * n + u] for u·r). When two classes
  // merge, their representative products for the same u must be related,
  // which is queued; at the fixpoint all in-window products of a class by
  // a fixed u lie in one class.
  WindowSaturator::WindowSaturator(Window const& w) : _window(w) {
    if (w.width() > max_saturation_width) {
      throw DomainError("saturate_window: window wider than "
                        + std::to_string(max_saturation_width));
    }
    std::size_t const n = w.size();
    _right.resize(n * n);
    _left.resize(n * n);
    auto const elts = w.elements();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t u = 0; u < n; ++u) {
        Cz const p       = multiply(elts[x], elts[u]);
        auto     pos     = w.contains(p) ? static_cast<std::int32_t>(w.position(p))
                                         : -1;
        _right[x * n + u] = pos;
        _left[u * n + x]  = pos;
      }
    }
  }

  Partition WindowSaturator::saturate(std::span<CzPair const> gens) const {
    auto const& w = _window;
    for (auto const& [x, y] : gens) {
      if (!w.contains(x) || !w.contains(y)) {
        throw DomainError("saturate_window: generator outside the window");
      }
    }
    std::size_t const n = w.size();

    // Row r of each table holds, for the class rooted at r, the position of
    // one in-window product of a member with u, or -1 if there is none.
    auto                                                 right = _right;
    auto                                                 left  = _left;
    UnionFind                                            uf(n);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> queue;
    for (auto const& [x, y] : gens) {
      queue.emplace_back(w.position(x), w.position(y));
    }
    while (!queue.empty()) {
      auto const [p, q] = queue.back();
      queue.pop_back();
      auto const [root, gone] = uf.unite(p, q);
      if (root == gone) {
        continue;
      }
      for (auto* table : {&right, &left}) {
        auto* kept    = table->data() + std::size_t(root) * n;
        auto* dropped = table->data() + std::size_t(gone) * n;
        for (std::size_t u = 0; u < n; ++u) {
          if (dropped[u] < 0) {
            continue;
          }
          if (kept[u] < 0) {
            kept[u] = dropped[u];
          } else {
            queue.emplace_back(kept[u], dropped[u]);
          }
        }
      }
    }

    std::vector<std::uint32_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = uf.find(static_cast<std::uint32_t>(i));
    }
    return Partition(w, std::move(labels));
  }

  Partition saturate_window(std::span<CzPair const> gens, Window const& w) {
    for (auto const& [x, y] : gens) {
      if (!w.contains(x) || !w.contains(y)) {
        throw DomainError("saturate_window: generator outside the window");
      }
    }
    return WindowSaturator(w).saturate(gens);
  }

  Partition congruence_partition(CongruenceSpec const& spec, Window const& w) {
    auto const                 elts = w.elements();
    std::vector<std::uint32_t> labels(elts.size());
    if (spec.kind == CongruenceSpec::Kind::identity) {
      std::iota(labels.begin(), labels.end(), 0);
      return Partition(w, std::move(labels));
    }
    std::map<std::int64_t, std::uint32_t> first;
    for (std::size_t i = 0; i < elts.size(); ++i) {
      auto const [it, fresh] = first.try_emplace(
          quotient_map(spec.k, elts[i]), static_cast<std::uint32_t>(i));
      labels[i] = it->second;
    }
    return Partition(w, std::move(labels));
  }

}  // namespace czx
