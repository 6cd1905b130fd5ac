#include "crystbraid/orbits.hpp"

#include <algorithm>
#include <numeric>

#include "crystbraid/errors.hpp"

namespace cryst {

namespace {

// Representative of x mod m in {1..m}.
int bracket(int x, int m) { return ((x - 1) % m + m) % m + 1; }

struct LabeledOrbit {
  BasisLabel base;  // indices without t
  Orbit pairs;      // t = 1, 2, ...
};

// All closed-form orbits of delta(spec), in the order t = 1, 2, ...
std::vector<LabeledOrbit> formula_orbits(const BlockSpec& spec) {
  const int n = spec.strands();
  const int total = spec.total();
  std::vector<LabeledOrbit> out;

  for (int r = 1; r <= spec.count(); ++r) {
    const int k = spec.size(r);
    const int end = spec.offset(r) + k;
    for (int h = 1; h <= (k - 1) / 2; ++h) {
      LabeledOrbit o{{'a', {r, h}}, {}};
      for (int t = 1; t <= k; ++t) {
        if (t <= h)
          o.pairs.emplace_back(spec.offset(r) + h - t + 1, end - t + 1);
        else
          o.pairs.emplace_back(end - t + 1, end - t + 1 + h);
      }
      out.push_back(std::move(o));
    }
  }

  // Strand t of the block runs backwards under delta, like the first index in
  // the block-against-block case.
  for (int r = 1; r <= spec.count(); ++r) {
    const int k = spec.size(r);
    for (int j = total + 1; j <= n; ++j) {
      LabeledOrbit o{{'b', {r, j}}, {}};
      for (int t = 1; t <= k; ++t) o.pairs.emplace_back(spec.offset(r) + bracket(2 - t, k), j);
      out.push_back(std::move(o));
    }
  }

  for (int p = 1; p <= spec.count(); ++p) {
    for (int q = p + 1; q <= spec.count(); ++q) {
      const int kp = spec.size(p), kq = spec.size(q);
      const int l = std::lcm(kp, kq);
      for (int v = 1; v <= kp * kq / l; ++v) {
        LabeledOrbit o{{'c', {p, q, v}}, {}};
        for (int t = 1; t <= l; ++t)
          o.pairs.emplace_back(spec.offset(p) + bracket(2 - t, kp), spec.offset(q) + bracket(1 - t + v, kq));
        out.push_back(std::move(o));
      }
    }
  }

  for (int i = total + 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({{'d', {i, j}}, {Pair(i, j)}});
  return out;
}

}  // namespace

void OrbitTable::canonicalize() {
  for (auto& o : orbits) std::rotate(o.begin(), std::min_element(o.begin(), o.end()), o.end());
  std::sort(orbits.begin(), orbits.end(), [](const Orbit& a, const Orbit& b) { return a.front() < b.front(); });
}

std::vector<std::size_t> OrbitTable::lengths() const {
  std::vector<std::size_t> out;
  for (const auto& o : orbits) out.push_back(o.size());
  std::sort(out.rbegin(), out.rend());
  return out;
}

bool OrbitTable::is_partition() const {
  std::vector<int> hits(pair_count(n), 0);
  for (const auto& o : orbits)
    for (const Pair& p : o) {
      if (p.j > n) return false;
      ++hits[pair_index(n, p)];
    }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

std::string OrbitTable::to_string() const {
  std::string s;
  for (const auto& o : orbits) {
    for (std::size_t k = 0; k < o.size(); ++k) s += (k ? " -> {" : "{") + o[k].key() + "}";
    s += '\n';
  }
  return s;
}

OrbitTable enumerate_orbits(const Element& g) {
  OrbitTable table{g.strands(), g, pair_orbits(g.perm().inverse())};
  table.canonicalize();
  return table;
}

OrbitTable closed_form_orbits(const BlockSpec& spec) {
  OrbitTable table{spec.strands(), std::nullopt, {}};
  for (auto& o : formula_orbits(spec)) table.orbits.push_back(std::move(o.pairs));
  table.canonicalize();
  return table;
}

std::vector<Orbit> alpha_orbit_formula(int n) {
  if (n < 3) throw RangeError("alpha orbits need n >= 3");
  std::vector<Orbit> out;
  for (int j = 1; j <= (n - 1) / 2; ++j) {
    Orbit o;
    for (int i = 1; i <= n - j; ++i) o.emplace_back(i, i + j);
    for (int i = 1; i <= j; ++i) o.emplace_back(i, n - j + i);
    out.push_back(std::move(o));
  }
  if (n % 2 == 0) {
    Orbit o;
    for (int i = 1; i <= n / 2; ++i) o.emplace_back(i, n / 2 + i);
    out.push_back(std::move(o));
  }
  return out;
}

Pair alpha_basis_pair(int n, int i, int j) {
  if (n % 2 == 0 || i < 1 || i > (n - 1) / 2 || j < 1 || j > n) throw RangeError("e_{i,j} index out of range");
  return i + j <= n ? Pair(j, i + j) : Pair(i + j - n, j);
}

std::string BasisLabel::to_string() const {
  std::string s(1, type);
  s += '(';
  for (std::size_t k = 0; k < indices.size(); ++k) s += (k ? "," : "") + std::to_string(indices[k]);
  return s + ')';
}

RelabeledBasis::RelabeledBasis(int n, std::vector<std::pair<BasisLabel, Pair>> entries)
    : n_(n), entries_(std::move(entries)), by_pair_(pair_count(n), entries_.size()) {
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    auto& slot = by_pair_[pair_index(n_, entries_[k].second)];
    if (slot != entries_.size()) throw DomainError("pair {" + entries_[k].second.key() + "} labelled twice");
    slot = k;
  }
  if (std::find(by_pair_.begin(), by_pair_.end(), entries_.size()) != by_pair_.end())
    throw DomainError("relabeling misses a pair");
}

Pair RelabeledBasis::pair_of(const BasisLabel& label) const {
  for (const auto& [l, p] : entries_)
    if (l == label) return p;
  throw RangeError("no basis element " + label.to_string());
}

BasisLabel RelabeledBasis::label_of(const Pair& pair) const { return entries_[by_pair_[pair_index(n_, pair)]].first; }

RelabeledBasis relabeled_basis(const BlockSpec& spec) {
  std::vector<std::pair<BasisLabel, Pair>> entries;
  for (const auto& o : formula_orbits(spec)) {
    if (o.base.type == 'd') {
      entries.emplace_back(o.base, o.pairs.front());
      continue;
    }
    for (std::size_t t = 0; t < o.pairs.size(); ++t) {
      BasisLabel label = o.base;
      label.indices.push_back(static_cast<int>(t) + 1);
      entries.emplace_back(std::move(label), o.pairs[t]);
    }
  }
  return RelabeledBasis(spec.strands(), std::move(entries));
}

}  // namespace cryst
