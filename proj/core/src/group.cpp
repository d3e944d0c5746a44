#include "herbrand/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "herbrand/error.hpp"

namespace herbrand {

namespace {

[[noreturn]] void bad_structure(const std::string& what) { throw Error(ErrorCode::invalid_structure, what); }

}  // namespace

struct FiniteGroup::Impl {
  virtual ~Impl() = default;
  virtual std::size_t order() const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual Elem inv(Elem a) const = 0;
  virtual std::string label(Elem a) const { return std::to_string(a); }

  std::string name;
  std::vector<Elem> gens;
};

namespace {

struct TableImpl final : FiniteGroup::Impl {
  std::size_t n = 1;
  std::vector<Elem> table{0};
  std::vector<Elem> inverse{0};
  std::vector<std::string> labels{"e"};

  std::size_t order() const override { return n; }
  Elem mul(Elem a, Elem b) const override { return table[a * n + b]; }
  Elem inv(Elem a) const override { return inverse[a]; }
  std::string label(Elem a) const override { return labels[a]; }
};

struct PowerImpl final : FiniteGroup::Impl {
  FiniteGroup base;
  std::size_t k = 0;
  std::uint32_t radix = 1;
  std::size_t total = 1;
  std::vector<Elem> base_table;
  std::vector<Elem> base_inverse;

  std::size_t order() const override { return total; }
  Elem mul(Elem a, Elem b) const override {
    Elem r = 0, place = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const Elem da = a % radix, db = b % radix;
      a /= radix;
      b /= radix;
      r += base_table[da * radix + db] * place;
      place *= radix;
    }
    return r;
  }
  Elem inv(Elem a) const override {
    Elem r = 0, place = 1;
    for (std::size_t i = 0; i < k; ++i) {
      r += base_inverse[a % radix] * place;
      a /= radix;
      place *= radix;
    }
    return r;
  }
  std::string label(Elem a) const override {
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ",";
      s += base.label(a % radix);
      a /= radix;
    }
    return s + ")";
  }
};

struct SubgroupImpl final : FiniteGroup::Impl {
  FiniteGroup parent;
  std::vector<Elem> elements;
  std::vector<Elem> lookup;

  std::size_t order() const override { return elements.size(); }
  Elem mul(Elem a, Elem b) const override { return lookup[parent.mul(elements[a], elements[b])]; }
  Elem inv(Elem a) const override { return lookup[parent.inv(elements[a])]; }
  std::string label(Elem a) const override { return parent.label(elements[a]); }
};

std::vector<Elem> greedy_generators(const FiniteGroup& g, std::span<const Elem> elements) {
  const std::size_t n = g.order();
  std::vector<char> member(n, 0);
  member[0] = 1;
  std::vector<Elem> current{0};
  std::vector<Elem> gens;
  for (Elem x : elements) {
    if (member[x]) continue;
    gens.push_back(x);
    // Dimino: <C, x> is a union of right cosets C*r.
    const std::size_t old_size = current.size();
    std::vector<Elem> reps{0};
    auto add_coset = [&](Elem r) {
      reps.push_back(r);
      for (std::size_t i = 0; i < old_size; ++i) {
        const Elem y = g.mul(current[i], r);
        member[y] = 1;
        current.push_back(y);
      }
    };
    add_coset(x);
    for (std::size_t ri = 0; ri < reps.size(); ++ri) {
      for (Elem s : gens) {
        const Elem y = g.mul(reps[ri], s);
        if (!member[y]) add_coset(y);
      }
    }
  }
  return gens;
}


}  // namespace

FiniteGroup::FiniteGroup() : impl_(std::make_shared<TableImpl>()) {}

std::size_t FiniteGroup::order() const { return impl_->order(); }
Elem FiniteGroup::mul(Elem a, Elem b) const { return impl_->mul(a, b); }
Elem FiniteGroup::inv(Elem a) const { return impl_->inv(a); }
const std::string& FiniteGroup::name() const { return impl_->name; }
std::string FiniteGroup::label(Elem a) const { return impl_->label(a); }
const std::vector<Elem>& FiniteGroup::generators() const { return impl_->gens; }

bool FiniteGroup::is_abelian() const {
  const auto& gs = generators();
  for (Elem a : gs)
    for (Elem b : gs)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Elem FiniteGroup::pow(Elem a, std::int64_t k) const {
  if (k < 0) return pow(inv(a), -k);
  Elem r = identity();
  for (std::int64_t i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

std::uint32_t FiniteGroup::element_order(Elem a) const {
  std::uint32_t k = 1;
  for (Elem x = a; x != identity(); x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_power() const { return dynamic_cast<const PowerImpl*>(impl_.get()) != nullptr; }

const FiniteGroup& FiniteGroup::power_base() const {
  auto* p = dynamic_cast<const PowerImpl*>(impl_.get());
  if (!p) bad_structure("not a power group");
  return p->base;
}

std::size_t FiniteGroup::power_rank() const {
  auto* p = dynamic_cast<const PowerImpl*>(impl_.get());
  return p ? p->k : 1;
}

void FiniteGroup::decode(Elem a, std::span<Elem> coords) const {
  auto* p = dynamic_cast<const PowerImpl*>(impl_.get());
  if (!p) bad_structure("not a power group");
  for (std::size_t i = 0; i < p->k; ++i) {
    coords[i] = a % p->radix;
    a /= p->radix;
  }
}

Elem FiniteGroup::coordinate(Elem a, std::size_t i) const {
  auto* p = dynamic_cast<const PowerImpl*>(impl_.get());
  if (!p || i >= p->k) bad_structure("not a power group coordinate");
  for (std::size_t j = 0; j < i; ++j) a /= p->radix;
  return a % p->radix;
}

Elem FiniteGroup::encode(std::span<const Elem> coords) const {
  auto* p = dynamic_cast<const PowerImpl*>(impl_.get());
  if (!p) bad_structure("not a power group");
  Elem r = 0, place = 1;
  for (std::size_t i = 0; i < p->k; ++i) {
    r += coords[i] * place;
    place *= p->radix;
  }
  return r;
}

bool FiniteGroup::is_subgroup() const { return dynamic_cast<const SubgroupImpl*>(impl_.get()) != nullptr; }

Elem FiniteGroup::to_parent(Elem a) const {
  auto* s = dynamic_cast<const SubgroupImpl*>(impl_.get());
  return s ? s->elements[a] : a;
}

Elem FiniteGroup::from_parent(Elem parent_elem) const {
  auto* s = dynamic_cast<const SubgroupImpl*>(impl_.get());
  if (!s) return parent_elem;
  return parent_elem < s->lookup.size() ? s->lookup[parent_elem] : npos;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) bad_structure(name + ": empty table");
  for (const auto& row : table) {
    if (row.size() != n) bad_structure(name + ": table is not square");
    for (Elem v : row)
      if (v >= n) bad_structure(name + ": table entry out of range");
  }
  std::optional<Elem> id;
  for (Elem e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) id = e;
  }
  if (!id) bad_structure(name + ": no identity element");

  // Relabel so that the identity is 0.
  std::vector<Elem> relabel(n);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::swap(relabel[0], relabel[*id]);  // relabel is an involution

  auto impl = std::make_shared<TableImpl>();
  impl->name = std::move(name);
  impl->n = n;
  impl->table.assign(n * n, 0);
  impl->labels.resize(n);
  for (Elem a = 0; a < n; ++a) {
    impl->labels[a] = std::to_string(relabel[a]);
    for (Elem b = 0; b < n; ++b) impl->table[a * n + b] = relabel[table[relabel[a]][relabel[b]]];
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (impl->mul(impl->mul(a, b), c) != impl->mul(a, impl->mul(b, c))) {
          bad_structure(impl->name + ": multiplication is not associative");
        }
  impl->inverse.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem b = 0; b < n && !found; ++b) {
      if (impl->mul(a, b) == 0 && impl->mul(b, a) == 0) {
        impl->inverse[a] = b;
        found = true;
      }
    }
    if (!found) bad_structure(impl->name + ": element without inverse");
  }
  FiniteGroup g(impl);
  std::vector<Elem> all(n);
  std::iota(all.begin(), all.end(), 0);
  impl->gens = greedy_generators(g, all);
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators, std::string name) {
  if (generators.empty()) return FiniteGroup();
  const std::size_t deg = generators.front().size();
  std::vector<int> id(deg);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> elems{id};
  std::map<std::vector<int>, Elem> index{{id, 0}};
  // Breadth-first closure; compose as (p*q)(i) = q[p[i]] (apply p first).
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : generators) {
      std::vector<int> y(deg);
      for (std::size_t k = 0; k < deg; ++k) y[k] = s[elems[i][k]];
      if (index.emplace(y, static_cast<Elem>(elems.size())).second) elems.push_back(y);
    }
  }
  const std::size_t n = elems.size();
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> y(deg);
      for (std::size_t k = 0; k < deg; ++k) y[k] = elems[b][elems[a][k]];
      table[a][b] = index.at(y);
    }
  auto g = from_table(table, name);
  auto* impl = const_cast<TableImpl*>(static_cast<const TableImpl*>(g.impl_.get()));
  for (std::size_t a = 0; a < n; ++a) {
    std::string s = "[";
    for (std::size_t k = 0; k < deg; ++k) s += std::to_string(elems[a][k]);
    impl->labels[a] = s + "]";
  }
  return g;
}

FiniteGroup FiniteGroup::cyclic(std::uint32_t n) {
  if (n == 0) bad_structure("cyclic group of order 0");
  std::vector<std::vector<Elem>> table(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return from_table(table, "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::klein_four() {
  std::vector<std::vector<Elem>> table(4, std::vector<Elem>(4));
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) table[a][b] = a ^ b;
  return from_table(table, "V4");
}

FiniteGroup FiniteGroup::symmetric3() {
  return from_permutations({{1, 0, 2}, {1, 2, 0}}, "S3");
}

FiniteGroup FiniteGroup::dihedral4() {
  // Symmetries of the square with vertices 0,1,2,3 in cyclic order.
  return from_permutations({{1, 2, 3, 0}, {0, 3, 2, 1}}, "D4");
}

FiniteGroup FiniteGroup::power(const FiniteGroup& base, std::size_t k) {
  auto* table = dynamic_cast<const TableImpl*>(base.impl_.get());
  if (!table) bad_structure("power(): base must be a table group");
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= base.order();
    if (total > (std::size_t{1} << 31)) bad_structure("power(): group too large");
  }
  auto impl = std::make_shared<PowerImpl>();
  impl->name = base.name() + "^" + std::to_string(k);
  impl->base = base;
  impl->k = k;
  impl->radix = static_cast<std::uint32_t>(base.order());
  impl->total = total;
  impl->base_table = table->table;
  impl->base_inverse = table->inverse;
  Elem place = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (Elem s : base.generators()) impl->gens.push_back(s * place);
    place *= impl->radix;
  }
  return FiniteGroup(impl);
}

FiniteGroup FiniteGroup::subgroup_of(const FiniteGroup& parent, std::vector<Elem> elements, std::string name) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != 0) bad_structure(name + ": subgroup must contain the identity");
  auto impl = std::make_shared<SubgroupImpl>();
  impl->name = std::move(name);
  impl->parent = parent;
  impl->lookup.assign(parent.order(), npos);
  for (std::size_t i = 0; i < elements.size(); ++i) impl->lookup[elements[i]] = static_cast<Elem>(i);
  impl->elements = std::move(elements);
  FiniteGroup g(impl);
  if (impl->elements.size() == parent.order()) {
    impl->gens = parent.generators();
    return g;
  }
  std::vector<Elem> parent_gens = generators_of(parent, impl->elements);
  for (Elem s : parent_gens) {
    for (Elem t : parent_gens) {
      if (impl->lookup[parent.mul(s, t)] == npos) bad_structure(impl->name + ": not closed under multiplication");
    }
    if (impl->lookup[parent.inv(s)] == npos) bad_structure(impl->name + ": not closed under inverses");
  }
  if (closure(parent, parent_gens).size() != impl->elements.size()) {
    bad_structure(impl->name + ": element list is not a subgroup");
  }
  for (Elem s : parent_gens) impl->gens.push_back(impl->lookup[s]);
  return g;
}

bool FiniteGroup::is_table() const { return dynamic_cast<const TableImpl*>(impl_.get()) != nullptr; }

FiniteGroup FiniteGroup::materialized() const {
  if (is_table()) return *this;
  const std::size_t n = order();
  if (n > 4096) bad_structure(name() + ": too large to store as a table");
  auto impl = std::make_shared<TableImpl>();
  impl->name = name();
  impl->n = n;
  impl->table.resize(n * n);
  impl->inverse.resize(n);
  impl->labels.resize(n);
  for (Elem a = 0; a < n; ++a) {
    impl->inverse[a] = inv(a);
    impl->labels[a] = label(a);
    for (Elem b = 0; b < n; ++b) impl->table[a * n + b] = mul(a, b);
  }
  impl->gens = generators();
  return FiniteGroup(impl);
}

std::vector<Elem> closure(const FiniteGroup& g, std::span<const Elem> gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> out{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Elem s : gens) {
      const Elem y = g.mul(out[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> generators_of(const FiniteGroup& g, std::span<const Elem> elements) {
  std::vector<Elem> sorted(elements.begin(), elements.end());
  std::sort(sorted.begin(), sorted.end());
  return greedy_generators(g, sorted);
}

bool is_subgroup(const FiniteGroup& g, std::span<const Elem> elements) {
  std::vector<char> member(g.order(), 0);
  for (Elem x : elements) member[x] = 1;
  if (!member[0]) return false;
  for (Elem a : elements) {
    if (!member[g.inv(a)]) return false;
    for (Elem b : elements)
      if (!member[g.mul(a, b)]) return false;
  }
  return true;
}

bool is_normal(const FiniteGroup& g, std::span<const Elem> elements) {
  if (!is_subgroup(g, elements)) return false;
  std::vector<char> member(g.order(), 0);
  for (Elem x : elements) member[x] = 1;
  for (Elem x : g.generators())
    for (Elem n : elements)
      if (!member[g.mul(g.mul(x, n), g.inv(x))]) return false;
  return true;
}

std::vector<std::vector<Elem>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Elem>> found;
  for (Elem a = 0; a < g.order(); ++a) {
    const Elem gens[] = {a};
    found.insert(closure(g, gens));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Elem>> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        std::vector<Elem> gens = current[i];
        gens.insert(gens.end(), current[j].begin(), current[j].end());
        if (found.insert(closure(g, gens)).second) grew = true;
      }
  }
  std::vector<std::vector<Elem>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

Subgroup make_subgroup(const FiniteGroup& parent, std::span<const Elem> elements, std::string name) {
  if (!is_subgroup(parent, elements)) bad_structure(name + " is not a subgroup of " + parent.name());
  std::vector<Elem> emb(elements.begin(), elements.end());
  std::sort(emb.begin(), emb.end());
  std::vector<Elem> lookup(parent.order(), FiniteGroup::npos);
  for (std::size_t i = 0; i < emb.size(); ++i) lookup[emb[i]] = static_cast<Elem>(i);
  std::vector<std::vector<Elem>> table(emb.size(), std::vector<Elem>(emb.size()));
  for (std::size_t a = 0; a < emb.size(); ++a)
    for (std::size_t b = 0; b < emb.size(); ++b) table[a][b] = lookup[parent.mul(emb[a], emb[b])];
  auto group = FiniteGroup::from_table(table, std::move(name));
  return {std::move(group), std::move(emb)};
}

Quotient make_quotient(const FiniteGroup& g, std::span<const Elem> normal_subgroup) {
  if (!is_normal(g, normal_subgroup)) bad_structure("quotient by a subgroup that is not normal");
  const std::size_t n = g.order();
  std::vector<Elem> rep_of(n, FiniteGroup::npos);
  std::vector<Elem> section;
  for (Elem x = 0; x < n; ++x) {
    if (rep_of[x] != FiniteGroup::npos) continue;
    section.push_back(x);
    for (Elem m : normal_subgroup) rep_of[g.mul(x, m)] = x;
  }
  std::vector<Elem> projection(n);
  for (Elem x = 0; x < n; ++x) {
    projection[x] = static_cast<Elem>(std::lower_bound(section.begin(), section.end(), rep_of[x]) - section.begin());
  }
  const std::size_t q = section.size();
  std::vector<std::vector<Elem>> table(q, std::vector<Elem>(q));
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a][b] = projection[g.mul(section[a], section[b])];
  auto group = FiniteGroup::from_table(table, g.name() + "/N" + std::to_string(normal_subgroup.size()));
  return {std::move(group), std::move(projection), std::move(section)};
}

GGroup::GGroup(FiniteGroup acting, FiniteGroup coefficients, Action act)
    : acting_(std::move(acting)), coeff_(std::move(coefficients)), act_(std::move(act)) {
  const std::size_t ng = acting_.order(), na = coeff_.order();
  const auto& agens = coeff_.generators();
  for (Elem a = 0; a < na; ++a)
    if (act_(0, a) != a) bad_structure("identity of the acting group must act trivially");
  // x . (s b) = (x . s)(x . b) for generators s and all b makes x. a
  // homomorphism; compatibility on generators then gives an action.
  const bool exhaustive = ng * agens.size() * na <= 1'000'000;
  for (Elem x = 0; x < ng; ++x) {
    for (Elem s : agens) {
      if (exhaustive) {
        for (Elem b = 0; b < na; ++b)
          if (act_(x, coeff_.mul(s, b)) != coeff_.mul(act_(x, s), act_(x, b))) {
            bad_structure("acting element " + std::to_string(x) + " is not a homomorphism");
          }
      } else {
        for (Elem t : agens)
          if (act_(x, coeff_.mul(s, t)) != coeff_.mul(act_(x, s), act_(x, t))) {
            bad_structure("acting element " + std::to_string(x) + " is not a homomorphism");
          }
      }
      for (Elem y = 0; y < ng; ++y)
        if (act_(acting_.mul(x, y), s) != act_(x, act_(y, s))) bad_structure("action is not compatible with products");
    }
  }
  // A homomorphism with a two-sided inverse x^{-1} is an automorphism.
  for (Elem x = 0; x < ng; ++x)
    for (Elem s : agens)
      if (act_(acting_.inv(x), act_(x, s)) != s) bad_structure("acting element is not invertible");
}

GGroup GGroup::trivial_action(FiniteGroup acting, FiniteGroup coefficients) {
  return GGroup(std::move(acting), std::move(coefficients), [](Elem, Elem a) { return a; });
}

GGroup GGroup::twisted_by_sign(FiniteGroup acting, FiniteGroup coefficients, std::vector<int> sign,
                               std::vector<Elem> involution) {
  return GGroup(std::move(acting), std::move(coefficients),
                [sign = std::move(sign), inv = std::move(involution)](Elem x, Elem a) {
                  return sign[x] ? inv[a] : a;
                });
}

std::vector<Elem> inversion_map(const FiniteGroup& a) {
  std::vector<Elem> out(a.order());
  for (Elem x = 0; x < a.order(); ++x) out[x] = a.inv(x);
  return out;
}

std::vector<Elem> conjugation_map(const FiniteGroup& a, Elem by) {
  std::vector<Elem> out(a.order());
  for (Elem x = 0; x < a.order(); ++x) out[x] = a.mul(a.mul(by, x), a.inv(by));
  return out;
}

std::optional<std::vector<int>> sign_character(const FiniteGroup& g) {
  for (const auto& h : all_subgroups(g)) {
    if (2 * h.size() != g.order()) continue;
    std::vector<int> sign(g.order(), 1);
    for (Elem x : h) sign[x] = 0;
    return sign;
  }
  return std::nullopt;
}

}  // namespace herbrand
