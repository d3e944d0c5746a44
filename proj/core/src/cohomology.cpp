#include "herbrand/cohomology.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "herbrand/error.hpp"

namespace herbrand {

namespace {

constexpr Elem kUnset = FiniteGroup::npos;
constexpr std::size_t kNoLeaf = static_cast<std::size_t>(-1);

[[noreturn]] void bad_structure(const std::string& what) { throw Error(ErrorCode::invalid_structure, what); }

// One step of the cocycle extension along a Cayley-graph edge x -> x*s:
// alpha(x s) = alpha(x) (x . alpha(s)). A `check` edge lands on an element
// that already has a value, which must agree.
struct Edge {
  Elem x;
  std::uint32_t gen;
  Elem y;
  bool check;
};

struct Node {
  std::vector<Elem> gen_values;
  Cocycle values;
  bool stab_is_all = false;
  std::vector<Elem> stab;  // sorted; unused when stab_is_all
  std::vector<Elem> stab_gens;
  std::map<Elem, std::size_t> children;
  std::size_t leaf = kNoLeaf;
};

}  // namespace

struct H1PointedSet::Data {
  GGroup module;
  std::vector<Elem> gens;                // generators s_1..s_k of the acting group
  std::vector<std::vector<Edge>> plans;  // plans[l] extends from <s_1..s_l> to <s_1..s_{l+1}>
  std::vector<Node> nodes;               // search tree, nodes[0] is the root
  std::vector<Cocycle> classes;
  std::vector<std::size_t> leaf_to_class;
  std::uint64_t cocycles = 0;

  explicit Data(GGroup m) : module(std::move(m)) {}

  Elem twist_value(std::uint32_t level, Elem value, Elem a) const {
    const auto& A = module.coefficients();
    return A.mul(A.mul(A.inv(a), value), module.act(gens[level], a));
  }

  bool extend(std::uint32_t level, const Node& parent, Elem candidate, Cocycle& out,
              std::vector<Elem>& gen_values) const {
    const auto& A = module.coefficients();
    out = parent.values;
    gen_values = parent.gen_values;
    gen_values.push_back(candidate);
    for (const auto& e : plans[level]) {
      const Elem v = A.mul(out[e.x], module.act(e.x, gen_values[e.gen]));
      if (e.check) {
        if (out[e.y] != v) return false;
      } else {
        out[e.y] = v;
      }
    }
    return true;
  }
};

namespace {

std::vector<std::vector<Edge>> make_plans(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::vector<std::vector<Edge>> plans;
  std::vector<char> assigned(g.order(), 0);
  assigned[0] = 1;
  std::vector<Elem> members{0};  // elements of <s_1..s_l>
  for (std::uint32_t l = 0; l < gens.size(); ++l) {
    std::vector<Edge> plan;
    std::set<std::pair<Elem, std::uint32_t>> done;
    const std::size_t old_count = members.size();
    std::vector<char> in_old(g.order(), 0);
    for (Elem x : members) in_old[x] = 1;
    // Powers of the new generator first: the relation s^n = 1 fails fast.
    Elem x = 0;
    while (true) {
      const Elem y = g.mul(x, gens[l]);
      done.insert({x, l});
      if (assigned[y]) {
        plan.push_back({x, l, y, true});
        break;
      }
      plan.push_back({x, l, y, false});
      assigned[y] = 1;
      members.push_back(y);
      x = y;
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Elem m = members[i];
      for (std::uint32_t s = 0; s <= l; ++s) {
        if (i < old_count && in_old[m] && s < l) continue;  // verified at an earlier level
        if (done.count({m, s})) continue;
        done.insert({m, s});
        const Elem y = g.mul(m, gens[s]);
        if (assigned[y]) {
          plan.push_back({m, s, y, true});
        } else {
          plan.push_back({m, s, y, false});
          assigned[y] = 1;
          members.push_back(y);
        }
      }
    }
    plans.push_back(std::move(plan));
  }
  if (members.size() != g.order()) bad_structure("generators do not generate the acting group");
  return plans;
}

}  // namespace

H1PointedSet enumerate_h1(const GGroup& m, const H1Options& options) {
  auto data = std::make_shared<H1PointedSet::Data>(m);
  const auto& g = m.acting();
  const auto& A = m.coefficients();
  const std::size_t na = A.order();
  data->gens = g.generators();
  data->plans = make_plans(g, data->gens);
  const auto k = static_cast<std::uint32_t>(data->gens.size());

  Node root;
  root.values.assign(g.order(), kUnset);
  root.values[0] = A.identity();
  root.stab_is_all = true;
  root.stab_gens = A.generators();
  data->nodes.push_back(std::move(root));

  std::vector<std::size_t> frontier{0};
  std::uint64_t spent = 0;
  std::vector<std::uint8_t> state(na);
  Cocycle scratch;
  std::vector<Elem> scratch_gens;
  for (std::uint32_t level = 0; level < k; ++level) {
    const std::uint64_t needed = spent + frontier.size() * static_cast<std::uint64_t>(na);
    if (needed > options.budget) {
      throw Error(ErrorCode::budget_exceeded, "H1 enumeration over " + A.name() + " needs at least " +
                                                  std::to_string(needed) + " candidate evaluations (budget " +
                                                  std::to_string(options.budget) + ")");
    }
    spent = needed;
    std::vector<std::size_t> next;
    for (std::size_t node_index : frontier) {
      // Candidates for alpha(s_{level+1}) that extend to a cocycle on the
      // larger subgroup. The stabiliser of the earlier values permutes them.
      std::fill(state.begin(), state.end(), 0);
      for (Elem c = 0; c < na; ++c) {
        if (data->extend(level, data->nodes[node_index], c, scratch, scratch_gens)) state[c] = 1;
      }
      for (Elem c = 0; c < na; ++c) {
        if (state[c] != 1) continue;
        const Node& parent = data->nodes[node_index];
        // Orbit of c; c is its smallest element because scanning is ascending.
        std::vector<Elem> orbit{c};
        state[c] = 2;
        for (std::size_t i = 0; i < orbit.size(); ++i) {
          for (Elem a : parent.stab_gens) {
            const Elem d = data->twist_value(level, orbit[i], a);
            if (state[d] == 0) bad_structure("cocycle set is not stable under twisting");
            if (state[d] == 1) {
              state[d] = 2;
              orbit.push_back(d);
            }
          }
        }
        Node child;
        data->extend(level, parent, c, child.values, child.gen_values);
        auto fixes = [&](Elem a) { return data->twist_value(level, c, a) == c; };
        if (parent.stab_is_all) {
          for (Elem a = 0; a < na; ++a)
            if (fixes(a)) child.stab.push_back(a);
        } else {
          for (Elem a : parent.stab)
            if (fixes(a)) child.stab.push_back(a);
        }
        child.stab_gens = generators_of(A, child.stab);
        const std::size_t child_index = data->nodes.size();
        data->nodes[node_index].children.emplace(c, child_index);
        data->nodes.push_back(std::move(child));
        next.push_back(child_index);
      }
      // Only the leaves need their stabiliser lists.
      std::vector<Elem>().swap(data->nodes[node_index].stab);
    }
    frontier = std::move(next);
  }

  // Leaves: complete cocycles, one per class.
  std::vector<std::size_t> leaves = frontier;
  std::vector<std::size_t> order(leaves.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return data->nodes[leaves[a]].values < data->nodes[leaves[b]].values;
  });
  data->leaf_to_class.assign(leaves.size(), 0);
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const auto& leaf = data->nodes[leaves[order[rank]]];
    if (!is_cocycle(m, leaf.values)) bad_structure("enumerated representative fails the cocycle identity");
    data->classes.push_back(leaf.values);
    data->leaf_to_class[order[rank]] = rank;
  }
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    auto& leaf = data->nodes[leaves[i]];
    leaf.leaf = i;
    const std::size_t stab_size = leaf.stab_is_all ? na : leaf.stab.size();
    data->cocycles += na / stab_size;
    std::vector<Elem>().swap(leaf.stab);
  }
  return H1PointedSet(std::move(data));
}

std::size_t H1PointedSet::size() const { return data_->classes.size(); }
const std::vector<Cocycle>& H1PointedSet::classes() const { return data_->classes; }
std::uint64_t H1PointedSet::cocycle_count() const { return data_->cocycles; }
const GGroup& H1PointedSet::module() const { return data_->module; }

std::size_t H1PointedSet::classify(const Cocycle& c) const {
  const auto& m = data_->module;
  const auto& A = m.coefficients();
  if (!is_cocycle(m, c)) bad_structure("classify(): argument is not a cocycle");
  Cocycle current = c;
  std::size_t node = 0;
  for (std::uint32_t level = 0; level < data_->gens.size(); ++level) {
    const Node& n = data_->nodes[node];
    const Elem start = current[data_->gens[level]];
    // Orbit of the next generator value under the stabiliser of the earlier
    // ones, remembering which element reaches each point.
    std::unordered_map<Elem, Elem> reach{{start, A.identity()}};
    std::vector<Elem> queue{start};
    Elem best = start;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Elem v = queue[i];
      const Elem t = reach.at(v);
      for (Elem a : n.stab_gens) {
        const Elem d = data_->twist_value(level, v, a);
        if (reach.emplace(d, A.mul(t, a)).second) {
          queue.push_back(d);
          best = std::min(best, d);
        }
      }
    }
    current = twist(m, current, reach.at(best));
    auto it = n.children.find(best);
    if (it == n.children.end()) bad_structure("classify(): cocycle not found in the search tree");
    node = it->second;
  }
  return data_->leaf_to_class[data_->nodes[node].leaf];
}

bool is_cocycle(const GGroup& m, const Cocycle& c) {
  const auto& g = m.acting();
  const auto& A = m.coefficients();
  if (c.size() != g.order()) return false;
  for (Elem v : c)
    if (v >= A.order()) return false;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (c[g.mul(x, y)] != A.mul(c[x], m.act(x, c[y]))) return false;
  return true;
}

Cocycle twist(const GGroup& m, const Cocycle& c, Elem a) {
  const auto& A = m.coefficients();
  const Elem a_inv = A.inv(a);
  Cocycle out(c.size());
  for (Elem x = 0; x < c.size(); ++x) out[x] = A.mul(A.mul(a_inv, c[x]), m.act(x, a));
  return out;
}

Elem InducedGroup::evaluate(Elem f, Elem x) const {
  return base.act(h_part[x], module.coefficients().coordinate(f, coset_of[x]));
}

InducedGroup induce(const FiniteGroup& g, const Subgroup& h, const GGroup& m) {
  if (m.acting().order() != h.group.order()) {
    throw Error(ErrorCode::invalid_structure, "induce(): module is not a module for the given subgroup");
  }
  if (!is_subgroup(g, h.embedding)) throw Error(ErrorCode::invalid_structure, "induce(): h is not a subgroup of g");
  const std::size_t n = g.order();
  std::vector<std::uint32_t> coset_of(n, kUnset);
  std::vector<Elem> h_part(n, 0);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset_of[x] != kUnset) continue;
    const auto idx = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Elem i = 0; i < h.group.order(); ++i) {
      const Elem y = g.mul(h.embedding[i], x);
      coset_of[y] = idx;
      h_part[y] = i;
    }
  }
  const std::size_t k = reps.size();
  if (k > 64) throw Error(ErrorCode::invalid_structure, "induce(): index too large");

  // Base module over a table group with the same indices.
  GGroup base(m.acting(), m.coefficients().materialized(), m.action());
  auto power = FiniteGroup::power(base.coefficients(), k);

  // (y.f)(x_i) = f(x_i y) = h'.f(x_j) where x_i y = h' x_j.
  struct Step {
    std::uint32_t from;
    Elem h;
  };
  auto steps = std::make_shared<std::vector<Step>>(n * k);
  for (Elem y = 0; y < n; ++y)
    for (std::size_t i = 0; i < k; ++i) {
      const Elem z = g.mul(reps[i], y);
      (*steps)[y * k + i] = {coset_of[z], h_part[z]};
    }
  auto action = [steps, power, base, k](Elem y, Elem f) {
    Elem in[64], out[64];
    power.decode(f, std::span<Elem>(in, k));
    for (std::size_t i = 0; i < k; ++i) {
      const auto& st = (*steps)[y * k + i];
      out[i] = base.act(st.h, in[st.from]);
    }
    return power.encode(std::span<const Elem>(out, k));
  };
  GGroup module(g, power, action);
  return {base, std::move(module), std::move(reps), std::move(coset_of), std::move(h_part)};
}

FiniteGroup fixed_points(const GGroup& m, std::span<const Elem> subgroup) {
  const auto gens = generators_of(m.acting(), subgroup);
  const auto& A = m.coefficients();
  std::vector<Elem> fixed;
  for (Elem a = 0; a < A.order(); ++a) {
    bool ok = true;
    for (Elem n : gens) {
      if (m.act(n, a) != a) {
        ok = false;
        break;
      }
    }
    if (ok) fixed.push_back(a);
  }
  return FiniteGroup::subgroup_of(A, std::move(fixed), A.name() + "^N");
}

GGroup quotient_module(const GGroup& m, const Quotient& q, const FiniteGroup& fixed) {
  return GGroup(q.group, fixed, [m, section = q.section, fixed](Elem x, Elem a) {
    return fixed.from_parent(m.act(section[x], fixed.to_parent(a)));
  });
}

namespace {

using ImageFn = std::function<std::optional<std::size_t>(const Cocycle&)>;

// Maps every class of `source` through `image`, checking that the result
// does not depend on the representative. Returns an error description, or
// an empty string.
std::string map_classes(const H1PointedSet& source, const ImageFn& image, const CheckOptions& options,
                        std::vector<std::size_t>& images) {
  const auto& m = source.module();
  const auto& A = m.coefficients();
  images.clear();
  for (std::size_t i = 0; i < source.size(); ++i) {
    const auto& rep = source.classes()[i];
    const auto target = image(rep);
    if (!target) return "image of class " + std::to_string(i) + " is not a cocycle";
    auto same = [&](const Cocycle& other) -> bool {
      const auto t = image(other);
      return t && *t == *target;
    };
    if (A.order() <= options.exhaustive_limit) {
      std::set<Cocycle> seen{rep};
      std::vector<Cocycle> queue{rep};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        for (Elem a : A.generators()) {
          auto next = twist(m, queue[q], a);
          if (seen.insert(next).second) {
            if (!same(next)) {
              return "class " + std::to_string(i) + ": cohomologous cocycles map to different classes";
            }
            queue.push_back(std::move(next));
          }
        }
      }
    } else {
      std::mt19937_64 rng(options.seed + i);
      std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(A.order() - 1));
      std::vector<Elem> probes(A.generators());
      for (int r = 0; r < 32; ++r) probes.push_back(pick(rng));
      for (Elem a : probes) {
        if (!same(twist(m, rep, a))) {
          return "class " + std::to_string(i) + ": twist by element " + std::to_string(a) +
                 " changes the image class";
        }
      }
    }
    images.push_back(*target);
  }
  return {};
}

std::string injectivity_failure(const std::vector<std::size_t>& images) {
  std::map<std::size_t, std::size_t> first;
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto [it, fresh] = first.emplace(images[i], i);
    if (!fresh) {
      return "classes " + std::to_string(it->second) + " and " + std::to_string(i) + " both map to class " +
             std::to_string(images[i]);
    }
  }
  return {};
}

std::string surjectivity_failure(const std::vector<std::size_t>& images, std::size_t target_size) {
  std::vector<char> hit(target_size, 0);
  for (auto t : images) hit[t] = 1;
  for (std::size_t t = 0; t < target_size; ++t)
    if (!hit[t]) return "target class " + std::to_string(t) + " is not in the image";
  return {};
}

CheckResult compare_bijective(const H1PointedSet& lhs, const H1PointedSet& rhs, const ImageFn& image,
                              const CheckOptions& options) {
  CheckResult r;
  r.lhs_size = lhs.size();
  r.rhs_size = rhs.size();
  std::vector<std::size_t> images;
  r.detail = map_classes(lhs, image, options, images);
  if (r.detail.empty() && images[lhs.distinguished()] != rhs.distinguished()) {
    r.detail = "distinguished point is not preserved";
  }
  if (r.detail.empty()) r.detail = injectivity_failure(images);
  if (r.detail.empty()) r.detail = surjectivity_failure(images, rhs.size());
  r.passed = r.detail.empty();
  return r;
}

std::vector<Elem> intersect_subgroup(const Subgroup& h, std::span<const Elem> normal) {
  std::set<Elem> in(normal.begin(), normal.end());
  std::vector<Elem> out;
  for (Elem i = 0; i < h.group.order(); ++i)
    if (in.count(h.embedding[i])) out.push_back(i);
  return out;
}

}  // namespace

CheckResult shapiro_check(const FiniteGroup& g, const Subgroup& h, const GGroup& m, const CheckOptions& options) {
  const auto ind = induce(g, h, m);
  const auto lhs = enumerate_h1(ind.module, options.h1);
  const auto rhs = enumerate_h1(m, options.h1);
  const ImageFn image = [&](const Cocycle& alpha) -> std::optional<std::size_t> {
    Cocycle beta(h.group.order());
    for (Elem s = 0; s < h.group.order(); ++s) beta[s] = ind.evaluate(alpha[h.embedding[s]], g.identity());
    if (!is_cocycle(m, beta)) return std::nullopt;
    return rhs.classify(beta);
  };
  return compare_bijective(lhs, rhs, image, options);
}

CheckResult inflation_injectivity_check(const FiniteGroup& g, std::span<const Elem> normal_subgroup,
                                        const GGroup& m, const CheckOptions& options) {
  if (!is_normal(g, normal_subgroup)) {
    throw Error(ErrorCode::invalid_structure, "inflation: subgroup is not normal");
  }
  const auto q = make_quotient(g, normal_subgroup);
  const auto fixed = fixed_points(m, normal_subgroup);
  const auto quotient = quotient_module(m, q, fixed);
  const auto lhs = enumerate_h1(quotient, options.h1);
  const auto rhs = enumerate_h1(m, options.h1);
  const ImageFn image = [&](const Cocycle& alpha) -> std::optional<std::size_t> {
    Cocycle inflated(g.order());
    for (Elem x = 0; x < g.order(); ++x) inflated[x] = fixed.to_parent(alpha[q.projection[x]]);
    if (!is_cocycle(m, inflated)) return std::nullopt;
    return rhs.classify(inflated);
  };
  CheckResult r;
  r.lhs_size = lhs.size();
  r.rhs_size = rhs.size();
  std::vector<std::size_t> images;
  r.detail = map_classes(lhs, image, options, images);
  if (r.detail.empty() && images[lhs.distinguished()] != rhs.distinguished()) {
    r.detail = "distinguished point is not preserved";
  }
  if (r.detail.empty()) r.detail = injectivity_failure(images);
  r.passed = r.detail.empty();
  return r;
}

CheckResult submodule_lemma_check(const FiniteGroup& j, const Subgroup& h, std::span<const Elem> normal_subgroup,
                                  const GGroup& m, const CheckOptions& /*options*/) {
  if (!is_normal(j, normal_subgroup)) throw Error(ErrorCode::invalid_structure, "submodule lemma: A is not normal");
  const auto ind = induce(j, h, m);
  const auto lhs = fixed_points(ind.module, normal_subgroup);
  const auto q = make_quotient(j, normal_subgroup);

  const auto b = intersect_subgroup(h, normal_subgroup);
  const auto mb = fixed_points(m, b);
  std::vector<Elem> image_of_h;
  for (Elem i = 0; i < h.group.order(); ++i) image_of_h.push_back(q.projection[h.embedding[i]]);
  std::sort(image_of_h.begin(), image_of_h.end());
  image_of_h.erase(std::unique(image_of_h.begin(), image_of_h.end()), image_of_h.end());
  const auto hq = make_subgroup(q.group, image_of_h, "H/B");
  std::vector<Elem> lift(hq.group.order(), kUnset);
  for (Elem i = 0; i < h.group.order(); ++i) {
    const auto pos = static_cast<std::size_t>(
        std::lower_bound(hq.embedding.begin(), hq.embedding.end(), q.projection[h.embedding[i]]) -
        hq.embedding.begin());
    if (lift[pos] == kUnset) lift[pos] = i;
  }
  const GGroup mb_module(hq.group, mb, [m, mb, lift](Elem x, Elem a) {
    return mb.from_parent(m.act(lift[x], mb.to_parent(a)));
  });
  const auto rhs = induce(q.group, hq, mb_module);
  const auto& rhs_group = rhs.module.coefficients();

  CheckResult r;
  r.lhs_size = lhs.order();
  r.rhs_size = rhs_group.order();
  const std::size_t k = rhs.coset_reps.size();
  std::vector<Elem> coords(k);
  auto phi = [&](Elem f) -> Elem {
    const Elem full = lhs.to_parent(f);
    for (std::size_t i = 0; i < k; ++i) {
      const Elem v = mb.from_parent(ind.evaluate(full, q.section[rhs.coset_reps[i]]));
      if (v == FiniteGroup::npos) return FiniteGroup::npos;
      coords[i] = v;
    }
    return rhs_group.encode(coords);
  };
  auto fail = [&](std::string why) {
    r.detail = std::move(why);
    r.passed = false;
    return r;
  };
  if (lhs.order() != rhs_group.order()) {
    return fail("orders differ: " + std::to_string(lhs.order()) + " vs " + std::to_string(rhs_group.order()));
  }
  std::vector<Elem> images(lhs.order());
  std::vector<char> hit(rhs_group.order(), 0);
  for (Elem f = 0; f < lhs.order(); ++f) {
    const Elem img = phi(f);
    if (img == FiniteGroup::npos) return fail("f(x) leaves M^B for f = " + lhs.label(f));
    if (hit[img]) return fail("two fixed maps have the same image " + rhs_group.label(img));
    hit[img] = 1;
    images[f] = img;
    const Elem full = lhs.to_parent(f);
    for (Elem x = 0; x < j.order(); ++x) {
      if (ind.evaluate(full, x) != mb.to_parent(rhs.evaluate(img, q.projection[x]))) {
        return fail("F(xA) != f(x) at x = " + j.label(x));
      }
    }
  }
  for (Elem s : lhs.generators())
    for (Elem f = 0; f < lhs.order(); ++f)
      if (images[lhs.mul(s, f)] != rhs_group.mul(images[s], images[f])) return fail("map is not a homomorphism");
  for (Elem x : j.generators()) {
    for (Elem f = 0; f < lhs.order(); ++f) {
      const Elem moved = lhs.from_parent(ind.module.act(x, lhs.to_parent(f)));
      if (moved == FiniteGroup::npos) return fail("fixed points are not stable under J");
      if (images[moved] != rhs.module.act(q.projection[x], images[f])) {
        return fail("map does not commute with the J/A-action at x = " + j.label(x));
      }
    }
  }
  r.passed = true;
  return r;
}

CheckResult refined_shapiro_check(const FiniteGroup& g, const Subgroup& h, std::span<const Elem> normal_subgroup,
                                  const GGroup& m, const CheckOptions& options) {
  if (!is_normal(g, normal_subgroup)) throw Error(ErrorCode::invalid_structure, "refined Shapiro: N is not normal");
  const auto ind = induce(g, h, m);
  const auto fixed = fixed_points(ind.module, normal_subgroup);
  const auto q = make_quotient(g, normal_subgroup);
  const auto lhs_module = quotient_module(ind.module, q, fixed);

  const auto b = intersect_subgroup(h, normal_subgroup);
  const auto qh = make_quotient(h.group, b);
  const auto mb = fixed_points(m, b);
  const auto rhs_module = quotient_module(m, qh, mb);

  // eta: h/(h n N) -> g/N must be injective.
  std::vector<Elem> eta(qh.group.order());
  for (Elem c = 0; c < qh.group.order(); ++c) eta[c] = q.projection[h.embedding[qh.section[c]]];
  {
    std::set<Elem> distinct(eta.begin(), eta.end());
    if (distinct.size() != eta.size()) {
      CheckResult r;
      r.detail = "eta: h/(h n N) -> g/N is not injective";
      return r;
    }
  }

  const auto lhs = enumerate_h1(lhs_module, options.h1);
  const auto rhs = enumerate_h1(rhs_module, options.h1);
  const ImageFn image = [&](const Cocycle& alpha) -> std::optional<std::size_t> {
    Cocycle beta(qh.group.order());
    for (Elem c = 0; c < qh.group.order(); ++c) {
      const Elem v = mb.from_parent(ind.evaluate(fixed.to_parent(alpha[eta[c]]), g.identity()));
      if (v == FiniteGroup::npos) return std::nullopt;
      beta[c] = v;
    }
    if (!is_cocycle(rhs_module, beta)) return std::nullopt;
    return rhs.classify(beta);
  };
  return compare_bijective(lhs, rhs, image, options);
}

}  // namespace herbrand
