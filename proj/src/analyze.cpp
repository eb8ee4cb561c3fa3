#include "sdlkit/analyze.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sdlkit {

Verdict check_semiring(const BinaryOpTable& add, const BinaryOpTable& mul) {
  if (add.size() != mul.size())
    throw std::invalid_argument("addition and multiplication tables have different sizes");
  if (auto v = check_associative(add); !v) return Verdict::fail("addition not associative", v.witness);
  if (auto v = check_associative(mul); !v)
    return Verdict::fail("multiplication not associative", v.witness);
  const std::size_t n = add.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (mul(x, add(y, z)) != add(mul(x, y), mul(x, z)))
          return Verdict::fail("left distributivity violated", {x, y, z});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (mul(add(x, y), z) != add(mul(x, z), mul(y, z)))
          return Verdict::fail("right distributivity violated", {x, y, z});
  return Verdict::ok();
}

std::vector<Element> multiplicative_idempotents(const BinaryOpTable& mul) {
  std::vector<Element> e;
  for (Element x = 0; x < mul.size(); ++x)
    if (mul(x, x) == x) e.push_back(x);
  return e;
}

IdempotentLattice idempotent_subsemiring(const BinaryOpTable& add, const BinaryOpTable& mul,
                                         const std::vector<Element>& idempotents) {
  IdempotentLattice out{idempotents, std::nullopt, Verdict::ok()};
  if (idempotents.empty()) {
    out.verdict = Verdict::fail("no multiplicative idempotents");
    return out;
  }
  std::vector<bool> in_e(add.size(), false);
  for (Element e : idempotents) in_e[e] = true;
  for (Element e : idempotents)
    for (Element f : idempotents) {
      if (!in_e[add(e, f)]) {
        out.verdict = Verdict::fail("idempotents not closed under addition", {e, f});
        return out;
      }
      if (!in_e[mul(e, f)]) {
        out.verdict = Verdict::fail("idempotents not closed under multiplication", {e, f});
        return out;
      }
    }
  auto join = add.restrict_to(idempotents);
  auto meet = mul.restrict_to(idempotents);
  if (auto v = check_distributive_lattice(*join, *meet); !v) {
    // Report carrier elements rather than positions in E(S).
    for (auto& w : v.witness) w = idempotents[w];
    out.verdict = v;
    return out;
  }
  out.lattice = FiniteDistributiveLattice::from_tables(std::move(*join), std::move(*meet));
  return out;
}

namespace {

using Subset = std::vector<bool>;

// Groups elements by equal keys; class ids in order of first occurrence.
std::vector<Element> classes_by_key(const std::vector<Subset>& keys) {
  std::map<Subset, Element> ids;
  std::vector<Element> cls(keys.size());
  for (Element x = 0; x < keys.size(); ++x) {
    auto [it, inserted] = ids.try_emplace(keys[x], ids.size());
    cls[x] = it->second;
  }
  return cls;
}

}  // namespace

std::vector<std::vector<Element>> h_classes(const BinaryOpTable& mul) {
  const std::size_t n = mul.size();
  std::vector<Subset> right(n, Subset(n, false)), left(n, Subset(n, false));
  for (Element x = 0; x < n; ++x) {
    right[x][x] = left[x][x] = true;
    for (Element s = 0; s < n; ++s) {
      right[x][mul(x, s)] = true;
      left[x][mul(s, x)] = true;
    }
  }
  const auto r = classes_by_key(right);
  const auto l = classes_by_key(left);

  std::map<std::pair<Element, Element>, Element> ids;
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < n; ++x) {
    auto [it, inserted] = ids.try_emplace({r[x], l[x]}, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(x);
  }
  return classes;
}

Verdict is_clifford(const BinaryOpTable& mul) {
  if (auto v = check_associative(mul); !v) return v;
  for (const auto& cls : h_classes(mul)) {
    const bool has_idempotent =
        std::any_of(cls.begin(), cls.end(), [&](Element x) { return mul(x, x) == x; });
    if (!has_idempotent) return Verdict::fail("element not in a subgroup", {cls.front()});
  }
  for (Element e : multiplicative_idempotents(mul))
    for (Element x = 0; x < mul.size(); ++x)
      if (mul(e, x) != mul(x, e)) return Verdict::fail("idempotent not central", {e, x});
  return Verdict::ok();
}

Verdict is_left_normal_band(const BinaryOpTable& add) {
  if (auto v = check_associative(add); !v) return v;
  if (auto v = check_idempotent(add); !v) return v;
  const std::size_t n = add.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (add(add(x, y), z) != add(add(x, z), y))
          return Verdict::fail("not left normal", {x, y, z});
  return Verdict::ok();
}

Verdict is_right_normal_band(const BinaryOpTable& add) {
  if (auto v = check_associative(add); !v) return v;
  if (auto v = check_idempotent(add); !v) return v;
  const std::size_t n = add.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (add(add(x, y), z) != add(add(y, x), z))
          return Verdict::fail("not right normal", {x, y, z});
  return Verdict::ok();
}

Verdict is_normal_band(const BinaryOpTable& add) {
  if (auto v = check_associative(add); !v) return v;
  if (auto v = check_idempotent(add); !v) return v;
  const std::size_t n = add.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        for (Element w = 0; w < n; ++w)
          if (add(add(add(x, y), z), w) != add(add(add(x, z), y), w))
            return Verdict::fail("not normal", {x, y, z, w});
  return Verdict::ok();
}

Verdict is_flavored_normal_band(const BinaryOpTable& add, AddFlavor flavor) {
  return flavor == AddFlavor::LeftZero ? is_left_normal_band(add) : is_right_normal_band(add);
}

std::map<Element, std::vector<Element>> ComponentDecomposition::as_map() const {
  std::map<Element, std::vector<Element>> m;
  for (std::size_t i = 0; i < idempotents.size(); ++i) m[idempotents[i]] = members[i];
  return m;
}

ComponentDecomposition decompose_components(const BinaryOpTable& mul) {
  if (auto v = is_clifford(mul); !v)
    throw std::invalid_argument("not a Clifford semigroup: " + describe(v));
  ComponentDecomposition d;
  d.idempotents = multiplicative_idempotents(mul);
  d.members.resize(d.idempotents.size());
  d.component_of.assign(mul.size(), 0);
  d.position.assign(mul.size(), 0);

  std::vector<Element> index_of(mul.size(), 0);
  for (std::size_t i = 0; i < d.idempotents.size(); ++i) index_of[d.idempotents[i]] = i;
  for (const auto& cls : h_classes(mul)) {
    const auto e = std::find_if(cls.begin(), cls.end(), [&](Element x) { return mul(x, x) == x; });
    const Element i = index_of[*e];
    d.members[i] = cls;
    for (std::size_t p = 0; p < cls.size(); ++p) {
      d.component_of[cls[p]] = i;
      d.position[cls[p]] = p;
    }
  }
  return d;
}

Verdict check_decomposition_closure(const BinaryOpTable& add, const BinaryOpTable& mul,
                                    const ComponentDecomposition& components,
                                    const FiniteDistributiveLattice& e_lattice) {
  const auto& c = components.component_of;
  for (Element x = 0; x < mul.size(); ++x)
    for (Element y = 0; y < mul.size(); ++y) {
      if (c[mul(x, y)] != e_lattice.meet(c[x], c[y]))
        return Verdict::fail("product leaves the meet component", {x, y});
      if (c[add(x, y)] != e_lattice.join(c[x], c[y]))
        return Verdict::fail("sum leaves the join component", {x, y});
    }
  return Verdict::ok();
}

Recovery recover_connecting_maps(const SemiringTable& s, const ComponentDecomposition& components,
                                 const FiniteDistributiveLattice& e_lattice, AddFlavor flavor) {
  Recovery out;
  const std::size_t k = components.idempotents.size();
  if (e_lattice.size() != k)
    throw std::invalid_argument("idempotent lattice does not match the decomposition");

  for (Element i = 0; i < k; ++i) {
    const auto& members = components.members[i];
    auto group_table = s.mul.restrict_to(members);
    auto add_table = s.add.restrict_to(members);
    if (!group_table || !add_table) {
      out.verdict = Verdict::fail("component not closed", {components.idempotents[i]});
      return out;
    }
    auto g = check_group(*group_table);
    if (!g.group) {
      out.verdict = Verdict::fail("component is not a group", {components.idempotents[i]});
      return out;
    }
    if (*add_table != zero_band(members.size(), flavor)) {
      out.verdict = Verdict::fail(std::string("component addition is not ") +
                                      (flavor == AddFlavor::LeftZero ? "left" : "right") + "-zero",
                                  {components.idempotents[i]});
      return out;
    }
    out.groups.push_back(std::move(*g.group));
  }

  auto local_in = [&](Element x, Element comp) -> std::optional<Element> {
    if (components.component_of[x] != comp) return std::nullopt;
    return components.position[x];
  };

  for (Element alpha = 0; alpha < k; ++alpha)
    for (Element beta = 0; beta < k; ++beta) {
      if (!e_lattice.leq(beta, alpha)) continue;
      const Element e_alpha = components.idempotents[alpha];
      const Element e_beta = components.idempotents[beta];
      std::vector<Element> down, up;
      for (Element x : components.members[alpha]) {
        auto p = local_in(s.mul(x, e_beta), beta);
        if (!p) {
          out.verdict = Verdict::fail("x·e_β leaves G_β", {alpha, beta, x});
          return out;
        }
        down.push_back(*p);
      }
      for (Element y : components.members[beta]) {
        const Element sum = flavor == AddFlavor::LeftZero ? s.add(y, e_alpha) : s.add(e_alpha, y);
        auto p = local_in(sum, alpha);
        if (!p) {
          out.verdict = Verdict::fail("y+e_α leaves G_α", {beta, alpha, y});
          return out;
        }
        up.push_back(*p);
      }
      out.phi.set(alpha, beta, HomMap(components.members[beta].size(), std::move(down)));
      out.psi.set(beta, alpha, HomMap(components.members[alpha].size(), std::move(up)));
    }

  for (const auto& [key, f] : out.phi.maps()) {
    if (!f.is_bijective()) {
      std::ostringstream os;
      os << "not strong: φ is not an isomorphism (|G| = " << f.source_size() << " -> "
         << f.target_size() << ")";
      out.verdict = Verdict::fail(os.str(), {key.first, key.second});
      return out;
    }
  }

  GroupComponentFamily family(e_lattice, out.groups);
  if (auto report = validate_iso_family(family, out.phi); !report.ok()) {
    const auto& first = report.violations.front();
    out.verdict = Verdict::fail("not strong: " + report.summary(), first.where);
    return out;
  }
  const IsoFamily inverse = derive_psi(out.phi);
  for (const auto& [key, f] : out.psi.maps()) {
    if (f != inverse.at(key.first, key.second)) {
      out.verdict = Verdict::fail("not strong: ψ is not the inverse of φ", {key.first, key.second});
      return out;
    }
  }
  if (auto v = check_psi_family(e_lattice, out.psi); !v) {
    out.verdict = Verdict::fail("not strong: " + v.reason, v.witness);
    return out;
  }

  // Every sum and product must factor through the connecting maps.
  auto to_carrier = [&](Element comp, Element local) { return components.members[comp][local]; };
  const auto& c = components.component_of;
  const auto& pos = components.position;
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y) {
      const Element m = e_lattice.meet(c[x], c[y]);
      const Element j = e_lattice.join(c[x], c[y]);
      const Element xd = to_carrier(m, out.phi.at(c[x], m)(pos[x]));
      const Element yd = to_carrier(m, out.phi.at(c[y], m)(pos[y]));
      if (s.mul(x, y) != s.mul(xd, yd)) {
        out.verdict = Verdict::fail("not strong: product does not factor through φ", {x, y});
        return out;
      }
      const Element xu = to_carrier(j, out.psi.at(c[x], j)(pos[x]));
      const Element yu = to_carrier(j, out.psi.at(c[y], j)(pos[y]));
      if (s.add(x, y) != s.add(xu, yu)) {
        out.verdict = Verdict::fail("not strong: sum does not factor through ψ", {x, y});
        return out;
      }
    }
  out.verdict = Verdict::ok();
  return out;
}

ComponentIsomorphisms component_isomorphisms(const FiniteDistributiveLattice& e_lattice,
                                             const Recovery& recovery) {
  ComponentIsomorphisms out{{}, Verdict::ok()};
  if (!recovery.verdict) {
    out.verdict = Verdict::fail("connecting maps were not recovered");
    return out;
  }
  const std::size_t k = e_lattice.size();
  for (Element alpha = 0; alpha < k; ++alpha)
    for (Element beta = 0; beta < k; ++beta) {
      const Element j = e_lattice.join(alpha, beta);
      HomMap f = recovery.psi.at(alpha, j).then(recovery.phi.at(j, beta));
      if (!f.is_bijective()) {
        out.verdict = Verdict::fail("composite is not bijective", {alpha, beta});
        return out;
      }
      if (auto v = is_homomorphism(f, recovery.groups[alpha].op(), recovery.groups[beta].op());
          !v) {
        out.verdict = Verdict::fail("composite is not a homomorphism", {alpha, beta});
        return out;
      }
      out.maps.set(alpha, beta, std::move(f));
    }
  return out;
}

namespace {

bool extend_isomorphism(const FiniteDistributiveLattice& a, const FiniteDistributiveLattice& b,
                        const std::vector<std::size_t>& down_a,
                        const std::vector<std::size_t>& down_b, std::vector<Element>& f,
                        std::vector<bool>& used, Element i) {
  const std::size_t n = a.size();
  if (i == n) return true;
  for (Element v = 0; v < n; ++v) {
    if (used[v] || down_a[i] != down_b[v]) continue;
    f[i] = v;
    bool consistent = true;
    for (Element p = 0; p <= i && consistent; ++p)
      for (Element q = 0; q <= i && consistent; ++q) {
        if (p != i && q != i && a.join(p, q) != i && a.meet(p, q) != i) continue;
        const Element jn = a.join(p, q);
        const Element mt = a.meet(p, q);
        if (jn <= i && f[jn] != b.join(f[p], f[q])) consistent = false;
        if (mt <= i && f[mt] != b.meet(f[p], f[q])) consistent = false;
      }
    if (!consistent) continue;
    used[v] = true;
    if (extend_isomorphism(a, b, down_a, down_b, f, used, i + 1)) return true;
    used[v] = false;
  }
  return false;
}

std::vector<std::size_t> downset_sizes(const FiniteDistributiveLattice& l) {
  std::vector<std::size_t> d(l.size(), 0);
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y)
      if (l.leq(y, x)) ++d[x];
  return d;
}

}  // namespace

std::optional<std::vector<Element>> lattice_isomorphism(const FiniteDistributiveLattice& a,
                                                        const FiniteDistributiveLattice& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::vector<Element> f(a.size(), 0);
  std::vector<bool> used(b.size(), false);
  if (!extend_isomorphism(a, b, downset_sizes(a), downset_sizes(b), f, used, 0))
    return std::nullopt;
  return f;
}

AnalysisReport full_analysis(const BinaryOpTable& add, const BinaryOpTable& mul,
                             AddFlavor flavor) {
  AnalysisReport r;
  r.flavor = flavor;
  r.is_semiring = check_semiring(add, mul);
  if (!r.is_semiring) return r;

  r.idempotents = multiplicative_idempotents(mul);
  r.is_normal_band_add = is_flavored_normal_band(add, flavor);
  r.is_plain_normal_band_add = is_normal_band(add);
  r.is_clifford_mul = is_clifford(mul);
  if (!*r.is_clifford_mul) return r;

  r.components = decompose_components(mul);
  r.idempotent_lattice = idempotent_subsemiring(add, mul, *r.idempotents);
  if (!r.idempotent_lattice->lattice) return r;

  const auto& e_lattice = *r.idempotent_lattice->lattice;
  r.component_closure = check_decomposition_closure(add, mul, *r.components, e_lattice);
  if (!*r.component_closure) return r;

  r.recovery = recover_connecting_maps({add, mul, std::nullopt}, *r.components, e_lattice, flavor);
  r.is_strong_sdl_of_group_semirings = r.recovery->verdict.holds;
  return r;
}

bool ConnectingTheoremReport::all() const {
  return idempotents.holds && addition_degenerate.holds && maps_are_translations.holds &&
         phi_composes.holds && mutually_inverse.holds && compatibility.holds;
}

namespace {

// Carrier index of every (component, local element) of a labelled semiring.
std::vector<std::vector<Element>> carrier_index(const SemiringTable& s,
                                                const GroupComponentFamily& family) {
  std::vector<std::vector<Element>> idx(family.lattice().size());
  for (Element a = 0; a < idx.size(); ++a) idx[a].assign(family.component(a).order(), 0);
  const auto& labels = *s.labeling;
  for (Element x = 0; x < s.size(); ++x) idx[labels[x].component][labels[x].element] = x;
  return idx;
}

}  // namespace

ConnectingTheoremReport check_connecting_theorem(const SemiringTable& s,
                                                 const GroupComponentFamily& family,
                                                 const IsoFamily& phi, AddFlavor flavor) {
  if (!s.labeling || s.size() != family.total_order())
    throw std::invalid_argument("theorem checks need the labelled construction of the family");
  const auto& lattice = family.lattice();
  const auto& labels = *s.labeling;
  const std::size_t k = lattice.size();
  const auto idx = carrier_index(s, family);
  auto e = [&](Element a) { return idx[a][family.component(a).identity()]; };
  auto sum = [&](Element x, Element y) { return flavor == AddFlavor::LeftZero ? s.add(x, y) : s.add(y, x); };

  ConnectingTheoremReport rep;

  for (Element a = 0; a < k && rep.idempotents; ++a)
    for (Element b = 0; b < k; ++b) {
      if (!lattice.leq(b, a)) continue;
      if (s.mul(e(a), e(b)) != e(b)) {
        rep.idempotents = Verdict::fail("e_α e_β != e_β", {a, b});
        break;
      }
      if (sum(e(a), e(b)) != e(a)) {
        rep.idempotents = Verdict::fail("e_α + e_β != e_α", {a, b});
        break;
      }
    }

  for (Element x = 0; x < s.size() && rep.addition_degenerate; ++x)
    for (Element y = 0; y < s.size() && rep.addition_degenerate; ++y)
      for (Element y2 = 0; y2 < s.size(); ++y2) {
        if (labels[y].component != labels[y2].component) continue;
        if (sum(x, y) != sum(x, y2)) {
          rep.addition_degenerate = Verdict::fail("x+y != x+y'", {x, y, y2});
          break;
        }
      }

  // Maps read off the tables: φ̂_{α,β}(g) = g·e_β, ψ̂_{β,α}(g) = g+e_α.
  const IsoFamily psi = derive_psi(phi);
  IsoFamily phi_hat, psi_hat;
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) {
      if (!lattice.leq(b, a)) continue;
      std::vector<Element> down, up;
      for (Element g = 0; g < family.component(a).order(); ++g) {
        const Label l = labels[s.mul(idx[a][g], e(b))];
        if (rep.maps_are_translations && l != Label{b, phi.at(a, b)(g)})
          rep.maps_are_translations = Verdict::fail("x·e_β != φ_{α,β}(x)", {a, b, g});
        down.push_back(l.component == b ? l.element : 0);
      }
      for (Element g = 0; g < family.component(b).order(); ++g) {
        const Label l = labels[sum(idx[b][g], e(a))];
        if (rep.maps_are_translations && l != Label{a, psi.at(b, a)(g)})
          rep.maps_are_translations = Verdict::fail("y+e_α != ψ_{β,α}(y)", {b, a, g});
        up.push_back(l.component == a ? l.element : 0);
      }
      phi_hat.set(a, b, HomMap(family.component(b).order(), std::move(down)));
      psi_hat.set(b, a, HomMap(family.component(a).order(), std::move(up)));
    }

  for (Element a = 0; a < k && rep.phi_composes; ++a)
    for (Element b = 0; b < k && rep.phi_composes; ++b) {
      if (!lattice.leq(b, a)) continue;
      for (Element c = 0; c < k; ++c) {
        if (!lattice.leq(c, b)) continue;
        if (phi_hat.at(a, b).then(phi_hat.at(b, c)) != phi_hat.at(a, c)) {
          rep.phi_composes = Verdict::fail("φ_{α,β}φ_{β,γ} != φ_{α,γ}", {a, b, c});
          break;
        }
      }
    }

  for (const auto& [key, f] : phi_hat.maps()) {
    const HomMap& g = psi_hat.at(key.second, key.first);
    if (f.then(g) != HomMap::identity(f.source_size()) ||
        g.then(f) != HomMap::identity(g.source_size())) {
      rep.mutually_inverse = Verdict::fail("φ and ψ not mutually inverse", {key.first, key.second});
      break;
    }
  }

  rep.compatibility = check_compatibility(lattice, phi_hat, psi_hat);
  return rep;
}

Verdict verify_round_trip(const GroupComponentFamily& family, const IsoFamily& phi,
                          AddFlavor flavor) {
  const SemiringTable s = build_strong_sdl(family, phi, {true, flavor});
  const AnalysisReport r = full_analysis(s.add, s.mul, flavor);
  if (!r.is_strong_sdl_of_group_semirings)
    return Verdict::fail("analysis stopped before classification");
  if (!*r.is_strong_sdl_of_group_semirings)
    return Verdict::fail("analysis did not classify the construction as strong: " +
                         describe(r.recovery->verdict));

  const auto& lattice = family.lattice();
  const auto& comps = *r.components;
  const auto& e_lattice = *r.idempotent_lattice->lattice;
  const std::size_t k = lattice.size();
  if (comps.idempotents.size() != k) return Verdict::fail("|E(S)| != |D|");

  // α ↦ e_α, as a map into E(S) lattice indices.
  const auto offsets = component_offsets(family);
  std::vector<Element> to_e(k);
  for (Element a = 0; a < k; ++a) {
    const Element e = offsets[a] + family.component(a).identity();
    auto it = std::find(comps.idempotents.begin(), comps.idempotents.end(), e);
    if (it == comps.idempotents.end()) return Verdict::fail("e_α is not idempotent", {a});
    to_e[a] = static_cast<Element>(it - comps.idempotents.begin());
  }
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b)
      if (to_e[lattice.join(a, b)] != e_lattice.join(to_e[a], to_e[b]) ||
          to_e[lattice.meet(a, b)] != e_lattice.meet(to_e[a], to_e[b]))
        return Verdict::fail("α ↦ e_α is not a lattice isomorphism", {a, b});

  for (Element a = 0; a < k; ++a) {
    const auto& members = comps.members[to_e[a]];
    if (members.size() != family.component(a).order())
      return Verdict::fail("component order differs", {a});
    for (Element g = 0; g < members.size(); ++g)
      if (members[g] != offsets[a] + g) return Verdict::fail("component members differ", {a, g});
  }

  const IsoFamily psi = derive_psi(phi);
  const auto& rec = *r.recovery;
  for (const auto& [key, f] : phi.maps()) {
    const auto [a, b] = key;
    if (rec.phi.at(to_e[a], to_e[b]) != f) return Verdict::fail("recovered φ differs", {a, b});
    if (rec.psi.at(to_e[b], to_e[a]) != psi.at(b, a))
      return Verdict::fail("recovered ψ differs", {b, a});
  }
  return Verdict::ok();
}

}  // namespace sdlkit
