#include "sdlkit/sdl.hpp"

#include <sstream>

#include "sdlkit/analyze.hpp"

namespace sdlkit {

GroupComponentFamily::GroupComponentFamily(FiniteDistributiveLattice lattice,
                                           std::vector<FiniteGroup> components)
    : lattice_(std::move(lattice)), components_(std::move(components)) {
  if (components_.size() != lattice_.size())
    throw std::invalid_argument("need exactly one group per lattice element");
}

std::size_t GroupComponentFamily::total_order() const {
  std::size_t n = 0;
  for (const auto& g : components_) n += g.order();
  return n;
}

void IsoFamily::set(Element from, Element to, HomMap map) {
  maps_.insert_or_assign(Key{from, to}, std::move(map));
}

bool IsoFamily::contains(Element from, Element to) const {
  return maps_.count(Key{from, to}) != 0;
}

const HomMap& IsoFamily::at(Element from, Element to) const {
  auto it = maps_.find(Key{from, to});
  if (it == maps_.end()) {
    std::ostringstream os;
    os << "no map for (" << from << "," << to << ")";
    throw std::out_of_range(os.str());
  }
  return it->second;
}

const char* to_string(IsoViolation::Kind kind) {
  switch (kind) {
    case IsoViolation::Kind::MissingKey: return "missing map";
    case IsoViolation::Kind::UnexpectedKey: return "unexpected map";
    case IsoViolation::Kind::NotHomomorphism: return "not a homomorphism";
    case IsoViolation::Kind::NotBijective: return "not an isomorphism";
    case IsoViolation::Kind::Sdl1: return "SDL1 violated";
    case IsoViolation::Kind::Sdl2: return "SDL2 violated";
  }
  return "unknown";
}

std::string IsoValidationReport::summary() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i) os << "; ";
    os << to_string(v.kind) << " at (";
    for (std::size_t j = 0; j < v.where.size(); ++j) os << (j ? "," : "") << v.where[j];
    os << ")";
    if (v.element) os << " element " << *v.element;
    if (!v.message.empty()) os << ": " << v.message;
  }
  return os.str();
}

namespace {

std::optional<Element> first_difference(const HomMap& a, const HomMap& b) {
  for (Element x = 0; x < a.source_size(); ++x)
    if (a(x) != b(x)) return x;
  return std::nullopt;
}

}  // namespace

IsoValidationReport validate_iso_family(const GroupComponentFamily& family, const IsoFamily& phi) {
  const auto& lattice = family.lattice();
  const std::size_t n = lattice.size();
  IsoValidationReport report;
  auto add = [&](IsoViolation::Kind kind, std::vector<Element> where,
                 std::optional<Element> element = std::nullopt, std::string message = {}) {
    report.violations.push_back({kind, std::move(where), element, std::move(message)});
  };

  for (const auto& [key, map] : phi.maps()) {
    const auto [alpha, beta] = key;
    if (alpha >= n || beta >= n || !lattice.leq(beta, alpha)) {
      add(IsoViolation::Kind::UnexpectedKey, {alpha, beta});
      continue;
    }
    if (map.source_size() != family.component(alpha).order() ||
        map.target_size() != family.component(beta).order()) {
      std::ostringstream os;
      os << "map (" << alpha << "," << beta << ") has sizes " << map.source_size() << "->"
         << map.target_size() << " but the components have orders "
         << family.component(alpha).order() << "->" << family.component(beta).order();
      throw std::invalid_argument(os.str());
    }
  }

  for (Element alpha = 0; alpha < n; ++alpha) {
    for (Element beta = 0; beta < n; ++beta) {
      if (!lattice.leq(beta, alpha)) continue;
      if (!phi.contains(alpha, beta)) {
        add(IsoViolation::Kind::MissingKey, {alpha, beta});
        continue;
      }
      const HomMap& f = phi.at(alpha, beta);
      if (auto v = is_homomorphism(f, family.component(alpha).op(), family.component(beta).op());
          !v)
        add(IsoViolation::Kind::NotHomomorphism, {alpha, beta}, v.witness[0], describe(v));
      if (!f.is_bijective()) add(IsoViolation::Kind::NotBijective, {alpha, beta});
      if (alpha == beta) {
        if (auto x = first_difference(f, HomMap::identity(f.source_size())))
          add(IsoViolation::Kind::Sdl1, {alpha, alpha}, x);
      }
    }
  }

  for (Element alpha = 0; alpha < n; ++alpha)
    for (Element beta = 0; beta < n; ++beta) {
      if (!lattice.leq(beta, alpha) || !phi.contains(alpha, beta)) continue;
      for (Element gamma = 0; gamma < n; ++gamma) {
        if (!lattice.leq(gamma, beta)) continue;
        if (!phi.contains(beta, gamma) || !phi.contains(alpha, gamma)) continue;
        const HomMap composite = phi.at(alpha, beta).then(phi.at(beta, gamma));
        if (auto x = first_difference(composite, phi.at(alpha, gamma)))
          add(IsoViolation::Kind::Sdl2, {alpha, beta, gamma}, x);
      }
    }
  return report;
}

IsoFamily derive_psi(const IsoFamily& phi) {
  IsoFamily psi;
  for (const auto& [key, map] : phi.maps()) {
    auto inv = map.inverse();
    if (!inv) {
      std::ostringstream os;
      os << "map (" << key.first << "," << key.second << ") is not bijective";
      throw std::invalid_argument(os.str());
    }
    psi.set(key.second, key.first, std::move(*inv));
  }
  return psi;
}

Verdict check_psi_family(const FiniteDistributiveLattice& lattice, const IsoFamily& psi) {
  const std::size_t n = lattice.size();
  for (Element alpha = 0; alpha < n; ++alpha) {
    if (!psi.contains(alpha, alpha)) return Verdict::fail("missing psi map", {alpha, alpha});
    const HomMap& f = psi.at(alpha, alpha);
    if (auto x = first_difference(f, HomMap::identity(f.source_size())))
      return Verdict::fail("psi not identity on the diagonal", {alpha, *x});
  }
  for (Element gamma = 0; gamma < n; ++gamma)
    for (Element beta = 0; beta < n; ++beta) {
      if (!lattice.leq(gamma, beta)) continue;
      for (Element alpha = 0; alpha < n; ++alpha) {
        if (!lattice.leq(beta, alpha)) continue;
        const HomMap composite = psi.at(gamma, beta).then(psi.at(beta, alpha));
        if (auto x = first_difference(composite, psi.at(gamma, alpha)))
          return Verdict::fail("psi composition violated", {gamma, beta, alpha, *x});
      }
    }
  return Verdict::ok();
}

Verdict check_compatibility(const FiniteDistributiveLattice& lattice, const IsoFamily& phi,
                            const IsoFamily& psi) {
  const std::size_t n = lattice.size();
  for (Element alpha = 0; alpha < n; ++alpha)
    for (Element beta = 0; beta < n; ++beta) {
      const Element lo = lattice.meet(alpha, beta);
      const Element hi = lattice.join(alpha, beta);
      for (Element gamma = 0; gamma < n; ++gamma) {
        if (!lattice.leq(gamma, lo)) continue;
        const HomMap down_up = phi.at(alpha, gamma).then(psi.at(gamma, beta));
        for (Element delta = 0; delta < n; ++delta) {
          if (!lattice.leq(hi, delta)) continue;
          const HomMap up_down = psi.at(alpha, delta).then(phi.at(delta, beta));
          if (auto x = first_difference(down_up, up_down))
            return Verdict::fail("compatibility violated", {alpha, beta, gamma, delta, *x});
        }
      }
    }
  return Verdict::ok();
}

Verdict check_compatibility(const GroupComponentFamily& family, const IsoFamily& phi) {
  return check_compatibility(family.lattice(), phi, derive_psi(phi));
}

Verdict check_clause_iii(const FiniteDistributiveLattice& lattice, const IsoFamily& phi,
                         const IsoFamily& psi) {
  const std::size_t n = lattice.size();
  for (Element alpha = 0; alpha < n; ++alpha)
    for (Element beta = 0; beta < n; ++beta) {
      const Element lo = lattice.meet(alpha, beta);
      const Element hi = lattice.join(alpha, beta);
      const HomMap down_up = phi.at(alpha, lo).then(psi.at(lo, beta));
      for (Element delta = 0; delta < n; ++delta) {
        if (!lattice.leq(hi, delta)) continue;
        const HomMap up_down = psi.at(alpha, delta).then(phi.at(delta, beta));
        if (auto x = first_difference(down_up, up_down))
          return Verdict::fail("clause (iii) violated", {alpha, beta, delta, *x});
      }
    }
  return Verdict::ok();
}

std::vector<Element> component_offsets(const GroupComponentFamily& family) {
  std::vector<Element> offsets(family.lattice().size());
  Element next = 0;
  for (Element alpha = 0; alpha < offsets.size(); ++alpha) {
    offsets[alpha] = next;
    next += family.component(alpha).order();
  }
  return offsets;
}

SemiringTable build_strong_sdl(const GroupComponentFamily& family, const IsoFamily& phi,
                               const BuildOptions& options) {
  if (auto report = validate_iso_family(family, phi); !report.ok())
    throw BuildError("invalid connecting family: " + report.summary(), report);

  const auto& lattice = family.lattice();
  const IsoFamily psi = derive_psi(phi);
  const auto offsets = component_offsets(family);
  const std::size_t n = family.total_order();

  std::vector<Label> labels;
  labels.reserve(n);
  for (Element alpha = 0; alpha < lattice.size(); ++alpha)
    for (Element g = 0; g < family.component(alpha).order(); ++g) labels.push_back({alpha, g});

  auto mul = BinaryOpTable::from_function(n, [&](Element x, Element y) {
    const auto [a, gx] = labels[x];
    const auto [b, gy] = labels[y];
    const Element m = lattice.meet(a, b);
    return offsets[m] + family.component(m)(phi.at(a, m)(gx), phi.at(b, m)(gy));
  });
  auto add = BinaryOpTable::from_function(n, [&](Element x, Element y) {
    const auto [a, gx] = labels[x];
    const auto [b, gy] = labels[y];
    const Element j = lattice.join(a, b);
    if (options.flavor == AddFlavor::LeftZero) return offsets[j] + psi.at(a, j)(gx);
    return offsets[j] + psi.at(b, j)(gy);
  });

  SemiringTable s{std::move(add), std::move(mul), std::move(labels)};
  if (options.self_check) {
    if (auto v = check_semiring(s.add, s.mul); !v)
      throw BuildError("constructed tables are not a semiring: " + describe(v));
    if (auto v = check_component_closure(s, lattice); !v)
      throw BuildError("constructed tables break component closure: " + describe(v));
  }
  return s;
}

Verdict check_component_closure(const SemiringTable& s, const FiniteDistributiveLattice& lattice) {
  if (!s.labeling) return Verdict::fail("no component labeling");
  const auto& labels = *s.labeling;
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y) {
      const Element a = labels[x].component;
      const Element b = labels[y].component;
      if (labels[s.mul(x, y)].component != lattice.meet(a, b))
        return Verdict::fail("product leaves the meet component", {x, y});
      if (labels[s.add(x, y)].component != lattice.join(a, b))
        return Verdict::fail("sum leaves the join component", {x, y});
    }
  return Verdict::ok();
}

}  // namespace sdlkit
