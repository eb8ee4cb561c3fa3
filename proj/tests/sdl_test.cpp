#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sdlkit/analyze.hpp"
#include "sdlkit/generators.hpp"
#include "sdlkit/sdl.hpp"

using namespace sdlkit;

namespace {

// Chain 2 > 1 > 0 over Z3 with φ_{2,1} = φ_{1,0} = a and φ_{2,0} = given.
FamilyInstance chain3_z3(const HomMap& a, const HomMap& top_to_bottom) {
  const auto z3 = cyclic_group(3);
  IsoFamily phi;
  for (Element x = 0; x < 3; ++x) phi.set(x, x, HomMap::identity(3));
  phi.set(2, 1, a);
  phi.set(1, 0, a);
  phi.set(2, 0, top_to_bottom);
  return {GroupComponentFamily(chain_lattice(3), {z3, z3, z3}), std::move(phi)};
}

}  // namespace

TEST(GroupComponentFamily, SizesMustMatch) {
  EXPECT_THROW(GroupComponentFamily(chain_lattice(2), {cyclic_group(2)}), std::invalid_argument);
  const GroupComponentFamily f(chain_lattice(2), {cyclic_group(2), cyclic_group(3)});
  EXPECT_EQ(f.total_order(), 5u);
  EXPECT_EQ(component_offsets(f), (std::vector<Element>{0, 2}));
}

TEST(IsoFamily, MissingKeyThrows) {
  IsoFamily f;
  f.set(1, 0, HomMap::identity(2));
  EXPECT_TRUE(f.contains(1, 0));
  EXPECT_FALSE(f.contains(0, 1));
  EXPECT_THROW(f.at(0, 1), std::out_of_range);
}

TEST(ValidateIsoFamily, ConstantFamilyIsValid) {
  const auto inst = constant_family(boolean_lattice(2), symmetric_group_3());
  EXPECT_TRUE(validate_iso_family(inst.family, inst.phi).ok());
  EXPECT_EQ(inst.phi.size(), 9u);
}

TEST(ValidateIsoFamily, SquareOfDoublingOnZ3IsIdentity) {
  // a = x ↦ 2x has order 2 on Z3, so a then a = identity and a family with
  // φ_{2,0} = identity composes correctly.
  const auto a = cyclic_multiplier(3, 2);
  EXPECT_EQ(a.then(a), HomMap::identity(3));
  const auto inst = chain3_z3(a, HomMap::identity(3));
  EXPECT_TRUE(validate_iso_family(inst.family, inst.phi).ok());
}

TEST(ValidateIsoFamily, Sdl2ViolationWitness) {
  const auto inst = sdl2_violating_family();
  const auto a = cyclic_multiplier(3, 2);
  // Oracle: compose the two one-step maps, find the first differing element.
  const auto composite = inst.phi.at(2, 1).then(inst.phi.at(1, 0));
  std::optional<Element> first;
  for (Element x = 0; x < 3 && !first; ++x)
    if (composite(x) != inst.phi.at(2, 0)(x)) first = x;
  ASSERT_TRUE(first);
  EXPECT_EQ(*first, 1u);

  const auto report = validate_iso_family(inst.family, inst.phi);
  ASSERT_EQ(report.violations.size(), 1u);
  const auto& v = report.violations.front();
  EXPECT_EQ(v.kind, IsoViolation::Kind::Sdl2);
  EXPECT_EQ(v.where, (std::vector<Element>{2, 1, 0}));
  EXPECT_EQ(v.element, first);
  EXPECT_NE(report.summary().find("SDL2"), std::string::npos);
  EXPECT_EQ(inst.phi.at(2, 0), a);
}

TEST(ValidateIsoFamily, ReportsEachKindOfViolation) {
  const auto z2 = cyclic_group(2);
  const GroupComponentFamily fam(chain_lattice(2), {z2, z2});
  {
    IsoFamily phi;
    phi.set(0, 0, HomMap::identity(2));
    phi.set(1, 1, HomMap::identity(2));
    const auto r = validate_iso_family(fam, phi);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violations[0].kind, IsoViolation::Kind::MissingKey);
    EXPECT_EQ(r.violations[0].where, (std::vector<Element>{1, 0}));
  }
  {
    auto phi = constant_family(chain_lattice(2), z2).phi;
    phi.set(0, 1, HomMap::identity(2));
    EXPECT_EQ(validate_iso_family(fam, phi).violations[0].kind, IsoViolation::Kind::UnexpectedKey);
  }
  {
    auto phi = constant_family(chain_lattice(2), z2).phi;
    phi.set(1, 0, HomMap(2, {1, 0}));  // not a homomorphism: 0 ↦ 1
    const auto r = validate_iso_family(fam, phi);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violations[0].kind, IsoViolation::Kind::NotHomomorphism);
  }
  {
    auto phi = constant_family(chain_lattice(2), z2).phi;
    phi.set(1, 0, HomMap(2, {0, 0}));  // trivial homomorphism, not bijective
    const auto r = validate_iso_family(fam, phi);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violations[0].kind, IsoViolation::Kind::NotBijective);
  }
  {
    auto phi = constant_family(chain_lattice(1), cyclic_group(3)).phi;
    phi.set(0, 0, cyclic_multiplier(3, 2));
    const GroupComponentFamily one(chain_lattice(1), {cyclic_group(3)});
    const auto r = validate_iso_family(one, phi);
    ASSERT_FALSE(r.ok());
    EXPECT_EQ(r.violations[0].kind, IsoViolation::Kind::Sdl1);
  }
}

TEST(ValidateIsoFamily, SizeMismatchThrows) {
  const GroupComponentFamily fam(chain_lattice(2), {cyclic_group(2), cyclic_group(2)});
  auto phi = constant_family(chain_lattice(2), cyclic_group(2)).phi;
  phi.set(1, 0, HomMap::identity(3));
  EXPECT_THROW(validate_iso_family(fam, phi), std::invalid_argument);
}

TEST(DerivePsi, InvertsPermutationTables) {
  IsoFamily phi;
  phi.set(1, 0, cyclic_multiplier(5, 2));
  const auto psi = derive_psi(phi);
  EXPECT_EQ(psi.at(0, 1), cyclic_multiplier(5, 3));
  // Oracle: invert the table directly.
  std::vector<Element> inv(5);
  for (Element x = 0; x < 5; ++x) inv[(2 * x) % 5] = x;
  EXPECT_EQ(psi.at(0, 1).map(), inv);
  EXPECT_EQ(derive_psi(psi), phi);

  IsoFamily bad;
  bad.set(1, 0, HomMap(2, {0, 0}));
  EXPECT_THROW(derive_psi(bad), std::invalid_argument);
}

TEST(Compatibility, TwistedBooleanZ3) {
  const auto inst = twisted_family(boolean_lattice(2), cyclic_group(3), cyclic_multiplier(3, 2));
  const auto psi = derive_psi(inst.phi);
  EXPECT_TRUE(check_psi_family(inst.family.lattice(), psi));
  EXPECT_TRUE(check_clause_iii(inst.family.lattice(), inst.phi, psi));
  EXPECT_TRUE(check_compatibility(inst.family, inst.phi));

  // Oracle: enumerate the qualifying quadruples directly.
  const auto& l = inst.family.lattice();
  std::size_t quadruples = 0;
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b)
      for (Element c = 0; c < 4; ++c)
        for (Element d = 0; d < 4; ++d) {
          if (!l.leq(l.join(a, b), d) || !l.leq(c, l.meet(a, b))) continue;
          ++quadruples;
          for (Element x = 0; x < 3; ++x)
            EXPECT_EQ(psi.at(c, b)(inst.phi.at(a, c)(x)), inst.phi.at(d, b)(psi.at(a, d)(x)));
        }
  EXPECT_GT(quadruples, 0u);
}

TEST(Compatibility, DetectsBrokenPsi) {
  const auto inst = constant_family(chain_lattice(2), cyclic_group(3));
  auto psi = derive_psi(inst.phi);
  psi.set(0, 1, cyclic_multiplier(3, 2));
  EXPECT_FALSE(check_compatibility(inst.family.lattice(), inst.phi, psi));
  EXPECT_FALSE(check_clause_iii(inst.family.lattice(), inst.phi, psi));
  // Taken alone the ψ family is still consistent on a 2-chain.
  EXPECT_TRUE(check_psi_family(inst.family.lattice(), psi));

  psi.set(1, 1, cyclic_multiplier(3, 2));
  EXPECT_FALSE(check_psi_family(inst.family.lattice(), psi));
}

TEST(BuildStrongSdl, SingletonLatticeIsTheGroupSemiring) {
  for (auto flavor : {AddFlavor::LeftZero, AddFlavor::RightZero}) {
    const auto g = symmetric_group_3();
    const auto inst = constant_family(chain_lattice(1), g);
    const auto s = build_strong_sdl(inst.family, inst.phi, {true, flavor});
    const auto gs = make_group_semiring(g, flavor);
    EXPECT_EQ(s.add, gs.add);
    EXPECT_EQ(s.mul, gs.mul);
  }
}

TEST(BuildStrongSdl, TwoChainZ2Tables) {
  const auto inst = constant_family(chain_lattice(2), cyclic_group(2));
  const auto s = build_strong_sdl(inst.family, inst.phi);
  // Carrier: 0:0 0:1 1:0 1:1. Products meet down to component 0, sums join up.
  EXPECT_EQ(s.mul, BinaryOpTable::from_rows({{0, 1, 0, 1}, {1, 0, 1, 0}, {0, 1, 2, 3}, {1, 0, 3, 2}}));
  EXPECT_EQ(s.add, BinaryOpTable::from_rows({{0, 0, 2, 2}, {1, 1, 3, 3}, {2, 2, 2, 2}, {3, 3, 3, 3}}));
  ASSERT_TRUE(s.labeling);
  EXPECT_EQ((*s.labeling)[3], (Label{1, 1}));
}

TEST(BuildStrongSdl, BooleanS3ConjugationPassesExhaustiveCheck) {
  const auto g = symmetric_group_3();
  const auto inst = twisted_family(boolean_lattice(2), g, conjugation(g, 1));
  const auto s = build_strong_sdl(inst.family, inst.phi);
  EXPECT_EQ(s.size(), 24u);
  EXPECT_TRUE(oracle::is_semiring(oracle::rows_of(s.add), oracle::rows_of(s.mul)));
  EXPECT_TRUE(check_component_closure(s, inst.family.lattice()));
}

TEST(BuildStrongSdl, RightFlavorIsAlsoASemiring) {
  const auto g = cyclic_group(4);
  const auto inst = twisted_family(chain_lattice(3), g, cyclic_multiplier(4, 3));
  const auto s = build_strong_sdl(inst.family, inst.phi, {true, AddFlavor::RightZero});
  EXPECT_TRUE(oracle::is_semiring(oracle::rows_of(s.add), oracle::rows_of(s.mul)));
  EXPECT_TRUE(is_right_normal_band(s.add));
}

TEST(BuildStrongSdl, RejectsInvalidFamily) {
  const auto inst = sdl2_violating_family();
  try {
    build_strong_sdl(inst.family, inst.phi);
    FAIL() << "expected BuildError";
  } catch (const BuildError& e) {
    EXPECT_FALSE(e.report().ok());
    EXPECT_EQ(e.report().violations[0].kind, IsoViolation::Kind::Sdl2);
  }
}

TEST(BuildStrongSdl, SumsDependOnlyOnTheComponentOfTheRightOperand) {
  const auto inst = twisted_family(chain_lattice(3), cyclic_group(4), cyclic_multiplier(4, 3));
  const auto s = build_strong_sdl(inst.family, inst.phi);
  const auto& labels = *s.labeling;
  for (Element x = 0; x < s.size(); ++x)
    for (Element y = 0; y < s.size(); ++y)
      for (Element y2 = 0; y2 < s.size(); ++y2)
        if (labels[y].component == labels[y2].component) EXPECT_EQ(s.add(x, y), s.add(x, y2));
}

TEST(BuildStrongSdl, DoubleInversionRecoversPhi) {
  const auto g = symmetric_group_3();
  const auto inst = twisted_family(divisor_lattice(12), g, conjugation(g, 1));
  EXPECT_EQ(derive_psi(derive_psi(inst.phi)), inst.phi);
}

TEST(CheckComponentClosure, DetectsMisplacedProduct) {
  const auto inst = constant_family(chain_lattice(2), cyclic_group(2));
  auto s = build_strong_sdl(inst.family, inst.phi);
  auto rows = oracle::rows_of(s.mul);
  rows[2][3] = 0;  // 1:0 · 1:1 should stay in component 1
  s.mul = BinaryOpTable::from_rows(rows);
  const auto v = check_component_closure(s, inst.family.lattice());
  EXPECT_FALSE(v);
  EXPECT_EQ(v.witness, (std::vector<Element>{2, 3}));
}
