#include <gtest/gtest.h>

#include "cnct/catalog.hpp"
#include "cnct/error.hpp"
#include "cnct/lcg.hpp"
#include "cnct/structure.hpp"
#include "test_support.hpp"

namespace cnct {
namespace {

using testing::all_dissociations;
using testing::random_set_family;

// Brute-force axiom check on a membership list, independent of the library.
bool closed_by_brute_force(GroundSet g, const std::vector<Subset>& sets) {
  std::vector<bool> in(g.subset_count(), false);
  in[0] = true;
  for (int i = 1; i <= g.size(); ++i) in[1U << (i - 1)] = true;
  for (Subset s : sets) in[s.bits()] = true;
  for (std::uint32_t a = 0; a < g.subset_count(); ++a) {
    for (std::uint32_t b = 0; b < g.subset_count(); ++b) {
      if (in[a] && in[b] && (a & b) && !in[a | b]) return false;
    }
  }
  return true;
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Parse;
}

std::vector<ConnectivityStructure> small_structures() {
  std::vector<ConnectivityStructure> all;
  for (int n = 1; n <= 4; ++n) {
    const auto catalog = enumerate_structures(GroundSet(n));
    all.insert(all.end(), catalog.structures.begin(), catalog.structures.end());
  }
  // A seeded slice of n = 5 keeps the run short.
  const auto five = enumerate_structures(GroundSet(5));
  for (std::size_t i : sample_indices(five.structures.size(), 150, 7)) {
    all.push_back(five.structures[i]);
  }
  return all;
}

const std::vector<ConnectivityStructure>& structures() {
  static const std::vector<ConnectivityStructure> all = small_structures();
  return all;
}

TEST(ValidateStructureTest, Examples) {
  const GroundSet g2(2);
  const std::vector<Subset> trivial{Subset(), Subset::of({1}), Subset::of({2})};
  EXPECT_EQ(validate_structure(g2, trivial), ConnectivityStructure::discrete(g2));

  const GroundSet g3(3);
  const std::vector<Subset> open{Subset(),           Subset::of({1}),    Subset::of({2}),
                                 Subset::of({3}),    Subset::of({1, 2}), Subset::of({2, 3})};
  EXPECT_EQ(kind_of([&] { validate_structure(g3, open); }), ErrorKind::NotClosed);

  std::vector<Subset> closed = open;
  closed.push_back(Subset::of({1, 2, 3}));
  ASSERT_TRUE(closed_by_brute_force(g3, closed));
  const ConnectivityStructure k = validate_structure(g3, closed);
  EXPECT_EQ(k.members().size(), 7U);

  EXPECT_EQ(kind_of([&] { validate_structure(g2, std::vector<Subset>{Subset::of({3})}); }),
            ErrorKind::OutOfRange);
}

TEST(ValidateStructureTest, NotClosedMessageNamesThePair) {
  const std::vector<Subset> open{Subset::of({1, 2}), Subset::of({2, 3})};
  try {
    validate_structure(GroundSet(3), open);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("{1,2}"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("{2,3}"), std::string::npos);
  }
}

TEST(ValidateStructureTest, CanonicalOrder) {
  const std::vector<Subset> sets{Subset::of({1, 2, 3}), Subset::of({2, 3}), Subset::of({1, 2})};
  const auto k = validate_structure(GroundSet(3), sets);
  EXPECT_TRUE(std::is_sorted(k.members().begin(), k.members().end(), CanonicalLess{}));
  EXPECT_EQ(k.members().front(), Subset());
  EXPECT_EQ(k.members().back(), Subset::of({1, 2, 3}));
}

TEST(GenerateTest, Examples) {
  const GroundSet g3(3);
  EXPECT_EQ(generate(g3, {}).members(),
            (std::vector<Subset>{Subset(), Subset::of({1}), Subset::of({2}), Subset::of({3})}));
  const std::vector<Subset> chain{Subset::of({1, 2}), Subset::of({2, 3})};
  EXPECT_TRUE(generate(g3, chain).contains(Subset::of({1, 2, 3})));

  const GroundSet g4(4);
  const std::vector<Subset> apart{Subset::of({1, 2}), Subset::of({3, 4})};
  EXPECT_EQ(generate(g4, apart).members(),
            (std::vector<Subset>{Subset(), Subset::of({1}), Subset::of({2}), Subset::of({3}),
                                 Subset::of({4}), Subset::of({1, 2}), Subset::of({3, 4})}));
  EXPECT_EQ(kind_of([&] { generate(g3, std::vector<Subset>{Subset::of({4})}); }),
            ErrorKind::OutOfRange);
}

TEST(GenerateTest, OutputAlwaysClosed) {
  Lcg rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const GroundSet g(1 + static_cast<int>(rng.below(5)));
    const auto gens = random_set_family(rng, g, 5);
    const auto k = generate(g, gens);
    EXPECT_TRUE(closed_by_brute_force(g, k.members()));
    for (Subset s : gens) EXPECT_TRUE(k.contains(s));
  }
}

TEST(GammaTest, Examples) {
  const GroundSet g3(3);
  const std::vector<Subset> chain{Subset::of({1, 2}), Subset::of({2, 3})};
  EXPECT_EQ(gamma(g3, chain), generate(g3, chain));
  EXPECT_EQ(gamma(GroundSet(2), {}), ConnectivityStructure::discrete(GroundSet(2)));

  const GroundSet g4(4);
  const std::vector<Subset> whole{Subset::of({1, 2, 3, 4})};
  EXPECT_EQ(gamma(g4, whole).members(),
            (std::vector<Subset>{Subset(), Subset::of({1}), Subset::of({2}), Subset::of({3}),
                                 Subset::of({4}), Subset::of({1, 2, 3, 4})}));
}

TEST(GammaTest, FixedPointOnEveryStructure) {
  for (const auto& k : structures()) EXPECT_EQ(gamma(k.ground(), k.members()), k);
}

TEST(GammaTest, AgreesWithGenerate) {
  Lcg rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const GroundSet g(1 + static_cast<int>(rng.below(5)));
    const auto family = random_set_family(rng, g, 5);
    EXPECT_EQ(gamma(g, family), generate(g, family));
  }
}

TEST(RestrictTest, Examples) {
  const GroundSet g3(3);
  const auto gross = ConnectivityStructure::gross(g3);
  EXPECT_EQ(restrict(gross, Subset::of({1, 2})).members(),
            (std::vector<Subset>{Subset(), Subset::of({1}), Subset::of({2}), Subset::of({3}),
                                 Subset::of({1, 2})}));
  EXPECT_EQ(restrict(gross, Subset::whole(g3)), gross);

  const std::vector<Subset> chain{Subset::of({1, 2}), Subset::of({2, 3})};
  const auto k = restrict(generate(g3, chain), Subset::of({1, 3}));
  std::vector<Subset> inside;
  for (Subset s : k.members()) {
    if (Subset::of({1, 3}).includes(s)) inside.push_back(s);
  }
  EXPECT_EQ(inside, (std::vector<Subset>{Subset(), Subset::of({1}), Subset::of({3})}));
}

TEST(RestrictTest, IdentityOnWholeSetAndIntegral) {
  for (const auto& k : structures()) {
    EXPECT_EQ(restrict(k, Subset::whole(k.ground())), k);
    for_each_subset_of(Subset::whole(k.ground()), [&](Subset j) {
      const auto r = restrict(k, j);
      EXPECT_TRUE(closed_by_brute_force(k.ground(), r.members()));
    });
  }
}

TEST(IrreduciblesTest, Examples) {
  const GroundSet g3(3);
  EXPECT_EQ(irreducibles(ConnectivityStructure::gross(g3)),
            (std::vector<Subset>{Subset::of({1, 2}), Subset::of({1, 3}), Subset::of({2, 3})}));
  EXPECT_TRUE(irreducibles(ConnectivityStructure::discrete(g3)).empty());
  const std::vector<Subset> whole{Subset::of({1, 2, 3})};
  EXPECT_EQ(irreducibles(generate(g3, whole)), whole);
}

TEST(IrreduciblesTest, GrossCountIsPairs) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(irreducibles(ConnectivityStructure::gross(GroundSet(n))).size(),
              static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST(IrreduciblesTest, GenerateTheStructure) {
  for (const auto& k : structures()) EXPECT_EQ(generate(k.ground(), irreducibles(k)), k);
}

// A structure and its irreducibles contest exactly the same dissociations.
TEST(IrreduciblesTest, ValidateTheSameDissociations) {
  for (const auto& k : structures()) {
    if (k.ground().size() > 4) continue;
    const auto irr = irreducibles(k);
    for (const Dissociation& d : all_dissociations(k.ground())) {
      EXPECT_EQ(family_contests(k.members(), d), family_contests(irr, d));
    }
  }
}

// Members are exactly the sets all of whose dissociations are contested by an
// irreducible.
TEST(IrreduciblesTest, CharacterizeMembers) {
  for (const auto& k : structures()) {
    const auto irr = irreducibles(k);
    for (std::uint32_t bits = 0; bits < k.ground().subset_count(); ++bits) {
      const Subset a(bits);
      bool all_contested = true;
      for (const Dissociation& d : enumerate_dissociations(a)) {
        if (!family_contests(irr, d)) all_contested = false;
      }
      EXPECT_EQ(all_contested, k.contains(a)) << a.to_string();
    }
  }
}

// For overlapping K1, K2 every dissociation of their union is contested by one
// of them, which then restricts it.
TEST(JoinedUnionTest, OneSideContests) {
  const GroundSet g(5);
  for (std::uint32_t a = 1; a < g.subset_count(); ++a) {
    for (std::uint32_t b = 1; b < g.subset_count(); ++b) {
      const Subset k1(a), k2(b);
      if (!k1.intersects(k2)) continue;
      for (const Dissociation& d : enumerate_dissociations(k1 | k2)) {
        const bool c1 = contests(k1, d);
        const bool c2 = contests(k2, d);
        ASSERT_TRUE(c1 || c2);
        const Subset chosen = c1 ? k1 : k2;
        EXPECT_EQ(restrict_dissociation(d, chosen).domain(), chosen);
      }
    }
  }
}

TEST(SumTest, Examples) {
  const GroundSet g3(3);
  const auto discrete = ConnectivityStructure::discrete(g3);
  const auto gross = ConnectivityStructure::gross(g3);
  const std::vector<Subset> a{Subset::of({1, 2})};
  const std::vector<Subset> b{Subset::of({2, 3})};
  const std::vector<Subset> ab{Subset::of({1, 2}), Subset::of({2, 3})};
  const auto k = generate(g3, a);
  EXPECT_EQ(sum(k, discrete), k);
  EXPECT_EQ(sum(k, gross), gross);
  EXPECT_EQ(sum(generate(g3, a), generate(g3, b)), generate(g3, ab));
  EXPECT_EQ(kind_of([&] { sum(k, ConnectivityStructure::discrete(GroundSet(4))); }),
            ErrorKind::GroundMismatch);
}

TEST(SumTest, GeneratedByUnionOfIrreducibles) {
  const auto catalog = enumerate_structures(GroundSet(4));
  Lcg rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& k1 = catalog.structures[rng.below(catalog.structures.size())];
    const auto& k2 = catalog.structures[rng.below(catalog.structures.size())];
    EXPECT_EQ(sum(k1, k2), generate(k1.ground(), testing::sorted_union(irreducibles(k1),
                                                                       irreducibles(k2))));
  }
}

TEST(SumTest, AlgebraOnThreeElements) {
  const auto catalog = enumerate_structures(GroundSet(3));
  const auto& all = catalog.structures;
  const auto discrete = all.front();
  const auto gross = all.back();
  for (const auto& a : all) {
    EXPECT_EQ(sum(a, a), a);
    EXPECT_EQ(sum(a, discrete), a);
    EXPECT_EQ(sum(a, gross), gross);
    for (const auto& b : all) {
      EXPECT_EQ(sum(a, b), sum(b, a));
      for (const auto& c : all) EXPECT_EQ(sum(sum(a, b), c), sum(a, sum(b, c)));
    }
  }
}

TEST(IntersectionTest, IsAnIntegralStructure) {
  const auto catalog = enumerate_structures(GroundSet(4));
  Lcg rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& k1 = catalog.structures[rng.below(catalog.structures.size())];
    const auto& k2 = catalog.structures[rng.below(catalog.structures.size())];
    const auto k = intersection(k1, k2);
    EXPECT_TRUE(closed_by_brute_force(k.ground(), k.members()));
    EXPECT_TRUE(is_substructure(k, k1));
    EXPECT_TRUE(is_substructure(k, k2));
  }
}

TEST(ComponentsTest, Examples) {
  const GroundSet g3(3);
  EXPECT_EQ(connected_components(ConnectivityStructure::discrete(g3)).components(),
            (std::vector<Subset>{Subset::of({1}), Subset::of({2}), Subset::of({3})}));
  EXPECT_EQ(connected_components(ConnectivityStructure::gross(g3)).components(),
            (std::vector<Subset>{Subset::of({1, 2, 3})}));
  const std::vector<Subset> a{Subset::of({1, 2})};
  EXPECT_EQ(connected_components(generate(GroundSet(4), a)).components(),
            (std::vector<Subset>{Subset::of({1, 2}), Subset::of({3}), Subset::of({4})}));
}

TEST(ComponentsTest, MaximalMembersPartitionTheGround) {
  for (const auto& k : structures()) {
    const auto parts = connected_components(k);
    Subset covered;
    for (Subset c : parts.components()) {
      EXPECT_TRUE(k.contains(c));
      EXPECT_FALSE(covered.intersects(c));
      covered = covered | c;
      for (Subset s : k.members()) {
        if (s.includes(c)) EXPECT_EQ(s, c);
      }
    }
    EXPECT_EQ(covered, Subset::whole(k.ground()));
  }
}

TEST(IsAdaptedTest, Examples) {
  const GroundSet g3(3);
  const ComponentPartition parts(g3, {Subset::of({1, 2}), Subset::of({3})});
  EXPECT_TRUE(is_adapted(Dissociation(Subset::of({1, 2}), Subset::of({3})), parts));
  EXPECT_FALSE(is_adapted(Dissociation(Subset::of({1, 3}), Subset::of({2})), parts));
  const auto singletons = connected_components(ConnectivityStructure::discrete(g3));
  for (const auto& d : enumerate_dissociations(Subset::whole(g3))) {
    EXPECT_TRUE(is_adapted(d, singletons));
  }
  EXPECT_EQ(kind_of([&] { is_adapted(Dissociation(Subset::of({1}), Subset::of({2})), parts); }),
            ErrorKind::NotGlobal);
}

// A global dissociation is respected by the structure iff it is adapted to its
// components.
TEST(IsAdaptedTest, CharacterizesRespectedGlobalDissociations) {
  for (const auto& k : structures()) {
    const auto parts = connected_components(k);
    for (const auto& d : enumerate_dissociations(Subset::whole(k.ground()))) {
      EXPECT_EQ(!family_contests(k.members(), d), is_adapted(d, parts));
    }
  }
}

}  // namespace
}  // namespace cnct
